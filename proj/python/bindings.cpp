#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "settop/cli.hpp"
#include "settop/complexes.hpp"
#include "settop/families.hpp"
#include "settop/homology.hpp"
#include "settop/lattice.hpp"
#include "settop/smith.hpp"

#include <sstream>

namespace py = pybind11;
using namespace settop;

namespace {

FamilyKind kind_of(const std::string& name, int s) {
    auto kind = FamilyKind::parse(name, s);
    if (!kind)
        throw py::value_error("unknown family '" + name + "'");
    return *kind;
}

py::object to_py(const Integer& v) {
    const std::string text = v.str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(text.c_str(), nullptr, 10));
}

py::list groups_to_py(const std::vector<HomologyGroup>& groups) {
    py::list out;
    for (const auto& g : groups) {
        py::list torsion;
        for (const auto& t : g.torsion)
            torsion.append(to_py(t));
        py::dict d;
        d["rank"] = g.rank;
        d["torsion"] = torsion;
        d["group"] = g.to_string();
        out.append(d);
    }
    return out;
}

std::vector<std::vector<int>> sets_to_lists(const std::vector<BitSubset>& sets) {
    std::vector<std::vector<int>> out;
    for (const auto& s : sets)
        out.push_back(s.elements());
    return out;
}

} // namespace

PYBIND11_MODULE(_settop, m) {
    m.doc() = "Number-theoretic set families, their complexes and integer homology";

    py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

    m.def("family_names", [] {
        std::vector<std::string> out;
        for (auto k : all_family_kinds())
            out.push_back(k.name());
        return out;
    });

    m.def("is_member",
          [](const std::string& family, std::vector<int> elements, int s) {
              return is_member(kind_of(family, s), elements);
          },
          py::arg("family"), py::arg("elements"), py::arg("s") = 1);

    m.def("count_table",
          [](const std::string& family, int n_max, int s, int guard) {
              const auto t = count_triangle(kind_of(family, s), n_max, guard);
              std::vector<std::vector<std::int64_t>> rows;
              for (int n = 1; n <= n_max; ++n)
                  rows.push_back(t.row(n));
              return rows;
          },
          py::arg("family"), py::arg("n_max"), py::arg("s") = 1,
          py::arg("guard") = default_enumeration_guard,
          "Rows n = 1..n_max of F_{n,k}, k = 0..n.");

    m.def("alt_sum",
          [](const std::string& family, int n, int s) { return alt_sum(kind_of(family, s), n); },
          py::arg("family"), py::arg("n"), py::arg("s") = 1);

    m.def("maximal_members",
          [](const std::string& family, int n, int s) {
              return sets_to_lists(maximal_members(kind_of(family, s), n));
          },
          py::arg("family"), py::arg("n"), py::arg("s") = 1);

    m.def("partition",
          [](const std::string& family, int n, int s) {
              const auto r = partition_components(kind_of(family, s), n);
              py::dict d;
              if (const auto* c = std::get_if<PartitionClasses>(&r)) {
                  py::list classes;
                  for (const auto& cls : c->classes)
                      classes.append(sets_to_lists(cls));
                  d["ok"] = true;
                  d["m"] = c->m();
                  d["classes"] = classes;
                  d["cores"] = sets_to_lists(c->cores);
              } else {
                  const auto& w = std::get<FailureWitness>(r);
                  d["ok"] = false;
                  d["component"] = sets_to_lists(w.component);
                  d["witness"] = py::make_tuple(w.first.elements(), w.second.elements());
              }
              return d;
          },
          py::arg("family"), py::arg("n"), py::arg("s") = 1);

    m.def("face_complex",
          [](const std::string& family, int n, int s) { return face_complex(kind_of(family, s), n).facets(); },
          py::arg("family"), py::arg("n"), py::arg("s") = 1, "Facets of the complex of members.");

    m.def("coprime_free_collapsed", [](int n) { return coprime_free_collapsed(n).facets(); },
          py::arg("n"));

    m.def("strong_collapse",
          [](std::vector<Face> facets) {
              return strong_collapse(SimplicialComplex::from_facets(std::move(facets))).facets();
          },
          py::arg("facets"));

    m.def("nerve", [](const std::vector<std::vector<int>>& sets) { return nerve(sets).facets(); },
          py::arg("sets"));

    m.def("reduced_homology",
          [](std::vector<Face> facets, int d_max, bool torsion) {
              HomologyOptions options;
              options.torsion = torsion;
              return groups_to_py(
                  reduced_homology(SimplicialComplex::from_facets(std::move(facets)), d_max, options));
          },
          py::arg("facets"), py::arg("d_max"), py::arg("torsion") = true);

    m.def("homology",
          [](const std::string& family, int n, int d_max, bool collapse, int s) {
              const auto kind = kind_of(family, s);
              SimplicialComplex c = kind.tag == FamilyTag::CoprimeFree && collapse
                                        ? coprime_free_collapsed(n)
                                        : face_complex(kind, n);
              if (collapse && kind.tag != FamilyTag::CoprimeFree)
                  c = strong_collapse(c);
              return groups_to_py(reduced_homology(c, d_max));
          },
          py::arg("family"), py::arg("n"), py::arg("d_max") = 2, py::arg("collapse") = true,
          py::arg("s") = 1);

    m.def("scan_h2",
          [](int n_from, int n_to) {
              py::list out;
              for (const auto& e : cli::scan_second_homology(n_from, n_to))
                  out.append(py::make_tuple(e.n, e.group));
              return out;
          },
          py::arg("n_from"), py::arg("n_to"));

    m.def("smith_normal_form",
          [](const std::vector<std::vector<long long>>& dense) {
              const auto snf = smith_normal_form(SparseIntMatrix::from_dense(dense));
              py::list factors;
              for (const auto& f : snf.factors)
                  factors.append(to_py(f));
              return py::make_tuple(factors, snf.rank);
          },
          py::arg("matrix"));

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out;
              std::ostringstream err;
              const int code = cli::run(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Runs the command line front end; returns (exit code, stdout, stderr).");
}
