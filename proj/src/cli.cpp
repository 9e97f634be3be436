#include "settop/cli.hpp"

#include "settop/bfile.hpp"
#include "settop/complexes.hpp"
#include "settop/homology.hpp"
#include "settop/lattice.hpp"
#include "settop/numthy.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace settop::cli {

namespace {

Value torsion_cell(const std::vector<Integer>& torsion) {
    Value arr = Value::array();
    for (const auto& t : torsion)
        arr.push_back(t.str());
    return arr;
}

Value family_param(FamilyKind kind) { return kind.name(); }

void add_family_params(OutputRecord& r, FamilyKind kind) {
    r.parameters.emplace_back("family", family_param(kind));
    if (kind.tag == FamilyTag::SMultiple)
        r.parameters.emplace_back("s", kind.s);
}

std::string subset_text(const BitSubset& s) {
    std::string out;
    for (int i : s.elements()) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(i);
    }
    return out;
}

// Strips isolated vertices; they only contribute to H~_0.
SimplicialComplex without_isolated(const SimplicialComplex& c) {
    std::vector<Face> faces;
    for (const auto& f : c.facets())
        if (f.size() > 1)
            faces.push_back(f);
    return SimplicialComplex::from_facets(std::move(faces));
}

} // namespace

std::optional<long long> expected_alt_sum(FamilyKind kind, int n) {
    if (n < 2)
        return std::nullopt;
    switch (kind.tag) {
    case FamilyTag::Primitive:
        return -1;
    case FamilyTag::PairwiseCoprime:
    case FamilyTag::ProductFree:
    case FamilyTag::DistinctPairProducts:
    case FamilyTag::DivisibilityChain:
        return 0;
    case FamilyTag::NoDivisorOfPairProduct:
        // {1} is an isolated maximal member, giving two classes.
        return -1;
    case FamilyTag::SMultiple: {
        if (n <= kind.s)
            return 0;  // every subset of [n] qualifies
        const long long b = binomial(n - 2, kind.s - 1);
        return kind.s % 2 == 0 ? b : -b;
    }
    case FamilyTag::CoprimeFree:
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<ScanEntry> scan_second_homology(int n_from, int n_to) {
    std::vector<ScanEntry> out;
    for (int n = std::max(1, n_from); n <= n_to; ++n) {
        const auto main_part = without_isolated(coprime_free_collapsed(n));
        ScanEntry e;
        e.n = n;
        HomologyGroup h2;
        if (main_part.dimension() >= 1)
            h2 = reduced_homology(main_part, 2).at(2);
        e.rank = h2.rank;
        for (const auto& t : h2.torsion)
            e.torsion.push_back(t.str());
        e.group = h2.to_string();
        out.push_back(std::move(e));
    }
    return out;
}

int cmd_table(FamilyKind kind, int n_max, const CommandContext& ctx) {
    const auto t = count_triangle(kind, n_max, ctx.guard);
    OutputRecord r;
    r.command = "table";
    add_family_params(r, kind);
    r.parameters.emplace_back("n", n_max);
    r.columns = {"n", "k", "count"};
    Value keyed = Value::object();
    for (int n = 1; n <= n_max; ++n) {
        Value row = Value::array();
        for (int k = 0; k <= n; ++k) {
            r.rows.push_back({n, k, t.at(n, k)});
            row.push_back(t.at(n, k));
        }
        keyed[std::to_string(n)] = row;
    }
    r.keyed = keyed;
    r.keyed_name = "counts";
    write(r, ctx.format, *ctx.out);
    return ok;
}

int cmd_altsum(FamilyKind kind, int n_from, int n_to, const CommandContext& ctx) {
    if (n_from < 1 || n_to < n_from) {
        *ctx.err << "altsum: need 1 <= n-from <= n-to\n";
        return usage_error;
    }
    const auto t = count_triangle(kind, n_to, ctx.guard);
    OutputRecord r;
    r.command = "altsum";
    add_family_params(r, kind);
    r.parameters.emplace_back("n_from", n_from);
    r.parameters.emplace_back("n_to", n_to);
    r.columns = {"n", "altsum", "expected", "verdict"};
    bool all_pass = true;
    bool any_expected = false;
    std::vector<bool> pass(static_cast<std::size_t>(n_to) + 1, true);
    for (int n = n_from; n <= n_to; ++n) {
        long long sum = 0;
        for (int k = 0; k <= n; ++k)
            sum += (k % 2 == 0 ? 1 : -1) * t.at(n, k);
        const auto expected = expected_alt_sum(kind, n);
        Value verdict = "n/a";
        if (expected) {
            any_expected = true;
            pass[n] = sum == *expected;
            verdict = pass[n] ? "pass" : "fail";
            all_pass = all_pass && pass[n];
        }
        r.rows.push_back({n, sum, expected ? Value(*expected) : Value(nullptr), verdict});
    }
    // Smallest N such that every n in [N, n_to] with an expected value passes.
    int threshold = n_to + 1;
    while (threshold > n_from && pass[threshold - 1])
        --threshold;
    Value shown = threshold <= n_to ? Value(threshold) : Value("none");
    if (!any_expected)
        shown = "n/a";
    r.summary.emplace_back("threshold", shown);
    r.summary.emplace_back("verdict", all_pass ? "pass" : "fail");
    write(r, ctx.format, *ctx.out);
    return all_pass ? ok : verification_failed;
}

int cmd_homology(FamilyKind kind, int n, int d_max, bool collapse, const CommandContext& ctx) {
    if (n < 1 || d_max < 0) {
        *ctx.err << "homology: need n >= 1 and dmax >= 0\n";
        return usage_error;
    }
    SimplicialComplex c;
    if (kind.tag == FamilyTag::CoprimeFree && collapse)
        c = coprime_free_collapsed(n);
    else {
        c = face_complex(kind, n, ctx.guard);
        if (collapse)
            c = strong_collapse(c);
    }
    const auto groups = reduced_homology(c, d_max);
    OutputRecord r;
    r.command = "homology";
    add_family_params(r, kind);
    r.parameters.emplace_back("n", n);
    r.parameters.emplace_back("dmax", d_max);
    r.parameters.emplace_back("collapse", collapse);
    r.columns = {"d", "rank", "torsion", "group"};
    for (int d = 0; d <= d_max; ++d)
        r.rows.push_back({d, groups[d].rank, torsion_cell(groups[d].torsion), groups[d].to_string()});
    r.summary.emplace_back("vertices", c.vertices().size());
    r.summary.emplace_back("facets", c.facets().size());
    write(r, ctx.format, *ctx.out);
    return ok;
}

int cmd_scan_h2(int n_from, int n_to, const CommandContext& ctx) {
    if (n_from < 1 || n_to < n_from || n_to > 200) {
        *ctx.err << "scan-h2: need 1 <= n-from <= n-to <= 200\n";
        return usage_error;
    }
    const auto entries = scan_second_homology(n_from, n_to);
    OutputRecord r;
    r.command = "scan-h2";
    r.parameters.emplace_back("n_from", n_from);
    r.parameters.emplace_back("n_to", n_to);
    r.columns = {"n", "rank", "torsion", "group"};
    Value first = "none";
    for (const auto& e : entries) {
        Value tors = Value::array();
        for (const auto& t : e.torsion)
            tors.push_back(t);
        r.rows.push_back({e.n, e.rank, tors, e.group});
        if (first.is_string() && (e.rank > 0 || !e.torsion.empty()))
            first = e.n;
    }
    r.summary.emplace_back("first_nontrivial", first);
    write(r, ctx.format, *ctx.out);
    return ok;
}

int cmd_maximal(FamilyKind kind, int n, const CommandContext& ctx) {
    if (n < 2) {
        *ctx.err << "maximal: need n >= 2\n";
        return usage_error;
    }
    const auto coatoms = maximal_members(kind, n, ctx.guard);
    const auto result = partition_components(coatoms);
    OutputRecord r;
    r.command = "maximal";
    add_family_params(r, kind);
    r.parameters.emplace_back("n", n);
    r.columns = {"index", "set", "class"};

    std::vector<int> class_of(coatoms.size(), 0);
    if (const auto* classes = std::get_if<PartitionClasses>(&result)) {
        for (std::size_t c = 0; c < classes->classes.size(); ++c)
            for (const auto& s : classes->classes[c]) {
                auto pos = std::lower_bound(coatoms.begin(), coatoms.end(), s);
                class_of[static_cast<std::size_t>(pos - coatoms.begin())] = static_cast<int>(c) + 1;
            }
    }
    for (std::size_t i = 0; i < coatoms.size(); ++i)
        r.rows.push_back({i + 1, subset_text(coatoms[i]),
                          class_of[i] > 0 ? Value(class_of[i]) : Value(nullptr)});
    r.summary.emplace_back("coatoms", coatoms.size());
    if (const auto* classes = std::get_if<PartitionClasses>(&result)) {
        r.summary.emplace_back("status", "partition");
        r.summary.emplace_back("m", classes->m());
        Value cores = Value::array();
        for (const auto& core : classes->cores)
            cores.push_back(core.to_string());
        r.summary.emplace_back("cores", cores);
    } else {
        const auto& w = std::get<FailureWitness>(result);
        r.summary.emplace_back("status", "failure");
        Value witness = Value::array({w.first.to_string(), w.second.to_string()});
        r.summary.emplace_back("witness", witness);
        Value component = Value::array();
        for (const auto& s : w.component)
            component.push_back(s.to_string());
        r.summary.emplace_back("component", component);
    }
    write(r, ctx.format, *ctx.out);
    return ok;
}

int cmd_oeis_compare(FamilyKind kind, const std::string& bfile_path, const CommandContext& ctx) {
    BFile b;
    try {
        b = read_bfile(bfile_path);
    } catch (const std::exception& e) {
        *ctx.err << "oeis-compare: " << e.what() << '\n';
        return usage_error;
    }
    long long hi = 0;
    for (const auto& [index, value] : b.entries)
        if (index >= 1 && index <= ctx.guard)
            hi = std::max(hi, index);
    OutputRecord r;
    r.command = "oeis-compare";
    add_family_params(r, kind);
    r.parameters.emplace_back("bfile", b.id.empty() ? Value(bfile_path) : Value(b.id));
    r.columns = {"n", "computed", "bfile", "match"};
    if (hi == 0) {
        r.summary.emplace_back("compared", 0);
        r.summary.emplace_back("verdict", "fail");
        write(r, ctx.format, *ctx.out);
        *ctx.err << "oeis-compare: no b-file index inside [1, " << ctx.guard << "]\n";
        return verification_failed;
    }
    const auto t = count_triangle(kind, static_cast<int>(hi), ctx.guard);
    std::size_t compared = 0;
    std::size_t mismatches = 0;
    for (const auto& [index, value] : b.entries) {
        if (index < 1 || index > hi)
            continue;
        const Integer computed = t.row_sum(static_cast<int>(index));
        const bool match = computed == value;
        ++compared;
        if (!match)
            ++mismatches;
        r.rows.push_back({index, computed.str(), value.str(), match ? "yes" : "no"});
    }
    r.summary.emplace_back("compared", compared);
    r.summary.emplace_back("mismatches", mismatches);
    r.summary.emplace_back("verdict", mismatches == 0 ? "pass" : "fail");
    write(r, ctx.format, *ctx.out);
    return mismatches == 0 ? ok : verification_failed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counts, alternating sums and homology of number-theoretic set families"};
    app.require_subcommand(1);

    std::string family_name = "primitive";
    int s = 1;
    int n = 0;
    int n_from = 2;
    int n_to = 0;
    int d_max = 2;
    bool collapse = true;
    std::string format_name = "csv";
    std::string out_path;
    int guard_override = 0;
    std::string bfile;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "csv, tsv or json")
            ->check(CLI::IsMember({"csv", "tsv", "json"}));
        sub->add_option("--out", out_path, "write output to this file");
        sub->add_option("--guard-override", guard_override,
                        "raise the 2^n enumeration cap to this n");
    };
    auto family = [&](CLI::App* sub) {
        sub->add_option("--family", family_name,
                        "primitive, coprime, productfree, coprimefree, smultiple, "
                        "pairproducts, pairdivisor, chain");
        sub->add_option("--s", s, "multiplicity bound for smultiple");
    };

    auto* table = app.add_subcommand("table", "F_{n,k} triangle");
    family(table);
    table->add_option("--n", n, "largest n")->required();
    common(table);

    auto* altsum = app.add_subcommand("altsum", "alternating sums with verdicts");
    family(altsum);
    altsum->add_option("--n-from", n_from);
    altsum->add_option("--n-to", n_to)->required();
    common(altsum);

    auto* homology = app.add_subcommand("homology", "reduced homology of the face complex");
    family(homology);
    homology->add_option("--n", n)->required();
    homology->add_option("--dmax", d_max);
    homology->add_flag("--collapse,!--no-collapse", collapse, "strong collapse first");
    common(homology);

    auto* scan = app.add_subcommand("scan-h2", "H~_2 of coprime-free complexes over a range");
    int scan_from = 1;
    int scan_to = 143;
    scan->add_option("--n-from", scan_from);
    scan->add_option("--n-to", scan_to);
    common(scan);

    auto* maximal = app.add_subcommand("maximal", "maximal members and their partition");
    family(maximal);
    maximal->add_option("--n", n)->required();
    common(maximal);

    auto* oeis = app.add_subcommand("oeis-compare", "row sums against an OEIS b-file");
    family(oeis);
    oeis->add_option("bfile,--bfile", bfile, "b-file path")->required();
    common(oeis);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return usage_error;
    }

    auto kind = FamilyKind::parse(family_name, s);
    if (!kind) {
        err << "unknown family '" << family_name << "'\n";
        return usage_error;
    }

    CommandContext ctx;
    ctx.format = *parse_format(format_name);
    ctx.err = &err;
    if (guard_override > 0) {
        if (guard_override > BitSubset::max_universe) {
            err << "guard override above " << BitSubset::max_universe << " is not supported\n";
            return usage_error;
        }
        ctx.guard = guard_override;
        err << "warning: enumeration guard raised to n = " << guard_override << " (2^"
            << guard_override << " subsets); this may take very long\n";
    }
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "cannot open '" << out_path << "' for writing\n";
            return usage_error;
        }
        ctx.out = &file;
    } else {
        ctx.out = &out;
    }

    try {
        if (*table)
            return cmd_table(*kind, n, ctx);
        if (*altsum)
            return cmd_altsum(*kind, n_from, n_to, ctx);
        if (*homology)
            return cmd_homology(*kind, n, d_max, collapse, ctx);
        if (*scan)
            return cmd_scan_h2(scan_from, scan_to, ctx);
        if (*maximal)
            return cmd_maximal(*kind, n, ctx);
        if (*oeis)
            return cmd_oeis_compare(*kind, bfile, ctx);
    } catch (const GuardExceeded& e) {
        err << "guard exceeded: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace settop::cli
