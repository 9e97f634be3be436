#include "settop/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace settop {

BoundaryMatrix boundary_matrix(const std::vector<std::vector<Face>>& faces, int d) {
    if (d < 0 || static_cast<std::size_t>(d) >= faces.size())
        throw std::invalid_argument("boundary_matrix: faces not enumerated through dimension " +
                                    std::to_string(d));
    const auto& cols = faces[d];
    BoundaryMatrix out;
    out.dim = d;
    out.col_count = cols.size();
    if (d == 0) {
        out.row_count = 1;
        out.matrix = SparseIntMatrix(1, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.matrix.add(0, j, 1);
        return out;
    }
    const auto& rows = faces[d - 1];
    out.row_count = rows.size();
    out.matrix = SparseIntMatrix(rows.size(), cols.size());
    Face boundary_face(static_cast<std::size_t>(d));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Face& sigma = cols[j];
        for (std::size_t omit = 0; omit < sigma.size(); ++omit) {
            std::size_t w = 0;
            for (std::size_t v = 0; v < sigma.size(); ++v)
                if (v != omit)
                    boundary_face[w++] = sigma[v];
            auto it = std::lower_bound(rows.begin(), rows.end(), boundary_face);
            if (it == rows.end() || *it != boundary_face)
                throw std::logic_error("boundary_matrix: face list not downward closed");
            out.matrix.add(static_cast<std::size_t>(it - rows.begin()), j,
                           omit % 2 == 0 ? 1 : -1);
        }
    }
    return out;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int d) {
    return boundary_matrix(faces_by_dimension(c, d), d);
}

std::string HomologyGroup::to_string() const {
    if (trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << 'Z';
        if (rank > 1)
            os << '^' << rank;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first)
            os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& c, int d_max,
                                            HomologyOptions options) {
    if (d_max < 0)
        throw std::invalid_argument("reduced_homology: d_max must be >= 0");
    const auto faces = faces_by_dimension(c, d_max + 1, options.face_limit);

    // rank of the boundary out of dimension d, d = 0..d_max+1
    std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(d_max) + 2, 0);
    std::vector<std::vector<Integer>> torsion(static_cast<std::size_t>(d_max) + 2);
    boundary_rank[0] = faces[0].empty() ? 0 : 1;
    for (int d = 1; d <= d_max + 1; ++d) {
        if (faces[d].empty())
            continue;
        const auto b = boundary_matrix(faces, d);
        if (options.torsion) {
            auto snf = smith_normal_form(b.matrix);
            boundary_rank[d] = snf.rank;
            for (auto& f : snf.factors)
                if (f > 1)
                    torsion[d].push_back(std::move(f));
        } else {
            boundary_rank[d] = matrix_rank(b.matrix);
        }
    }

    std::vector<HomologyGroup> out(static_cast<std::size_t>(d_max) + 1);
    for (int d = 0; d <= d_max; ++d) {
        out[d].rank = faces[d].size() - boundary_rank[d] - boundary_rank[d + 1];
        out[d].torsion = std::move(torsion[d + 1]);
    }
    return out;
}

std::size_t betti_zero_fast(const SimplicialComplex& c) {
    const auto& vs = c.vertices();
    if (vs.empty())
        return 0;
    std::vector<std::size_t> parent(vs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    auto index = [&](Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    std::size_t components = vs.size();
    for (const auto& f : c.facets()) {
        const std::size_t head = find(index(f.front()));
        for (std::size_t k = 1; k < f.size(); ++k) {
            const std::size_t other = find(index(f[k]));
            if (other != find(head)) {
                parent[other] = find(head);
                --components;
            }
        }
    }
    return components - 1;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& c, int d_max) {
    std::vector<std::size_t> f;
    for (const auto& level : faces_by_dimension(c, d_max))
        f.push_back(level.size());
    return f;
}

bool euler_check(const SimplicialComplex& c, int d_max) {
    if (c.dimension() > d_max)
        throw std::invalid_argument("euler_check: complex dimension exceeds d_max");
    if (d_max < 0)
        return true;
    const auto f = f_vector(c, d_max);
    const auto h = reduced_homology(c, d_max, {.torsion = false});
    long long chi = -1;
    long long betti = 0;
    for (int d = 0; d <= d_max; ++d) {
        const long long sign = d % 2 == 0 ? 1 : -1;
        chi += sign * static_cast<long long>(f[d]);
        betti += sign * static_cast<long long>(h[d].rank);
    }
    return chi == betti;
}

} // namespace settop
