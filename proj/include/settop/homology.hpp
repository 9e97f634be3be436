#pragma once

#include "settop/complexes.hpp"
#include "settop/smith.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace settop {

/// Matrix of the boundary map from d-faces (columns) to (d-1)-faces (rows),
/// faces indexed lexicographically. For d = 0 the single row is the
/// augmentation onto the empty face.
struct BoundaryMatrix {
    int dim = 0;
    std::size_t row_count = 0;
    std::size_t col_count = 0;
    SparseIntMatrix matrix;
};

BoundaryMatrix boundary_matrix(const std::vector<std::vector<Face>>& faces, int d);
BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int d);

/// One reduced homology group: Z^rank plus torsion invariant factors (each > 1,
/// each dividing the next).
struct HomologyGroup {
    std::size_t rank = 0;
    std::vector<Integer> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    /// "0", "Z", "Z^3", "Z + Z/2", ...
    std::string to_string() const;

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyOptions {
    bool torsion = true;
    std::size_t face_limit = 20'000'000;
};

/// Reduced homology in dimensions 0..d_max. Faces through dimension d_max + 1
/// are enumerated; GuardExceeded when that passes the face limit.
std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& c, int d_max,
                                            HomologyOptions options = {});

/// Reduced zeroth Betti number from connected components of the facets.
std::size_t betti_zero_fast(const SimplicialComplex& c);

/// Euler-Poincare: sum (-1)^d f_d - 1 equals sum (-1)^d rank H~_d. Requires
/// dimension() <= d_max.
bool euler_check(const SimplicialComplex& c, int d_max);

/// f-vector (f_0, f_1, ...) through dimension d_max.
std::vector<std::size_t> f_vector(const SimplicialComplex& c, int d_max);

} // namespace settop
