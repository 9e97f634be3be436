#pragma once

#include "settop/families.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace settop {

using Vertex = int;
using Face = std::vector<Vertex>;  // ascending

/// Simplicial complex stored by its facets. Faces are the subsets of facets;
/// isolated vertices are singleton facets. Facets are kept sorted
/// lexicographically and never nested.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Normalizes `faces` to facets: sorts, deduplicates, drops faces nested in
    /// others and empty faces, and adds singleton facets for listed vertices not
    /// covered by any face. Throws if a face uses an unlisted vertex.
    SimplicialComplex(std::vector<Vertex> vertices, std::vector<Face> faces);
    /// Vertex set is the union of the facets.
    static SimplicialComplex from_facets(std::vector<Face> faces);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Face>& facets() const { return facets_; }
    bool empty() const { return vertices_.empty(); }
    /// Largest face dimension; -1 for the empty complex.
    int dimension() const;
    bool has_face(const Face& face) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<Face> facets_;
};

/// Keeps only the inclusion-maximal sets, sorted lexicographically.
std::vector<Face> maximal_faces(std::vector<Face> faces);

/// Vertex i stands for sets[i]; a vertex set is a face iff the sets meet.
SimplicialComplex nerve(const std::vector<std::vector<int>>& sets);
SimplicialComplex nerve(const std::vector<BitSubset>& sets);

/// Complex on [n] whose faces are the nonempty family members. CoprimeFree is
/// built from its gcd > 1 graph and needs no subset enumeration; every other
/// kind enumerates members under the guard.
SimplicialComplex face_complex(FamilyKind kind, int n, int guard = default_enumeration_guard);

SimplicialComplex clique_complex(const std::vector<Vertex>& vertices,
                                 const std::function<bool(Vertex, Vertex)>& adjacent);

/// Dominated-vertex elimination to a fixed point. x is dominated by y != x
/// when every facet containing x also contains y. Vertices are swept in
/// ascending order; on mutual domination the larger label goes.
SimplicialComplex strong_collapse(const SimplicialComplex& c);

/// Every pair (x, y) with x dominated by y, ascending.
std::vector<std::pair<Vertex, Vertex>> dominated_pairs(const SimplicialComplex& c);

/// Collapsed coprime-free complex built without subset enumeration: 1 plus the
/// maximal squarefree integers in [n]; composites joined by gcd > 1 cliques,
/// primes and 1 isolated.
SimplicialComplex coprime_free_collapsed(int n);

/// Maximal squarefree integers in [n] (squarefree, no squarefree proper multiple
/// in [n]). Contains 1 only for n = 1.
std::vector<int> maximal_squarefree(int n);

SimplicialComplex skeleton(const SimplicialComplex& c, int d);

/// faces[d] lists the d-dimensional faces lexicographically, d = 0..d_max.
/// Throws GuardExceeded when the total exceeds `face_limit`.
std::vector<std::vector<Face>> faces_by_dimension(const SimplicialComplex& c, int d_max,
                                                  std::size_t face_limit = 20'000'000);

} // namespace settop
