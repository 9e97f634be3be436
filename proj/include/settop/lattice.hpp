#pragma once

#include "settop/complexes.hpp"
#include "settop/families.hpp"

#include <cstdint>
#include <vector>

namespace settop {

/// Element of a family lattice: a member mask, or the adjoined top.
struct LatticeElement {
    std::uint64_t mask = 0;
    bool top = false;

    static LatticeElement of(const BitSubset& s) { return {s.mask(), false}; }
    static LatticeElement top_element() { return {0, true}; }

    friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
    friend auto operator<=>(const LatticeElement&, const LatticeElement&) = default;
};

inline constexpr int lattice_chain_guard = 8;

/// Members of F cap 2^[n] ordered by inclusion, with an adjoined top above all
/// of them. The empty set is the bottom.
class FamilyLattice {
public:
    FamilyLattice(FamilyKind kind, int n, int guard = default_enumeration_guard);

    FamilyKind kind() const { return kind_; }
    int n() const { return n_; }
    const std::vector<BitSubset>& members() const { return members_; }
    bool contains(const LatticeElement& x) const;
    /// Inclusion order with the top above everything.
    bool leq(const LatticeElement& x, const LatticeElement& y) const;
    std::vector<LatticeElement> coatoms() const;

    /// Least upper bound; the top when no member contains the union.
    LatticeElement join(const std::vector<LatticeElement>& xs) const;
    /// Greatest lower bound; intersection for a downward-closed family.
    LatticeElement meet(const std::vector<LatticeElement>& xs) const;

private:
    FamilyKind kind_;
    int n_;
    std::vector<BitSubset> members_;
};

/// Moebius function mu(x, y) by the vanishing-sum recursion over [x, y].
/// Throws std::invalid_argument when x is not below y.
long long mobius(const FamilyLattice& lat, const LatticeElement& x, const LatticeElement& y);

/// sum_{k=0}^{n} (-1)^k F_{n,k}.
long long alt_sum(FamilyKind kind, int n, int guard = default_enumeration_guard);

/// Antichain avoiding bottom and top that meets every maximal chain. n <= 8.
bool is_crosscut(const FamilyLattice& lat, const std::vector<LatticeElement>& c);

/// Join is the top and meet is the bottom. n <= 8.
bool is_spanning(const FamilyLattice& lat, const std::vector<LatticeElement>& s);

/// Complex on C (vertex i is c[i]) whose faces are the non-spanning subsets.
/// n <= 8 and |C| <= 24.
SimplicialComplex crosscut_complex(const FamilyLattice& lat, const std::vector<LatticeElement>& c);

} // namespace settop
