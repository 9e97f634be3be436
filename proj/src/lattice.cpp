#include "settop/lattice.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace settop {

namespace {

void check_chain_guard(const FamilyLattice& lat) {
    if (lat.n() > lattice_chain_guard)
        throw GuardExceeded("lattice operation limited to n <= " +
                            std::to_string(lattice_chain_guard));
}

} // namespace

FamilyLattice::FamilyLattice(FamilyKind kind, int n, int guard)
    : kind_(kind), n_(n), members_(settop::members(kind, n, guard)) {}

bool FamilyLattice::contains(const LatticeElement& x) const {
    if (x.top)
        return true;
    return std::binary_search(members_.begin(), members_.end(), BitSubset(n_, x.mask));
}

bool FamilyLattice::leq(const LatticeElement& x, const LatticeElement& y) const {
    if (y.top)
        return true;
    if (x.top)
        return false;
    return (x.mask & ~y.mask) == 0;
}

std::vector<LatticeElement> FamilyLattice::coatoms() const {
    std::vector<LatticeElement> out;
    for (const auto& s : members_) {
        bool maximal = true;
        for (int x = 1; x <= n_ && maximal; ++x)
            if (!s.contains(x) && contains(LatticeElement::of(s.with(x))))
                maximal = false;
        if (maximal)
            out.push_back(LatticeElement::of(s));
    }
    return out;
}

LatticeElement FamilyLattice::join(const std::vector<LatticeElement>& xs) const {
    std::uint64_t u = 0;
    for (const auto& x : xs) {
        if (x.top)
            return LatticeElement::top_element();
        u |= x.mask;
    }
    std::vector<std::uint64_t> minimal;
    for (const auto& s : members_) {
        if ((u & ~s.mask()) != 0)
            continue;
        bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                     [&](std::uint64_t m) { return (m & ~s.mask()) == 0; });
        if (!dominated)
            minimal.push_back(s.mask());
    }
    if (minimal.empty())
        return LatticeElement::top_element();
    // Members are ascending by mask, so a subset always precedes its supersets
    // and the survivors are exactly the minimal upper bounds.
    if (minimal.size() > 1)
        throw std::logic_error("join: no least upper bound; family is not a lattice");
    return {minimal.front(), false};
}

LatticeElement FamilyLattice::meet(const std::vector<LatticeElement>& xs) const {
    std::uint64_t i = ~std::uint64_t{0};
    bool any = false;
    for (const auto& x : xs) {
        if (x.top)
            continue;
        i &= x.mask;
        any = true;
    }
    if (!any)
        return LatticeElement::top_element();
    if (contains({i, false}))
        return {i, false};
    std::uint64_t best = 0;
    int best_size = -1;
    for (const auto& s : members_)
        if ((s.mask() & ~i) == 0 && s.size() > best_size) {
            best = s.mask();
            best_size = s.size();
        }
    return {best, false};
}

long long mobius(const FamilyLattice& lat, const LatticeElement& x, const LatticeElement& y) {
    if (!lat.contains(x) || !lat.contains(y))
        throw std::invalid_argument("mobius: element not in the lattice");
    if (!lat.leq(x, y))
        throw std::invalid_argument("mobius: elements are not comparable as x <= y");

    std::vector<LatticeElement> interval;
    for (const auto& s : lat.members()) {
        LatticeElement z = LatticeElement::of(s);
        if (lat.leq(x, z) && lat.leq(z, y))
            interval.push_back(z);
    }
    if (y.top)
        interval.push_back(y);
    // Linear extension: by size, top last.
    std::stable_sort(interval.begin(), interval.end(),
                     [](const LatticeElement& a, const LatticeElement& b) {
                         if (a.top != b.top)
                             return b.top;
                         return std::popcount(a.mask) < std::popcount(b.mask);
                     });

    std::vector<long long> mu(interval.size(), 0);
    for (std::size_t k = 0; k < interval.size(); ++k) {
        if (interval[k] == x) {
            mu[k] = 1;
            continue;
        }
        long long sum = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (lat.leq(interval[j], interval[k]))
                sum += mu[j];
        mu[k] = -sum;
    }
    return mu.back();
}

long long alt_sum(FamilyKind kind, int n, int guard) {
    if (n < 1)
        throw std::invalid_argument("alt_sum: n must be >= 1");
    const auto t = count_triangle(kind, n, guard);
    long long sum = 0;
    for (int k = 0; k <= n; ++k)
        sum += (k % 2 == 0 ? 1 : -1) * t.at(n, k);
    return sum;
}

bool is_crosscut(const FamilyLattice& lat, const std::vector<LatticeElement>& c) {
    check_chain_guard(lat);
    const LatticeElement bottom{0, false};
    for (const auto& x : c)
        if (x.top || x == bottom || !lat.contains(x))
            return false;
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 0; b < c.size(); ++b)
            if (a != b && lat.leq(c[a], c[b]))
                return false;

    // A maximal chain avoiding C is a bottom-to-top path of covers through
    // elements outside C.
    std::vector<LatticeElement> elems;
    for (const auto& s : lat.members())
        elems.push_back(LatticeElement::of(s));
    elems.push_back(LatticeElement::top_element());
    auto in_c = [&](const LatticeElement& x) { return std::find(c.begin(), c.end(), x) != c.end(); };
    auto covers = [&](const LatticeElement& lo, const LatticeElement& hi) {
        if (lo == hi || !lat.leq(lo, hi))
            return false;
        for (const auto& z : elems)
            if (z != lo && z != hi && lat.leq(lo, z) && lat.leq(z, hi))
                return false;
        return true;
    };
    std::vector<bool> seen(elems.size(), false);
    std::vector<std::size_t> stack{0};  // members are sorted, so index 0 is the empty set
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        if (elems[cur].top)
            return false;
        for (std::size_t k = 0; k < elems.size(); ++k)
            if (!seen[k] && !in_c(elems[k]) && covers(elems[cur], elems[k])) {
                seen[k] = true;
                stack.push_back(k);
            }
    }
    return true;
}

bool is_spanning(const FamilyLattice& lat, const std::vector<LatticeElement>& s) {
    check_chain_guard(lat);
    return lat.join(s).top && lat.meet(s) == LatticeElement{0, false};
}

SimplicialComplex crosscut_complex(const FamilyLattice& lat, const std::vector<LatticeElement>& c) {
    check_chain_guard(lat);
    if (c.size() > 24)
        throw GuardExceeded("crosscut_complex: cross-cut larger than 24 elements");
    if (!is_crosscut(lat, c))
        throw std::invalid_argument("crosscut_complex: argument is not a cross-cut");

    const std::size_t m = c.size();
    auto pick = [&](std::uint64_t bits) {
        std::vector<LatticeElement> out;
        for (std::size_t i = 0; i < m; ++i)
            if ((bits >> i) & 1u)
                out.push_back(c[i]);
        return out;
    };
    // Non-spanning subsets are closed under taking subsets, so the facets are
    // the non-spanning subsets that turn spanning on adding any vertex.
    std::vector<Face> facets;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
        if (is_spanning(lat, pick(bits)))
            continue;
        bool maximal = true;
        for (std::size_t v = 0; v < m && maximal; ++v)
            if (!((bits >> v) & 1u) && !is_spanning(lat, pick(bits | (std::uint64_t{1} << v))))
                maximal = false;
        if (!maximal)
            continue;
        Face f;
        for (std::size_t i = 0; i < m; ++i)
            if ((bits >> i) & 1u)
                f.push_back(static_cast<Vertex>(i));
        facets.push_back(std::move(f));
    }
    std::vector<Vertex> vertices(m);
    for (std::size_t i = 0; i < m; ++i)
        vertices[i] = static_cast<Vertex>(i);
    return SimplicialComplex(std::move(vertices), std::move(facets));
}

} // namespace settop
