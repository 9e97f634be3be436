#include "settop/families.hpp"
#include "settop/numthy.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace settop {

FamilyKind FamilyKind::s_multiple(int s) {
    if (s < 1)
        throw std::invalid_argument("s-multiple family needs s >= 1");
    return {FamilyTag::SMultiple, s};
}

std::string FamilyKind::name() const {
    switch (tag) {
    case FamilyTag::Primitive: return "primitive";
    case FamilyTag::PairwiseCoprime: return "coprime";
    case FamilyTag::ProductFree: return "productfree";
    case FamilyTag::CoprimeFree: return "coprimefree";
    case FamilyTag::SMultiple: return "smultiple";
    case FamilyTag::DistinctPairProducts: return "pairproducts";
    case FamilyTag::NoDivisorOfPairProduct: return "pairdivisor";
    case FamilyTag::DivisibilityChain: return "chain";
    }
    return "unknown";
}

std::optional<FamilyKind> FamilyKind::parse(std::string_view name, int s) {
    for (FamilyKind k : all_family_kinds()) {
        if (k.name() != name)
            continue;
        if (k.tag == FamilyTag::SMultiple) {
            if (s < 1)
                return std::nullopt;
            k.s = s;
        }
        return k;
    }
    return std::nullopt;
}

std::vector<FamilyKind> all_family_kinds() {
    return {FamilyKind::primitive(),
            FamilyKind::pairwise_coprime(),
            FamilyKind::product_free(),
            FamilyKind::coprime_free(),
            FamilyKind::s_multiple(1),
            FamilyKind::distinct_pair_products(),
            FamilyKind::no_divisor_of_pair_product(),
            FamilyKind::divisibility_chain()};
}

BitSubset::BitSubset(int n, std::uint64_t mask) : n_(n), mask_(mask) {
    if (n < 1 || n > max_universe)
        throw std::invalid_argument("BitSubset universe must lie in [1, 64]");
    if (n < max_universe && (mask >> n) != 0)
        throw std::invalid_argument("BitSubset mask has bits outside [n]");
}

BitSubset BitSubset::from_elements(int n, const std::vector<int>& elements) {
    std::uint64_t mask = 0;
    for (int i : elements) {
        if (i < 1 || i > n)
            throw std::invalid_argument("element " + std::to_string(i) + " outside [n]");
        mask |= std::uint64_t{1} << (i - 1);
    }
    return BitSubset(n, mask);
}

int BitSubset::size() const { return std::popcount(mask_); }

std::vector<int> BitSubset::elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
        out.push_back(std::countr_zero(m) + 1);
    return out;
}

BitSubset BitSubset::with(int i) const {
    if (i < 1 || i > n_)
        throw std::invalid_argument("element outside [n]");
    return BitSubset(n_, mask_ | (std::uint64_t{1} << (i - 1)));
}

std::string BitSubset::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : elements()) {
        if (!first)
            os << ',';
        os << i;
        first = false;
    }
    os << '}';
    return os.str();
}

CountTriangle::CountTriangle(FamilyKind kind, int n_max) : kind_(kind), n_max_(n_max) {
    if (n_max < 1)
        throw std::invalid_argument("CountTriangle needs n_max >= 1");
    rows_.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n)
        rows_[n].assign(static_cast<std::size_t>(n) + 1, 0);
}

std::int64_t CountTriangle::at(int n, int k) const {
    if (n < 1 || n > n_max_ || k < 0)
        throw std::out_of_range("CountTriangle index out of range");
    return k > n ? 0 : rows_[n][k];
}

std::int64_t& CountTriangle::at(int n, int k) {
    if (n < 1 || n > n_max_ || k < 0 || k > n)
        throw std::out_of_range("CountTriangle index out of range");
    return rows_[n][k];
}

std::int64_t CountTriangle::row_sum(int n) const {
    const auto r = row(n);
    return std::accumulate(r.begin(), r.end(), std::int64_t{0});
}

std::vector<std::int64_t> CountTriangle::row(int n) const {
    if (n < 1 || n > n_max_)
        throw std::out_of_range("CountTriangle row out of range");
    return rows_[n];
}

namespace {

bool contains_sorted(const std::vector<int>& v, long long x) {
    return std::binary_search(v.begin(), v.end(), x,
                              [](long long a, long long b) { return a < b; });
}

bool s_multiple_ok(const std::vector<int>& e, int s) {
    for (int d : e) {
        int multiples = 0;
        for (int x : e)
            if (x % d == 0)
                ++multiples;
        if (multiples > s)
            return false;
    }
    return true;
}

bool distinct_pair_products_ok(const std::vector<int>& e) {
    // Two pairs sharing an element cannot have equal products, so a repeated
    // product among distinct pairs always comes from four distinct elements.
    std::vector<long long> products;
    for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t b = a + 1; b < e.size(); ++b)
            products.push_back(static_cast<long long>(e[a]) * e[b]);
    std::sort(products.begin(), products.end());
    return std::adjacent_find(products.begin(), products.end()) == products.end();
}

bool no_divisor_of_pair_product_ok(const std::vector<int>& e) {
    for (int i : e)
        for (int j : e)
            for (int k : e) {
                if (i == j || i == k)
                    continue;
                if ((static_cast<long long>(j) * k) % i == 0)
                    return false;
            }
    return true;
}

void check_guard(int n, int guard) {
    if (n > guard)
        throw GuardExceeded("n = " + std::to_string(n) + " exceeds the enumeration guard " +
                            std::to_string(guard) + " (2^n subsets)");
    if (n > BitSubset::max_universe)
        throw GuardExceeded("n = " + std::to_string(n) + " exceeds the 64-bit mask width");
}

// Depth-first walk over the members of a downward-closed family, adding
// elements in ascending order. Every member is reached exactly once through
// its ascending sequence of prefixes.
template <typename Visit>
void walk_members(FamilyKind kind, int n, Visit&& visit) {
    std::vector<int> current;
    auto rec = [&](auto& self, int next, std::uint64_t mask) -> void {
        visit(current, mask);
        for (int x = next; x <= n; ++x) {
            current.push_back(x);
            if (is_member(kind, current))
                self(self, x + 1, mask | (std::uint64_t{1} << (x - 1)));
            current.pop_back();
        }
    };
    rec(rec, 1, 0);
}

std::uint64_t bit(int i) { return std::uint64_t{1} << (i - 1); }

// Bron-Kerbosch with pivoting over vertices 1..n; adjacency as masks.
void maximal_cliques(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p,
                     std::uint64_t x, std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    int pivot = -1;
    int best = -1;
    for (std::uint64_t m = p | x; m != 0; m &= m - 1) {
        int u = std::countr_zero(m);
        int c = std::popcount(p & adj[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    std::uint64_t candidates = p & ~adj[pivot];
    while (candidates != 0) {
        int v = std::countr_zero(candidates);
        std::uint64_t vb = std::uint64_t{1} << v;
        candidates &= candidates - 1;
        maximal_cliques(adj, r | vb, p & adj[v], x & adj[v], out);
        p &= ~vb;
        x |= vb;
    }
}

std::vector<BitSubset> coprime_free_maximal_direct(int n) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= n; ++j)
            if (i != j && std::gcd(i, j) > 1)
                adj[i - 1] |= bit(j);
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> cliques;
    maximal_cliques(adj, 0, all, 0, cliques);
    std::sort(cliques.begin(), cliques.end());
    std::vector<BitSubset> out;
    out.reserve(cliques.size());
    for (auto m : cliques)
        out.emplace_back(n, m);
    return out;
}

} // namespace

bool is_member(FamilyKind kind, const std::vector<int>& elements) {
    if (!std::is_sorted(elements.begin(), elements.end())) {
        std::vector<int> sorted = elements;
        std::sort(sorted.begin(), sorted.end());
        return is_member(kind, sorted);
    }
    const auto& e = elements;
    switch (kind.tag) {
    case FamilyTag::Primitive:
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = 0; b < e.size(); ++b)
                if (a != b && e[b] % e[a] == 0)
                    return false;
        return true;
    case FamilyTag::PairwiseCoprime:
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                if (std::gcd(e[a], e[b]) != 1)
                    return false;
        return true;
    case FamilyTag::ProductFree:
        for (int i : e)
            for (int j : e)
                if (contains_sorted(e, static_cast<long long>(i) * j))
                    return false;
        return true;
    case FamilyTag::CoprimeFree:
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                if (std::gcd(e[a], e[b]) == 1)
                    return false;
        return true;
    case FamilyTag::SMultiple:
        return s_multiple_ok(e, kind.s);
    case FamilyTag::DistinctPairProducts:
        return distinct_pair_products_ok(e);
    case FamilyTag::NoDivisorOfPairProduct:
        return no_divisor_of_pair_product_ok(e);
    case FamilyTag::DivisibilityChain:
        for (std::size_t a = 1; a < e.size(); ++a)
            if (e[a] % e[a - 1] != 0)
                return false;
        return true;
    }
    return false;
}

bool is_member(FamilyKind kind, const BitSubset& s) { return is_member(kind, s.elements()); }

std::vector<BitSubset> members(FamilyKind kind, int n, int guard) {
    if (n < 1)
        throw std::invalid_argument("members: n must be >= 1");
    check_guard(n, guard);
    std::vector<std::uint64_t> masks;
    walk_members(kind, n, [&](const std::vector<int>&, std::uint64_t mask) {
        masks.push_back(mask);
    });
    std::sort(masks.begin(), masks.end());
    std::vector<BitSubset> out;
    out.reserve(masks.size());
    for (auto m : masks)
        out.emplace_back(n, m);
    return out;
}

CountTriangle count_triangle(FamilyKind kind, int n_max, int guard) {
    if (n_max < 1)
        throw std::invalid_argument("count_triangle: n_max must be >= 1");
    check_guard(n_max, guard);
    // by_max[m][k]: members with largest element m (0 for the empty set) and size k
    std::vector<std::vector<std::int64_t>> by_max(
        static_cast<std::size_t>(n_max) + 1,
        std::vector<std::int64_t>(static_cast<std::size_t>(n_max) + 1, 0));
    walk_members(kind, n_max, [&](const std::vector<int>& elems, std::uint64_t) {
        int largest = elems.empty() ? 0 : elems.back();
        ++by_max[largest][elems.size()];
    });
    CountTriangle t(kind, n_max);
    std::vector<std::int64_t> running(static_cast<std::size_t>(n_max) + 1, 0);
    for (int m = 0; m <= n_max; ++m) {
        for (int k = 0; k <= n_max; ++k)
            running[k] += by_max[m][k];
        if (m >= 1)
            for (int k = 0; k <= m; ++k)
                t.at(m, k) = running[k];
    }
    return t;
}

std::int64_t small_count_closed_form(FamilyKind kind, int n, int k) {
    if (n < 2 || (k != 1 && k != 2))
        throw std::invalid_argument("small_count_closed_form: needs n >= 2 and k in {1, 2}");
    const std::int64_t nn = n;
    switch (kind.tag) {
    case FamilyTag::Primitive:
        if (k == 1)
            return nn;
        {
            std::int64_t sum = 0;
            for (int i = 2; i <= n; ++i)
                sum += i - divisor_count(i);
            return sum;
        }
    case FamilyTag::PairwiseCoprime:
        if (k == 1)
            return nn;
        {
            std::int64_t sum = 0;
            for (int i = 2; i <= n; ++i)
                sum += totient(i);
            return sum;
        }
    case FamilyTag::ProductFree: {
        if (k == 1)
            return nn - 1;
        std::int64_t root = 0;
        while ((root + 1) * (root + 1) <= nn)
            ++root;
        return nn * (nn - 1) / 2 - nn - root + 2;
    }
    default:
        throw std::invalid_argument("small_count_closed_form: unsupported family " +
                                    kind.name());
    }
}

std::vector<BitSubset> maximal_members(FamilyKind kind, int n, int guard) {
    if (n < 1)
        throw std::invalid_argument("maximal_members: n must be >= 1");
    if (kind.tag == FamilyTag::CoprimeFree && n <= pairwise_direct_limit)
        return coprime_free_maximal_direct(n);
    auto all = members(kind, n, guard);
    std::unordered_set<std::uint64_t> present;
    present.reserve(all.size() * 2);
    for (const auto& s : all)
        present.insert(s.mask());
    std::vector<BitSubset> out;
    for (const auto& s : all) {
        bool maximal = true;
        for (int x = 1; x <= n && maximal; ++x)
            if (!s.contains(x) && present.count(s.mask() | bit(x)))
                maximal = false;
        if (maximal)
            out.push_back(s);
    }
    return out;
}

PartitionResult partition_components(const std::vector<BitSubset>& maximal) {
    const std::size_t count = maximal.size();
    std::vector<std::size_t> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b)
            if ((maximal[a].mask() & maximal[b].mask()) != 0)
                parent[find(a)] = find(b);

    // Components in order of first appearance; the input is sorted by mask.
    std::vector<std::vector<std::size_t>> components;
    std::vector<std::ptrdiff_t> slot(count, -1);
    for (std::size_t a = 0; a < count; ++a) {
        std::size_t root = find(a);
        if (slot[root] < 0) {
            slot[root] = static_cast<std::ptrdiff_t>(components.size());
            components.emplace_back();
        }
        components[slot[root]].push_back(a);
    }

    PartitionClasses result;
    for (const auto& comp : components) {
        std::uint64_t core = ~std::uint64_t{0};
        for (std::size_t a : comp)
            core &= maximal[a].mask();
        std::vector<BitSubset> sets;
        for (std::size_t a : comp)
            sets.push_back(maximal[a]);
        if (core == 0) {
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (std::size_t j = i; j < comp.size(); ++j)
                    if ((maximal[comp[i]].mask() & maximal[comp[j]].mask()) == 0)
                        return FailureWitness{sets, maximal[comp[i]], maximal[comp[j]]};
        }
        result.cores.emplace_back(maximal[comp.front()].universe(), core);
        result.classes.push_back(std::move(sets));
    }
    return result;
}

PartitionResult partition_components(FamilyKind kind, int n, int guard) {
    if (n < 2)
        throw std::invalid_argument("partition_components: n must be >= 2");
    return partition_components(maximal_members(kind, n, guard));
}

} // namespace settop
