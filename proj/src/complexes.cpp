#include "settop/complexes.hpp"
#include "settop/numthy.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace settop {

namespace {

void sort_unique(std::vector<Face>& faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

bool is_subface(const Face& small, const Face& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Dense bitset over vertex indices, sized at construction.
class IndexSet {
public:
    explicit IndexSet(std::size_t size) : words_((size + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }
    std::size_t count_and(const IndexSet& o) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += std::popcount(words_[k] & o.words_[k]);
        return c;
    }
    IndexSet operator&(const IndexSet& o) const {
        IndexSet r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k)
            r.words_[k] &= o.words_[k];
        return r;
    }
    IndexSet minus(const IndexSet& o) const {
        IndexSet r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k)
            r.words_[k] &= ~o.words_[k];
        return r;
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            for (std::uint64_t w = words_[k]; w != 0; w &= w - 1)
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }

private:
    std::vector<std::uint64_t> words_;
};

void bron_kerbosch(const std::vector<IndexSet>& adj, std::vector<std::size_t>& r, IndexSet p,
                   IndexSet x, std::vector<std::vector<std::size_t>>& out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have = false;
    auto consider = [&](std::size_t u) {
        std::size_t c = p.count_and(adj[u]);
        if (!have || c > best) {
            have = true;
            best = c;
            pivot = u;
        }
    };
    p.for_each(consider);
    x.for_each(consider);
    std::vector<std::size_t> candidates;
    p.minus(adj[pivot]).for_each([&](std::size_t v) { candidates.push_back(v); });
    for (std::size_t v : candidates) {
        r.push_back(v);
        bron_kerbosch(adj, r, p & adj[v], x & adj[v], out);
        r.pop_back();
        p.reset(v);
        x.set(v);
    }
}

template <typename F>
void for_each_combination(const Face& base, std::size_t k, F&& f) {
    const std::size_t n = base.size();
    if (k == 0 || k > n)
        return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    Face sub(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i)
            sub[i] = base[idx[i]];
        f(sub);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<Face> maximal_faces(std::vector<Face> faces) {
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    faces.erase(std::remove_if(faces.begin(), faces.end(), [](const Face& f) { return f.empty(); }),
                faces.end());
    sort_unique(faces);
    std::stable_sort(faces.begin(), faces.end(),
                     [](const Face& a, const Face& b) { return a.size() > b.size(); });
    std::vector<Face> kept;
    for (auto& f : faces) {
        bool nested = false;
        for (const auto& k : kept) {
            if (k.size() <= f.size())
                break;
            if (is_subface(f, k)) {
                nested = true;
                break;
            }
        }
        if (!nested)
            kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

SimplicialComplex::SimplicialComplex(std::vector<Vertex> vertices, std::vector<Face> faces) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (const auto& f : faces)
        for (Vertex v : f)
            if (!std::binary_search(vertices.begin(), vertices.end(), v))
                throw std::invalid_argument("face uses vertex " + std::to_string(v) +
                                            " outside the vertex set");
    std::set<Vertex> covered;
    for (const auto& f : faces)
        covered.insert(f.begin(), f.end());
    for (Vertex v : vertices)
        if (!covered.count(v))
            faces.push_back({v});
    vertices_ = std::move(vertices);
    facets_ = maximal_faces(std::move(faces));
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> faces) {
    std::vector<Vertex> vertices;
    for (const auto& f : faces)
        vertices.insert(vertices.end(), f.begin(), f.end());
    return SimplicialComplex(std::move(vertices), std::move(faces));
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : facets_)
        d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::has_face(const Face& face) const {
    Face f = face;
    std::sort(f.begin(), f.end());
    if (f.empty())
        return true;
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Face& facet) { return is_subface(f, facet); });
}

SimplicialComplex nerve(const std::vector<std::vector<int>>& sets) {
    std::vector<std::vector<int>> normalized = sets;
    for (auto& s : normalized) {
        if (s.empty())
            throw std::invalid_argument("nerve: empty set in the cover");
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    // Faces with nonempty common intersection are exactly the subsets of
    // {i : x in sets[i]} for some point x.
    std::set<int> points;
    for (const auto& s : normalized)
        points.insert(s.begin(), s.end());
    std::vector<Face> candidates;
    for (int x : points) {
        Face containing;
        for (std::size_t i = 0; i < normalized.size(); ++i)
            if (std::binary_search(normalized[i].begin(), normalized[i].end(), x))
                containing.push_back(static_cast<Vertex>(i));
        candidates.push_back(std::move(containing));
    }
    std::vector<Vertex> vertices(normalized.size());
    std::iota(vertices.begin(), vertices.end(), 0);
    return SimplicialComplex(std::move(vertices), std::move(candidates));
}

SimplicialComplex nerve(const std::vector<BitSubset>& sets) {
    std::vector<std::vector<int>> lists;
    lists.reserve(sets.size());
    for (const auto& s : sets)
        lists.push_back(s.elements());
    return nerve(lists);
}

SimplicialComplex clique_complex(const std::vector<Vertex>& vertices,
                                 const std::function<bool(Vertex, Vertex)>& adjacent) {
    std::vector<Vertex> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    const std::size_t n = vs.size();
    std::vector<IndexSet> adj(n, IndexSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (adjacent(vs[i], vs[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }
    IndexSet all(n);
    for (std::size_t i = 0; i < n; ++i)
        all.set(i);
    std::vector<std::vector<std::size_t>> cliques;
    std::vector<std::size_t> r;
    if (n > 0)
        bron_kerbosch(adj, r, all, IndexSet(n), cliques);
    std::vector<Face> faces;
    faces.reserve(cliques.size());
    for (const auto& c : cliques) {
        Face f;
        for (std::size_t i : c)
            f.push_back(vs[i]);
        faces.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(vs), std::move(faces));
}

SimplicialComplex face_complex(FamilyKind kind, int n, int guard) {
    if (n < 1)
        throw std::invalid_argument("face_complex: n must be >= 1");
    std::vector<Vertex> vertices;
    for (int i = 1; i <= n; ++i)
        if (is_member(kind, std::vector<int>{i}))
            vertices.push_back(i);
    if (kind.tag == FamilyTag::CoprimeFree && n > pairwise_direct_limit) {
        return clique_complex(vertices, [](Vertex a, Vertex b) { return std::gcd(a, b) > 1; });
    }
    std::vector<Face> faces;
    for (const auto& s : maximal_members(kind, n, guard))
        if (!s.empty())
            faces.push_back(s.elements());
    return SimplicialComplex(std::move(vertices), std::move(faces));
}

std::vector<std::pair<Vertex, Vertex>> dominated_pairs(const SimplicialComplex& c) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex x : c.vertices()) {
        std::vector<Vertex> common;
        bool first = true;
        for (const auto& f : c.facets()) {
            if (!std::binary_search(f.begin(), f.end(), x))
                continue;
            if (first) {
                common = f;
                first = false;
            } else {
                std::vector<Vertex> next;
                std::set_intersection(common.begin(), common.end(), f.begin(), f.end(),
                                      std::back_inserter(next));
                common = std::move(next);
            }
        }
        for (Vertex y : common)
            if (y != x)
                out.emplace_back(x, y);
    }
    return out;
}

SimplicialComplex strong_collapse(const SimplicialComplex& c) {
    std::vector<Vertex> vertices = c.vertices();
    std::vector<Face> facets = c.facets();

    // Intersection of all facets containing v, without v itself.
    auto dominators = [&](Vertex v) {
        std::vector<Vertex> common;
        bool first = true;
        for (const auto& f : facets) {
            if (!std::binary_search(f.begin(), f.end(), v))
                continue;
            if (first) {
                common = f;
                first = false;
            } else {
                std::vector<Vertex> next;
                std::set_intersection(common.begin(), common.end(), f.begin(), f.end(),
                                      std::back_inserter(next));
                common = std::move(next);
            }
        }
        common.erase(std::remove(common.begin(), common.end(), v), common.end());
        return common;
    };

    bool removed = true;
    while (removed) {
        removed = false;
        for (Vertex x : vertices) {
            const auto dom = dominators(x);
            bool removable = false;
            for (Vertex y : dom) {
                if (y < x) {
                    removable = true;
                    break;
                }
                // y > x dominates x; if x also dominates y, y is the one to go.
                const auto back = dominators(y);
                if (!std::binary_search(back.begin(), back.end(), x)) {
                    removable = true;
                    break;
                }
            }
            if (!removable)
                continue;
            for (auto& f : facets)
                f.erase(std::remove(f.begin(), f.end(), x), f.end());
            facets = maximal_faces(std::move(facets));
            vertices.erase(std::find(vertices.begin(), vertices.end(), x));
            removed = true;
            break;
        }
    }
    return SimplicialComplex(std::move(vertices), std::move(facets));
}

std::vector<int> maximal_squarefree(int n) {
    if (n < 1)
        throw std::invalid_argument("maximal_squarefree: n must be >= 1");
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        if (!is_squarefree(i))
            continue;
        bool has_multiple = false;
        for (int m = 2 * i; m <= n && !has_multiple; m += i)
            has_multiple = is_squarefree(m);
        if (!has_multiple)
            out.push_back(i);
    }
    return out;
}

SimplicialComplex coprime_free_collapsed(int n) {
    std::vector<Vertex> vertices = maximal_squarefree(n);
    if (vertices.empty() || vertices.front() != 1)
        vertices.insert(vertices.begin(), 1);
    // Primes among the vertices have no other vertex sharing a factor, and 1 is
    // coprime to everything, so the gcd graph leaves both isolated.
    return clique_complex(vertices, [](Vertex a, Vertex b) { return std::gcd(a, b) > 1; });
}

SimplicialComplex skeleton(const SimplicialComplex& c, int d) {
    if (d < 0)
        throw std::invalid_argument("skeleton: d must be >= 0");
    const auto k = static_cast<std::size_t>(d) + 1;
    std::vector<Face> faces;
    for (const auto& f : c.facets()) {
        if (f.size() <= k)
            faces.push_back(f);
        else
            for_each_combination(f, k, [&](const Face& sub) { faces.push_back(sub); });
    }
    return SimplicialComplex(c.vertices(), std::move(faces));
}

std::vector<std::vector<Face>> faces_by_dimension(const SimplicialComplex& c, int d_max,
                                                  std::size_t face_limit) {
    if (d_max < 0)
        return {};
    std::vector<std::vector<Face>> out(static_cast<std::size_t>(d_max) + 1);
    std::size_t generated = 0;
    for (const auto& f : c.facets()) {
        const std::size_t top = std::min(f.size(), static_cast<std::size_t>(d_max) + 1);
        for (std::size_t k = 1; k <= top; ++k) {
            generated += static_cast<std::size_t>(binomial(static_cast<int>(f.size()),
                                                           static_cast<int>(k)));
            if (generated > face_limit)
                throw GuardExceeded("face enumeration exceeds " + std::to_string(face_limit) +
                                    " faces; lower the dimension cap");
            for_each_combination(f, k, [&](const Face& sub) { out[k - 1].push_back(sub); });
        }
    }
    for (auto& level : out)
        sort_unique(level);
    return out;
}

} // namespace settop
