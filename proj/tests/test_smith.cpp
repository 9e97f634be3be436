#include "doctest.h"

#include "settop/smith.hpp"

#include <numeric>
#include <random>

using namespace settop;

namespace {

using Dense = std::vector<std::vector<long long>>;

// Leibniz-free determinant by cofactor expansion; fine for k <= 5.
Integer det(const std::vector<std::vector<Integer>>& a) {
    const std::size_t k = a.size();
    if (k == 0)
        return 1;
    if (k == 1)
        return a[0][0];
    Integer total = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (a[0][j] == 0)
            continue;
        std::vector<std::vector<Integer>> minor;
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<Integer> row;
            for (std::size_t c = 0; c < k; ++c)
                if (c != j)
                    row.push_back(a[i][c]);
            minor.push_back(row);
        }
        total += (j % 2 == 0 ? 1 : -1) * a[0][j] * det(minor);
    }
    return total;
}

Integer gcd_int(Integer a, Integer b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Invariant factors from determinantal divisors d_k = gcd of k x k minors.
std::vector<Integer> minors_oracle(const Dense& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<Integer> d = {1};
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        Integer g = 0;
        for (std::uint32_t rs = 0; rs < (1u << rows); ++rs) {
            if (static_cast<std::size_t>(__builtin_popcount(rs)) != k)
                continue;
            for (std::uint32_t cs = 0; cs < (1u << cols); ++cs) {
                if (static_cast<std::size_t>(__builtin_popcount(cs)) != k)
                    continue;
                std::vector<std::vector<Integer>> sub;
                for (std::size_t r = 0; r < rows; ++r) {
                    if (!((rs >> r) & 1u))
                        continue;
                    std::vector<Integer> row;
                    for (std::size_t c = 0; c < cols; ++c)
                        if ((cs >> c) & 1u)
                            row.push_back(m[r][c]);
                    sub.push_back(row);
                }
                g = gcd_int(g, det(sub));
            }
        }
        if (g == 0)
            break;
        d.push_back(g);
    }
    std::vector<Integer> factors;
    for (std::size_t k = 1; k < d.size(); ++k)
        factors.push_back(d[k] / d[k - 1]);
    return factors;
}

Dense random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int spread, int zero_bias) {
    Dense m(r, std::vector<long long>(c, 0));
    for (auto& row : m)
        for (auto& v : row)
            if (static_cast<int>(rng() % 10) >= zero_bias)
                v = static_cast<long long>(rng() % (2 * spread + 1)) - spread;
    return m;
}

} // namespace

TEST_CASE("SparseIntMatrix storage") {
    SparseIntMatrix m(2, 3);
    CHECK(m.is_zero());
    m.add(0, 2, 5);
    m.add(1, 0, -1);
    m.add(0, 2, -5);
    CHECK(m.nonzeros() == 1);
    CHECK(m.at(0, 2) == 0);
    CHECK(m.at(1, 0) == -1);
    m.add(0, 1, 3);
    CHECK(m.to_dense() == std::vector<std::vector<Integer>>{{0, 3, 0}, {-1, 0, 0}});
    CHECK_THROWS(m.add(2, 0, 1));
    CHECK_THROWS(SparseIntMatrix::from_dense({{1, 2}, {3}}));

    const auto a = SparseIntMatrix::from_dense({{1, 2}, {3, 4}});
    const auto b = SparseIntMatrix::from_dense({{0, 1}, {1, 0}});
    CHECK((a * b).to_dense() == std::vector<std::vector<Integer>>{{2, 1}, {4, 3}});
    CHECK_THROWS(a * SparseIntMatrix(3, 1));
}

TEST_CASE("smith_normal_form examples") {
    auto id = smith_normal_form(SparseIntMatrix::from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(id.factors == std::vector<Integer>{1, 1, 1});
    CHECK(id.rank == 3);
    auto zero = smith_normal_form(SparseIntMatrix(3, 4));
    CHECK(zero.factors.empty());
    CHECK(zero.rank == 0);
    auto d = smith_normal_form(SparseIntMatrix::from_dense({{2, 0}, {0, 3}}));
    CHECK(d.factors == std::vector<Integer>{1, 6});
    CHECK(d.rank == 2);
    CHECK(smith_normal_form(SparseIntMatrix::from_dense({{2, 4}, {6, 8}})).factors ==
          std::vector<Integer>{2, 4});
    CHECK(smith_normal_form(SparseIntMatrix::from_dense({{2, 0}, {0, 2}})).factors ==
          std::vector<Integer>{2, 2});
    CHECK(smith_normal_form(SparseIntMatrix(0, 0)).rank == 0);
}

TEST_CASE("smith_normal_form against determinantal divisors") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t r = 1 + rng() % 4;
        const std::size_t c = 1 + rng() % 5;
        const int spread = trial % 2 ? 3 : 12;
        const auto m = random_matrix(rng, r, c, spread, static_cast<int>(rng() % 6));
        const auto expected = minors_oracle(m);
        const auto sparse = SparseIntMatrix::from_dense(m);
        const auto snf = smith_normal_form(sparse);
        CAPTURE(trial);
        REQUIRE(snf.factors == expected);
        CHECK(snf.rank == expected.size());
        CHECK(matrix_rank(sparse) == expected.size());
        std::vector<std::vector<Integer>> dense(r, std::vector<Integer>(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                dense[i][j] = m[i][j];
        CHECK(dense_smith_normal_form(dense).factors == expected);
        for (std::size_t k = 1; k < snf.factors.size(); ++k)
            CHECK(snf.factors[k] % snf.factors[k - 1] == 0);
    }
}

TEST_CASE("smith_normal_form keeps exact values under coefficient growth") {
    // Product of invariant factors equals |det| for nonsingular square input.
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = random_matrix(rng, 5, 5, 1000, 0);
        std::vector<std::vector<Integer>> big(5, std::vector<Integer>(5));
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                big[i][j] = m[i][j];
        const Integer dt = abs(det(big));
        const auto snf = smith_normal_form(SparseIntMatrix::from_dense(m));
        if (dt == 0) {
            CHECK(snf.rank < 5);
            continue;
        }
        Integer product = 1;
        for (const auto& f : snf.factors)
            product *= f;
        CHECK(product == dt);
    }
}

TEST_CASE("matrix_rank on larger sparse matrices") {
    // Rank of an n x n matrix with ones on and just above the diagonal is n.
    SparseIntMatrix m(200, 200);
    for (std::size_t i = 0; i < 200; ++i) {
        m.add(i, i, 2);
        if (i + 1 < 200)
            m.add(i, i + 1, 1);
    }
    CHECK(matrix_rank(m) == 200);
    CHECK(smith_normal_form(m).rank == 200);
}

TEST_CASE("dense stress: first factor is the content, chain holds, rank matches") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t r = 6 + rng() % 5;
        const std::size_t c = 6 + rng() % 5;
        auto m = random_matrix(rng, r, c, 10'000, 2);
        const long long scale = 1 + static_cast<long long>(rng() % 4);
        Integer content = 0;
        for (auto& row : m)
            for (auto& v : row) {
                v *= scale;
                content = gcd_int(content, v);
            }
        const auto sparse = SparseIntMatrix::from_dense(m);
        const auto snf = smith_normal_form(sparse);
        CHECK(snf.rank == matrix_rank(sparse));
        if (!snf.factors.empty())
            CHECK(snf.factors.front() == content);
        for (std::size_t k = 1; k < snf.factors.size(); ++k)
            CHECK(snf.factors[k] % snf.factors[k - 1] == 0);
    }
}
