#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace settop {

using Integer = boost::multiprecision::cpp_int;

/// Row-major sparse integer matrix; each row holds (column, value) pairs in
/// ascending column order with no explicit zeros.
class SparseIntMatrix {
public:
    struct Entry {
        std::size_t col;
        Integer value;
    };
    using Row = std::vector<Entry>;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols);
    static SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& dense);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;
    const Row& row(std::size_t r) const { return data_[r]; }

    Integer at(std::size_t r, std::size_t c) const;
    /// Adds `v` to entry (r, c).
    void add(std::size_t r, std::size_t c, const Integer& v);

    bool is_zero() const { return nonzeros() == 0; }
    std::vector<std::vector<Integer>> to_dense() const;

    friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Row> data_;
};

struct SmithForm {
    /// Nonzero invariant factors d1 | d2 | ..., all positive.
    std::vector<Integer> factors;
    std::size_t rank = 0;
};

/// Exact Smith normal form over the integers. Unit pivots are eliminated
/// sparsely first; the residual block goes through dense gcd elimination.
SmithForm smith_normal_form(const SparseIntMatrix& m);

/// Exact rank: the same sparse unit-pivot phase, then fraction-free (Bareiss)
/// elimination on the residual block.
std::size_t matrix_rank(const SparseIntMatrix& m);

/// Dense SNF by repeated smallest-pivot gcd elimination; no sparse phase.
SmithForm dense_smith_normal_form(std::vector<std::vector<Integer>> a);

} // namespace settop
