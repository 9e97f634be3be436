#include "settop/smith.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace settop {

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long long>>& dense) {
    const std::size_t r = dense.size();
    const std::size_t c = r == 0 ? 0 : dense.front().size();
    SparseIntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (dense[i].size() != c)
            throw std::invalid_argument("from_dense: ragged rows");
        for (std::size_t j = 0; j < c; ++j)
            if (dense[i][j] != 0)
                m.data_[i].push_back({j, Integer(dense[i][j])});
    }
    return m;
}

std::size_t SparseIntMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_)
        n += r.size();
    return n;
}

Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const {
    const auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.col < col; });
    return (it != row.end() && it->col == c) ? it->value : Integer(0);
}

void SparseIntMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("SparseIntMatrix::add out of range");
    if (v == 0)
        return;
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.col < col; });
    if (it != row.end() && it->col == c) {
        it->value += v;
        if (it->value == 0)
            row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const {
    std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_, 0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& e : data_[i])
            out[i][e.col] = e.value;
    return out;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product: dimension mismatch");
    SparseIntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::map<std::size_t, Integer> acc;
        for (const auto& ea : a.data_[i])
            for (const auto& eb : b.data_[ea.col])
                acc[eb.col] += ea.value * eb.value;
        for (auto& [col, v] : acc)
            if (v != 0)
                out.data_[i].push_back({col, std::move(v)});
    }
    return out;
}

namespace {

using Row = SparseIntMatrix::Row;
using Dense = std::vector<std::vector<Integer>>;

struct UnitElimination {
    std::size_t pivots = 0;
    Dense residual;
};

// row_i -= f * row_p, reporting columns of row_p whose presence in row_i changed.
Row subtract_scaled(const Row& target, const Row& pivot, const Integer& f,
                    std::vector<std::size_t>& appeared, std::vector<std::size_t>& vanished) {
    Row out;
    out.reserve(target.size() + pivot.size());
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < target.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < target.size() && target[a].col < pivot[b].col)) {
            out.push_back(target[a++]);
        } else if (a == target.size() || pivot[b].col < target[a].col) {
            out.push_back({pivot[b].col, -f * pivot[b].value});
            appeared.push_back(pivot[b].col);
            ++b;
        } else {
            Integer v = target[a].value - f * pivot[b].value;
            if (v != 0)
                out.push_back({target[a].col, std::move(v)});
            else
                vanished.push_back(target[a].col);
            ++a;
            ++b;
        }
    }
    return out;
}

// Eliminates +-1 pivots by row operations, choosing the pivot of least
// Markowitz cost each time. Each pivot contributes an invariant factor 1 and
// removes one row and one column; what remains is returned densely.
UnitElimination eliminate_unit_pivots(const SparseIntMatrix& m) {
    std::vector<Row> rows(m.rows());
    std::vector<std::set<std::size_t>> col_rows(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows[r] = m.row(r);
        for (const auto& e : rows[r])
            col_rows[e.col].insert(r);
    }

    // Rows come off a min-heap by length; within a row the unit entry with the
    // sparsest column wins. Modified rows are pushed again, stale keys skipped.
    using Key = std::pair<std::size_t, std::size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!rows[r].empty())
            queue.emplace(rows[r].size(), r);

    UnitElimination result;
    while (!queue.empty()) {
        const auto [size, pr] = queue.top();
        queue.pop();
        if (rows[pr].empty() || rows[pr].size() != size)
            continue;
        const Row pivot_row = rows[pr];
        const SparseIntMatrix::Entry* pivot = nullptr;
        for (const auto& e : pivot_row)
            if (abs(e.value) == 1 && (!pivot || col_rows[e.col].size() < col_rows[pivot->col].size()))
                pivot = &e;
        if (!pivot)
            continue;
        const std::size_t pc = pivot->col;
        const Integer unit = pivot->value;

        std::vector<std::size_t> others(col_rows[pc].begin(), col_rows[pc].end());
        for (std::size_t i : others) {
            if (i == pr)
                continue;
            const Row& target = rows[i];
            auto it = std::find_if(target.begin(), target.end(),
                                   [&](const auto& e) { return e.col == pc; });
            Integer f = it->value * unit;  // unit is its own inverse
            std::vector<std::size_t> appeared;
            std::vector<std::size_t> vanished;
            rows[i] = subtract_scaled(target, pivot_row, f, appeared, vanished);
            for (std::size_t c : appeared)
                col_rows[c].insert(i);
            for (std::size_t c : vanished)
                col_rows[c].erase(i);
            if (!rows[i].empty())
                queue.emplace(rows[i].size(), i);
        }
        for (const auto& e : pivot_row)
            col_rows[e.col].erase(pr);
        rows[pr].clear();
        ++result.pivots;
    }

    std::vector<std::size_t> live_cols;
    for (std::size_t c = 0; c < col_rows.size(); ++c)
        if (!col_rows[c].empty())
            live_cols.push_back(c);
    for (const auto& row : rows) {
        if (row.empty())
            continue;
        std::vector<Integer> dense(live_cols.size(), 0);
        for (const auto& e : row) {
            auto pos = std::lower_bound(live_cols.begin(), live_cols.end(), e.col);
            dense[static_cast<std::size_t>(pos - live_cols.begin())] = e.value;
        }
        result.residual.push_back(std::move(dense));
    }
    return result;
}

void swap_cols(Dense& a, std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (auto& row : a)
        std::swap(row[i], row[j]);
}

// (d_i, d_j) -> (gcd, lcm) pairwise turns a diagonal into invariant factors.
void normalize_diagonal(std::vector<Integer>& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            Integer g = gcd(d[i], d[j]);
            Integer l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
}

std::size_t bareiss_rank(Dense a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t k = 0; k < cols && rank < rows; ++k) {
        std::size_t p = rank;
        while (p < rows && a[p][k] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[rank][k] - a[i][k] * a[rank][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[rank][k];
        ++rank;
    }
    return rank;
}

} // namespace

SmithForm dense_smith_normal_form(Dense a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    std::vector<Integer> diagonal;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Move the smallest nonzero magnitude of the trailing block to (t, t),
        // reduce its row and column modulo it, and repeat until both are clear.
        // Every remainder left behind is smaller than the pivot, so the pivot
        // shrinks on each round.
        bool exhausted = false;
        while (true) {
            bool found = false;
            std::size_t pi = t;
            std::size_t pj = t;
            Integer best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (!found || abs(a[i][j]) < best)) {
                        found = true;
                        best = abs(a[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (!found) {
                exhausted = true;
                break;
            }
            std::swap(a[pi], a[t]);
            swap_cols(a, pj, t);

            bool clear = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                const Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    if (a[t][j] != 0)
                        a[i][j] -= q * a[t][j];
                clear = clear && a[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                const Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    if (a[i][t] != 0)
                        a[i][j] -= q * a[i][t];
                clear = clear && a[t][j] == 0;
            }
            if (clear)
                break;
        }
        if (exhausted)
            break;
        diagonal.push_back(abs(a[t][t]));
    }
    normalize_diagonal(diagonal);
    SmithForm out;
    out.rank = diagonal.size();
    out.factors = std::move(diagonal);
    return out;
}

SmithForm smith_normal_form(const SparseIntMatrix& m) {
    auto reduced = eliminate_unit_pivots(m);
    SmithForm rest = dense_smith_normal_form(std::move(reduced.residual));
    SmithForm out;
    out.rank = reduced.pivots + rest.rank;
    out.factors.assign(reduced.pivots, Integer(1));
    out.factors.insert(out.factors.end(), rest.factors.begin(), rest.factors.end());
    return out;
}

std::size_t matrix_rank(const SparseIntMatrix& m) {
    auto reduced = eliminate_unit_pivots(m);
    return reduced.pivots + bareiss_rank(std::move(reduced.residual));
}

} // namespace settop
