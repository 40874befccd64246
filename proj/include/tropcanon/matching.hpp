#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropcanon/errors.hpp"
#include "tropcanon/order_matrix.hpp"

namespace tropcanon {

/// Row -> column assignment; kUnmatched marks an unassigned row/column.
inline constexpr std::ptrdiff_t kUnmatched = -1;
using RowToCol = std::vector<std::ptrdiff_t>;

/// s x n matrix of zeros and ones.
class BitMatrix {
  public:
    BitMatrix(std::size_t rows, std::size_t cols, bool fill = false)
        : rows_(rows), cols_(cols), data_(rows * cols, fill ? 1 : 0) {
        if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    }

    static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool one(std::size_t i, std::size_t j) const { return data_[i * cols_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v) { data_[i * cols_ + j] = v ? 1 : 0; }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, one(i, j));
        return t;
    }

    /// 0/1 entries reinterpreted as integer orders.
    OrderMatrix to_order_matrix() const {
        OrderMatrix m(rows_, cols_, OrderValue(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (one(i, j)) m.at(i, j) = OrderValue(1);
        return m;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> data_;
};

struct MatchResult {
    RowToCol matching;    // size rows(); kUnmatched where unassigned
    std::size_t size = 0; // number of matched rows
};

namespace detail {

// Deterministic augmenting-path search: rows tried in ascending order, columns
// scanned ascending. Works over any 0/1 pattern exposing rows()/cols()/one().
template <class Pattern>
bool try_augment(const Pattern& pat, std::size_t row, RowToCol& r2c, RowToCol& c2r,
                 std::vector<std::uint8_t>& col_seen) {
    for (std::size_t j = 0; j < pat.cols(); ++j) {
        if (!pat.one(row, j) || col_seen[j]) continue;
        col_seen[j] = 1;
        if (c2r[j] == kUnmatched ||
            try_augment(pat, static_cast<std::size_t>(c2r[j]), r2c, c2r, col_seen)) {
            r2c[row] = static_cast<std::ptrdiff_t>(j);
            c2r[j] = static_cast<std::ptrdiff_t>(row);
            return true;
        }
    }
    return false;
}

// Extends an existing partial matching to a maximum one.
template <class Pattern>
void extend_matching(const Pattern& pat, RowToCol& r2c, RowToCol& c2r) {
    std::vector<std::uint8_t> col_seen(pat.cols(), 0);
    for (std::size_t i = 0; i < pat.rows(); ++i) {
        if (r2c[i] != kUnmatched) continue;
        std::fill(col_seen.begin(), col_seen.end(), 0);
        try_augment(pat, i, r2c, c2r, col_seen);
    }
}

template <class Pattern>
MatchResult max_matching(const Pattern& pat) {
    RowToCol r2c(pat.rows(), kUnmatched), c2r(pat.cols(), kUnmatched);
    extend_matching(pat, r2c, c2r);
    MatchResult r;
    r.matching = std::move(r2c);
    for (auto c : r.matching)
        if (c != kUnmatched) ++r.size;
    return r;
}

// 0/1 view of the finite-entry pattern of an order matrix.
struct FinitePattern {
    const OrderMatrix& a;
    std::size_t rows() const { return a.rows(); }
    std::size_t cols() const { return a.cols(); }
    bool one(std::size_t i, std::size_t j) const { return a.at(i, j).is_finite(); }
};

} // namespace detail

/// Maximum-cardinality matching by single-path augmentation.
MatchResult match_naive(const BitMatrix& a);

/// Per-phase instrumentation for the layered matching algorithm.
struct HkStats {
    std::vector<std::size_t> phase_lengths; // row-path length of each phase
    std::size_t greedy_size = 0;            // matched rows after the greedy pass
};

/// Maximum matching via phases of shortest disjoint augmenting paths.
MatchResult match_hk(const BitMatrix& a, HkStats* stats = nullptr);

struct KoenigResult {
    MatchResult match;
    std::vector<std::size_t> row_cover;
    std::vector<std::size_t> col_cover;
};

/// Maximum matching together with a minimum line cover of the ones
/// (#row_cover + #col_cover == match.size).
KoenigResult koenig(const BitMatrix& a);

enum class ExtremalMode { row_maximal, col_maximal };

/// The unique minimum line cover whose row set (resp. column set) is maximal
/// for inclusion.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
extremal_cover(const BitMatrix& a, ExtremalMode mode);

} // namespace tropcanon
