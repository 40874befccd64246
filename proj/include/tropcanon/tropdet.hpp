#pragma once

#include <cstddef>
#include <vector>

#include "tropcanon/order_matrix.hpp"

namespace tropcanon {

struct TropdetResult {
    OrderValue value;
    // Maximizing injection, row -> column of the input matrix, valid only
    // when value is finite. With more rows than columns, exactly cols() rows
    // are matched; the rest carry kUnmatched.
    std::vector<std::ptrdiff_t> witness;
};

/// Tropical determinant: max over injections of the transversal sum.
/// Computed through the minimal-canon pipeline, not by enumeration.
TropdetResult tropdet(const OrderMatrix& a);

/// Max-plus matrix product: c(i,j) = max_k (a(i,k) + b(k,j)).
OrderMatrix trop_mul(const OrderMatrix& a, const OrderMatrix& b);

/// Tropical determinant of A with the named rows and columns removed
/// (0-based, duplicates ignored). The empty minor has the single empty
/// transversal, of value 0.
OrderValue subdet(const OrderMatrix& a, const std::vector<std::size_t>& delete_rows,
                  const std::vector<std::size_t>& delete_cols);

/// Self-test of the minor partition identity
///   |A|_T = max_{#J = #I} |A_{I,J}|_T + |A_{~I,~J}|_T   (square A).
bool partition_identity_check(const OrderMatrix& a, const std::vector<std::size_t>& rows_i);

} // namespace tropcanon
