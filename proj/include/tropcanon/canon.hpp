#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tropcanon/matching.hpp"
#include "tropcanon/order_matrix.hpp"

namespace tropcanon {

/// Row increments ell >= 0 such that A + ell possesses a full family of
/// transversal column maxima.
struct Canon {
    std::vector<std::int64_t> ell;

    bool operator==(const Canon&) const = default;
};

/// Dual vectors with a(i,j) <= mu_i + nu_j; minimal when sum(mu) + sum(nu)
/// equals the tropical determinant.
struct Cover {
    std::vector<std::int64_t> mu, nu;

    bool operator==(const Cover&) const = default;
};

/// Which variant of the raising step the canon algorithm runs.
enum class CanonVariant {
    original, // rebuild the class partition after every raise
    improved, // incremental distances, O(s^2 n)
};

CanonVariant default_canon_variant();

/// Jacobi's row partition at a stuck state of the algorithm, relative to a
/// partial family of transversal maxima.
struct ClassPartition {
    std::vector<std::size_t> first, second, third;
    // pred[i] = previous row on an elementary path into i (first-class BFS
    // tree), or kUnmatched.
    std::vector<std::ptrdiff_t> pred;
};

/// Directed relation on rows: i -> i' when a starred maximum of row i equals
/// the entry of row i' in the same column.
struct PathRelation {
    std::vector<std::vector<std::size_t>> succ;
};

/// The unique minimal canon of an s x n matrix, s <= n (larger inputs are
/// transposed first; the result is then indexed by columns).
/// Throws InfeasibleCanon when no transversal family of finite entries exists.
Canon minimal_canon(const OrderMatrix& a, CanonVariant variant = default_canon_variant());

/// True iff ell >= 0 and A + ell has a full family of transversal maxima.
bool is_canon(const OrderMatrix& a, const Canon& ell);

/// A deterministic full family of transversal maxima of the canon A + ell
/// (row -> column). Throws InvalidArgument if ell is not a canon.
RowToCol transversal_maxima(const OrderMatrix& a, const Canon& ell);

/// The class partition of rows relative to the given matching on the
/// is-column-maximal pattern of A + ell.
ClassPartition classify_rows(const OrderMatrix& a, const std::vector<std::int64_t>& ell,
                             const RowToCol& matching);

enum class MinimizeVariant {
    path_rebuild, // rebuild the zero-reaching set each round, O(n^3)
    ordered,      // ordered-multiset bookkeeping, O(n^2 log n)
};

/// Minimal canon from a known canon plus a transversal family of its maxima
/// (square A).
Canon minimize_canon(const OrderMatrix& a, const Canon& ell, const RowToCol& maxima,
                     MinimizeVariant variant = MinimizeVariant::ordered);

/// Minimal canon from the places of a maximal transversal family alone
/// (square A). Throws NotMaximalFamily when the family does not realize a
/// maximal transversal sum.
Canon canon_from_maxima(const OrderMatrix& a, const RowToCol& maxima);

/// Minimal canon whose maxima include the given family and, additionally,
/// make each prescribed (row, col) entry column-maximal. Throws NoSuchCanon.
Canon canon_with_prescribed(const OrderMatrix& a, const RowToCol& maxima,
                            const std::vector<std::pair<std::size_t, std::size_t>>& prescribed);

/// Unique minimal canon subject to ell_i >= c_i (c_i >= 0).
Canon constrained_canon(const OrderMatrix& a, const std::vector<std::int64_t>& lower_bounds);

/// Minimal cover associated to a canon: mu_i = max(ell) - ell_i,
/// nu_j = max_i (a(i,j) - mu_i). Square A.
Cover cover_of_canon(const OrderMatrix& a, const Canon& ell);

/// Canon associated to a minimal cover: ell_i = max(mu) - mu_i.
/// Throws NotACover / NotMinimalCover.
Canon canon_of_cover(const OrderMatrix& a, const Cover& cover);

/// Cover associated to the minimal canon (the canonical cover alpha, beta).
Cover jacobi_cover(const OrderMatrix& a);

/// Another minimal cover: mu raised by e on the path-closure of pivot_row,
/// nu lowered accordingly. The diagonal must be a maximal transversal family.
/// `amount` is bounded by the least slack toward rows outside the closure.
Cover cover_shift(const OrderMatrix& a, const Cover& cover, std::size_t pivot_row,
                  std::int64_t amount);

/// All covers of non-negative integers reachable from the canonical cover by
/// shifts (diagonal must be a maximal transversal family).
std::vector<Cover> enumerate_nonneg_minimal_covers(const OrderMatrix& a,
                                                   std::size_t limit = 100000);

/// Path relation of the minimal canon; its reflexive-transitive closure does
/// not depend on the witness family.
PathRelation path_relation(const OrderMatrix& a);

} // namespace tropcanon
