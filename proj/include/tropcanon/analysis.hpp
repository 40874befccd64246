#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tropcanon/canon.hpp"
#include "tropcanon/diffpoly.hpp"
#include "tropcanon/order_matrix.hpp"

namespace tropcanon {

enum class BoundMode { weak, strong };

/// Order matrix of a differential system: a(i,j) = ord_{x_j} P_i, with -inf
/// for absent variables (strong mode) or 0 (weak mode).
struct SystemProfile {
    OrderMatrix order_matrix;
    BoundMode mode;
    std::size_t s, n;
};

SystemProfile profile(const std::vector<DiffPoly>& system, BoundMode mode = BoundMode::strong);

/// Tropical determinant of the order matrix (transposed when s > n).
OrderValue jacobi_bound(const SystemProfile& p);

/// Canonical cover of the system: for square systems the cover of the minimal
/// canon, for rectangular ones the normalization through the zero-completed
/// square matrix. lambda_sq is the minimal canon of the completed matrix
/// restricted to the real rows, shifted so its minimum is zero.
struct NormalizedCover {
    std::vector<std::int64_t> alpha; // size s
    std::vector<std::int64_t> beta;  // size n
    std::vector<std::int64_t> lambda_sq;
};

NormalizedCover system_cover(const SystemProfile& p);

/// Partials at the cover exponents: entries (i,j) with a(i,j) = alpha_i +
/// beta_j; off-support partials vanish identically.
struct TruncatedJacobian {
    std::size_t s = 0, n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> support;
    std::map<std::pair<std::size_t, std::size_t>, DiffPoly> entries;
    NormalizedCover cover;
};

TruncatedJacobian truncated_jacobian(const std::vector<DiffPoly>& system,
                                     const SystemProfile& p);

/// Same, against an explicitly given minimal cover; the determinant does not
/// depend on this choice.
TruncatedJacobian truncated_jacobian(const std::vector<DiffPoly>& system, const SystemProfile& p,
                                     const std::vector<std::int64_t>& alpha,
                                     const std::vector<std::int64_t>& beta);

struct NablaReport {
    enum class Status { nonzero_witness, certainly_zero, probably_zero };
    Status status;
    std::map<DerivVar, std::uint64_t> witness_point; // set for nonzero_witness
    std::uint64_t prime = 0;
    int trials = 0;
    double failure_bound = 0.0; // (deg/prime)^trials, for probably_zero
};

/// Generic-position certificate that the truncated determinant is non-zero as
/// a polynomial: random evaluations mod a prime, with an exact symbolic
/// fallback for small systems.
NablaReport nabla_nonzero(const TruncatedJacobian& tj, int trials = 8,
                          std::uint64_t prime = kDefaultPrime, std::uint64_t seed = 1);

/// Differentiation schedule of the shortest reduction: lambda_i times for
/// equation i, with the nested stage sets F_k = { i : alpha_i <= k }.
struct ReductionPlan {
    Canon lambda;
    NormalizedCover cover;
    std::vector<std::vector<std::size_t>> stages;
    OrderValue jacobi_order;
};

ReductionPlan reduction_plan(const SystemProfile& p);

/// Order matrix of the first-order reduction {Q_i} u {W_{j,k}} under the
/// dense-support assumption, with the column labels (variable, order).
struct FirstOrderReduction {
    OrderMatrix matrix;
    std::vector<std::pair<int, int>> var_map; // column -> (j, k) for u_{j,k}
};

FirstOrderReduction first_order_reduce(const SystemProfile& p);

/// Polynomial-level variant: substitutes u_{j,k} into the equations and takes
/// exact orders of the resulting Q_i.
FirstOrderReduction first_order_reduce(const std::vector<DiffPoly>& system);

enum class BlockMode { triangular, diagonal };

struct Block {
    std::vector<std::size_t> rows, cols;
};

/// Triangular mode: condensation of the path preorder of the 0/1 dependency
/// pattern, blocks in topological order. Diagonal mode: connected components.
std::vector<Block> block_decompose(const SystemProfile& p, BlockMode mode);

/// Minimal ell with ell_i >= max(f_i - e_i, 0) making every diagonal entry
/// column-maximal; bounds the derivatives of each equation needed for the
/// ordering change. e must equal the diagonal orders.
Canon ordering_change_bound(const SystemProfile& p, const std::vector<std::int64_t>& e,
                            const std::vector<std::int64_t>& f);

/// Differentiation bounds for deriving a univariate resolvent in x_{j0}.
struct ResolventBounds {
    std::size_t pivot = 0;                 // 0-based variable index j0
    std::vector<OrderValue> per_row;       // minors with row i and column j0 removed
    Canon ell;                             // constrained canon, original row order
    std::vector<std::size_t> reachable;    // rows with a path to the pivot row
    std::vector<std::size_t> unreachable;  // complement
    OrderValue unreachable_tropdet;        // tropical determinant of the unreachable block
};

ResolventBounds resolvent_bounds(const SystemProfile& p, std::size_t j0, std::int64_t d = 0);

/// Self-test of the minor identity
///   sum_i O(i,j0) = sum_{j != j0} max_i (O(i,j0) + a(i,j)).
bool resolvent_identity_check(const OrderMatrix& a, std::size_t j0);

} // namespace tropcanon
