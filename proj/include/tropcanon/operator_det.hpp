#pragma once

#include <string>
#include <vector>

#include "tropcanon/diffpoly.hpp"
#include "tropcanon/order_value.hpp"

namespace tropcanon {

/// Univariate polynomial over Q in the formal symbol y (dense, normalized).
class QPoly {
  public:
    QPoly() = default;
    static QPoly constant(const Rational& c);
    static QPoly monomial(int k, const Rational& c);

    bool is_zero() const { return coeffs_.empty(); }
    /// -inf for the zero polynomial, so degrees compare directly with
    /// tropical determinants.
    OrderValue degree() const {
        return coeffs_.empty() ? OrderValue::neg_inf()
                               : OrderValue(static_cast<std::int64_t>(coeffs_.size()) - 1);
    }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    /// Exact division; throws Error when the remainder is non-zero.
    QPoly divide_exact(const QPoly& d) const;

    bool operator==(const QPoly&) const = default;

    std::string str() const;

  private:
    void normalize();
    std::vector<Rational> coeffs_; // coeffs_[k] multiplies y^k
};

/// n x n matrix of univariate operator symbols: entry (i,j) collects the
/// coefficients of x_j^(k) of equation i as c * y^k.
struct OperatorMatrix {
    std::size_t n = 0;
    std::vector<QPoly> entries; // row-major

    const QPoly& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    QPoly& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
};

/// Builds M(y) from a linear homogeneous constant-coefficient system of n
/// equations in variables x1..xn. Throws NonLinearSystem otherwise.
OperatorMatrix build_operator_matrix(const std::vector<DiffPoly>& system);

/// det M(y), computed exactly by fraction-free elimination. Its degree is at
/// most the tropical determinant of the order matrix, with equality iff the
/// leading coefficient (the truncated determinant) is non-zero.
QPoly operator_determinant(const std::vector<DiffPoly>& system);

} // namespace tropcanon
