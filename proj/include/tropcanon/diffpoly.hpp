#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tropcanon/errors.hpp"
#include "tropcanon/order_value.hpp"

namespace tropcanon {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Derivative indeterminate x_j^(k): 1-based variable index j, order k >= 0.
struct DerivVar {
    int var;   // j >= 1
    int order; // k >= 0

    friend auto operator<=>(const DerivVar&, const DerivVar&) = default;
};

/// Power product of derivative indeterminates, kept sorted by (var, order)
/// with positive exponents.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(const std::map<DerivVar, int>& powers);

    static Monomial one() { return Monomial(); }
    static Monomial var(DerivVar v, int exp = 1);

    const std::vector<std::pair<DerivVar, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int total_degree() const;
    int exponent_of(DerivVar v) const;

    Monomial operator*(const Monomial& o) const;
    /// Divide by v once; exponent of v must be positive.
    Monomial divide_once(DerivVar v) const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

  private:
    std::vector<std::pair<DerivVar, int>> factors_;
};

/// Sparse differential polynomial over Q in the x_j^(k).
class DiffPoly {
  public:
    DiffPoly() = default;
    static DiffPoly constant(const Rational& c);
    static DiffPoly variable(DerivVar v);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    DiffPoly operator+(const DiffPoly& o) const;
    DiffPoly operator-(const DiffPoly& o) const;
    DiffPoly operator*(const DiffPoly& o) const;
    DiffPoly operator-() const;
    DiffPoly pow(int e) const;

    void add_term(const Monomial& m, const Rational& c);

    /// Total derivative d/dt: raises x_j^(k) to x_j^(k+1) by the Leibniz rule.
    DiffPoly differentiate() const;

    /// Formal partial derivative with respect to v.
    DiffPoly partial(DerivVar v) const;

    /// ord_{x_j}: largest derivative order of variable j present, -inf if the
    /// variable does not appear.
    OrderValue order_in(int var) const;

    /// Largest variable index present (0 for constants).
    int max_var() const;

    int total_degree() const; // 0 for the zero polynomial

    std::set<DerivVar> variables() const;

    /// Exact evaluation modulo a prime; every variable present must be
    /// assigned. Throws EvalError for missing assignments or coefficient
    /// denominators divisible by the prime.
    std::uint64_t eval_mod(const std::map<DerivVar, std::uint64_t>& assignment,
                           std::uint64_t prime) const;

    /// Canonical form, re-parsable by the system parser.
    std::string str() const;

    bool operator==(const DiffPoly&) const = default;

  private:
    std::map<Monomial, Rational> terms_; // no zero coefficients
};

namespace modarith {
std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
/// Residue of an exact rational mod p; throws EvalError when the denominator
/// vanishes mod p.
std::uint64_t rational_mod(const Rational& r, std::uint64_t p);
} // namespace modarith

/// Default 62-bit prime for randomized evaluation.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL; // 2^62 - 57

} // namespace tropcanon
