#include "tropcanon/operator_det.hpp"

#include <sstream>

namespace tropcanon {

QPoly QPoly::constant(const Rational& c) {
    QPoly p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

QPoly QPoly::monomial(int k, const Rational& c) {
    QPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

void QPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = coeff(k) + o.coeff(k);
    r.normalize();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    QPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.normalize();
    return r;
}

QPoly QPoly::divide_exact(const QPoly& d) const {
    if (d.is_zero()) throw Error("division by the zero polynomial");
    QPoly rem = *this, q;
    if (rem.coeffs_.size() >= d.coeffs_.size())
        q.coeffs_.assign(rem.coeffs_.size() - d.coeffs_.size() + 1, Rational(0));
    while (!rem.is_zero() && rem.coeffs_.size() >= d.coeffs_.size()) {
        const std::size_t shift = rem.coeffs_.size() - d.coeffs_.size();
        const Rational f = rem.coeffs_.back() / d.coeffs_.back();
        q.coeffs_[shift] = f;
        for (std::size_t k = 0; k < d.coeffs_.size(); ++k)
            rem.coeffs_[shift + k] -= f * d.coeffs_[k];
        rem.normalize();
    }
    if (!rem.is_zero()) throw Error("inexact polynomial division");
    q.normalize();
    return q;
}

std::string QPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool unit = mag == 1 && k > 0;
        if (!unit) {
            os << boost::multiprecision::numerator(mag);
            if (boost::multiprecision::denominator(mag) != 1)
                os << "/" << boost::multiprecision::denominator(mag);
        }
        if (k > 0) {
            if (!unit) os << "*";
            os << "y";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

OperatorMatrix build_operator_matrix(const std::vector<DiffPoly>& system) {
    const std::size_t n = system.size();
    if (n == 0) throw InvalidArgument("empty system");
    for (const auto& p : system) {
        for (const auto& [m, c] : p.terms())
            if (m.total_degree() != 1)
                throw NonLinearSystem("system must be linear homogeneous in the x_j^(k)");
        if (static_cast<std::size_t>(p.max_var()) > n)
            throw DimensionError("variable index exceeds the number of equations");
    }
    OperatorMatrix M;
    M.n = n;
    M.entries.assign(n * n, QPoly{});
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [m, c] : system[i].terms()) {
            const auto [v, e] = m.factors().front();
            M.at(i, static_cast<std::size_t>(v.var - 1)) =
                M.at(i, static_cast<std::size_t>(v.var - 1)) + QPoly::monomial(v.order, c);
        }
    return M;
}

QPoly operator_determinant(const std::vector<DiffPoly>& system) {
    OperatorMatrix M = build_operator_matrix(system);
    const std::size_t n = M.n;
    // Bareiss fraction-free elimination with row pivoting.
    int sign = 1;
    QPoly prev = QPoly::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && M.at(r, k).is_zero()) ++r;
            if (r == n) return {}; // singular
            for (std::size_t j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M.at(i, j) =
                    (M.at(k, k) * M.at(i, j) - M.at(i, k) * M.at(k, j)).divide_exact(prev);
            M.at(i, k) = QPoly{};
        }
        prev = M.at(k, k);
    }
    QPoly det = M.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

} // namespace tropcanon
