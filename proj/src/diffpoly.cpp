#include "tropcanon/diffpoly.hpp"

#include <algorithm>
#include <sstream>

namespace tropcanon {

Monomial::Monomial(const std::map<DerivVar, int>& powers) {
    for (const auto& [v, e] : powers) {
        if (e < 0) throw InvalidArgument("negative exponent");
        if (e > 0) factors_.push_back({v, e});
    }
}

Monomial Monomial::var(DerivVar v, int exp) {
    Monomial m;
    if (exp < 0) throw InvalidArgument("negative exponent");
    if (exp > 0) m.factors_.push_back({v, exp});
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent_of(DerivVar v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first))
            r.factors_.push_back(*a++);
        else if (a == factors_.end() || b->first < a->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::divide_once(DerivVar v) const {
    Monomial r;
    bool found = false;
    for (const auto& [w, e] : factors_) {
        if (w == v) {
            found = true;
            if (e > 1) r.factors_.push_back({w, e - 1});
        } else {
            r.factors_.push_back({w, e});
        }
    }
    if (!found) throw InvalidArgument("monomial not divisible by variable");
    return r;
}

DiffPoly DiffPoly::constant(const Rational& c) {
    DiffPoly p;
    p.add_term(Monomial::one(), c);
    return p;
}

DiffPoly DiffPoly::variable(DerivVar v) {
    DiffPoly p;
    p.add_term(Monomial::var(v), 1);
    return p;
}

void DiffPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const {
    DiffPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const {
    DiffPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

DiffPoly DiffPoly::operator*(const DiffPoly& o) const {
    DiffPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

DiffPoly DiffPoly::pow(int e) const {
    if (e < 0) throw InvalidArgument("negative power");
    DiffPoly r = DiffPoly::constant(1);
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

DiffPoly DiffPoly::differentiate() const {
    DiffPoly r;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) {
            const Monomial rest = m.divide_once(v);
            r.add_term(rest * Monomial::var({v.var, v.order + 1}), c * e);
        }
    return r;
}

DiffPoly DiffPoly::partial(DerivVar v) const {
    DiffPoly r;
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent_of(v);
        if (e > 0) r.add_term(m.divide_once(v), c * e);
    }
    return r;
}

OrderValue DiffPoly::order_in(int var) const {
    OrderValue best = OrderValue::neg_inf();
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors())
            if (v.var == var) best = max(best, OrderValue(v.order));
    return best;
}

int DiffPoly::max_var() const {
    int mv = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) mv = std::max(mv, v.var);
    return mv;
}

int DiffPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::set<DerivVar> DiffPoly::variables() const {
    std::set<DerivVar> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) s.insert(v);
    return s;
}

namespace modarith {

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const std::uint64_t s = a + b;
    return s >= p || s < a ? s - p : s;
}
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}
std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw EvalError("division by zero mod p");
    return pow(a % p, p - 2, p); // p prime
}

std::uint64_t rational_mod(const Rational& r, std::uint64_t p) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    const Integer pp(p);
    Integer nm = num % pp;
    if (nm < 0) nm += pp;
    Integer dm = den % pp;
    if (dm < 0) dm += pp;
    if (dm == 0) throw EvalError("coefficient denominator vanishes mod p");
    return mul(static_cast<std::uint64_t>(nm), inv(static_cast<std::uint64_t>(dm), p), p);
}

} // namespace modarith

std::uint64_t DiffPoly::eval_mod(const std::map<DerivVar, std::uint64_t>& assignment,
                                 std::uint64_t prime) const {
    std::uint64_t acc = 0;
    for (const auto& [m, c] : terms_) {
        std::uint64_t term = modarith::rational_mod(c, prime);
        for (const auto& [v, e] : m.factors()) {
            const auto it = assignment.find(v);
            if (it == assignment.end())
                throw EvalError("unassigned variable x" + std::to_string(v.var) + "^(" +
                                std::to_string(v.order) + ")");
            term = modarith::mul(term, modarith::pow(it->second % prime, e, prime), prime);
        }
        acc = modarith::add(acc, term, prime);
    }
    return acc;
}

namespace {

std::string var_str(DerivVar v) {
    std::string s = "x" + std::to_string(v.var);
    if (v.order > 0) s += "^(" + std::to_string(v.order) + ")";
    return s;
}

std::string coeff_str(const Rational& c) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(c);
    if (boost::multiprecision::denominator(c) != 1)
        os << "/" << boost::multiprecision::denominator(c);
    return os.str();
}

} // namespace

std::string DiffPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string body;
        for (const auto& [v, e] : m.factors()) {
            if (!body.empty()) body += "*";
            body += var_str(v);
            if (e > 1) body += "^" + std::to_string(e);
        }
        if (body.empty()) {
            out += coeff_str(mag);
        } else if (mag == 1) {
            out += body;
        } else {
            out += coeff_str(mag) + "*" + body;
        }
    }
    return out;
}

} // namespace tropcanon
