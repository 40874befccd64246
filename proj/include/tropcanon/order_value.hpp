#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "tropcanon/errors.hpp"

namespace tropcanon {

/// An element of Z u {-inf}: the value domain of order matrices.
///
/// -inf is an explicit tag, absorbing under addition, and smaller than every
/// finite value. Finite arithmetic is checked; overflow throws instead of
/// wrapping.
class OrderValue {
  public:
    constexpr OrderValue() : finite_(false), v_(0) {}
    constexpr OrderValue(std::int64_t v) : finite_(true), v_(v) {}

    static constexpr OrderValue neg_inf() { return OrderValue(); }

    constexpr bool is_finite() const { return finite_; }
    constexpr bool is_neg_inf() const { return !finite_; }

    /// Finite value; must not be called on -inf.
    std::int64_t value() const {
        if (!finite_) throw InvalidArgument("OrderValue::value() on -inf");
        return v_;
    }

    friend OrderValue operator+(OrderValue a, OrderValue b) {
        if (!a.finite_ || !b.finite_) return neg_inf();
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r))
            throw OverflowError("OrderValue addition overflow");
        return OrderValue(r);
    }

    OrderValue& operator+=(OrderValue b) { return *this = *this + b; }

    /// a - b for finite b; -inf - b stays -inf.
    friend OrderValue operator-(OrderValue a, std::int64_t b) {
        if (!a.finite_) return neg_inf();
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b, &r))
            throw OverflowError("OrderValue subtraction overflow");
        return OrderValue(r);
    }

    friend constexpr bool operator==(OrderValue a, OrderValue b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend constexpr bool operator!=(OrderValue a, OrderValue b) { return !(a == b); }

    friend constexpr bool operator<(OrderValue a, OrderValue b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator>(OrderValue a, OrderValue b) { return b < a; }
    friend constexpr bool operator<=(OrderValue a, OrderValue b) { return !(b < a); }
    friend constexpr bool operator>=(OrderValue a, OrderValue b) { return !(a < b); }

    friend constexpr OrderValue max(OrderValue a, OrderValue b) { return a < b ? b : a; }

    std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

    friend std::ostream& operator<<(std::ostream& os, OrderValue v) { return os << v.str(); }

  private:
    bool finite_;
    std::int64_t v_;
};

} // namespace tropcanon
