// checked.hpp - overflow-checked 64-bit counting arithmetic and exact rationals.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <string>

#include "spider/errors.hpp"

namespace spider {

using Count = std::int64_t;

[[nodiscard]] inline Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in addition");
    return r;
}

[[nodiscard]] inline Count checked_sub(Count a, Count b) {
    Count r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticError("integer overflow in subtraction");
    return r;
}

[[nodiscard]] inline Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow in multiplication");
    return r;
}

template <typename... Ts>
[[nodiscard]] inline Count checked_product(Count first, Ts... rest) {
    Count r = first;
    ((r = checked_mul(r, rest)), ...);
    return r;
}

/// Division that must be exact; a remainder means a formula was transcribed wrong.
[[nodiscard]] inline Count exact_div(Count num, Count den) {
    if (den == 0) throw FormulaError("exact_div: division by zero");
    if (num % den != 0) {
        throw FormulaError("exact_div: " + std::to_string(num) + " is not divisible by " +
                           std::to_string(den));
    }
    return num / den;
}

/// Reduced fraction with a positive denominator.
class Rational {
public:
    constexpr Rational() = default;
    Rational(Count num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(Count num, Count den);

    [[nodiscard]] Count num() const { return num_; }
    [[nodiscard]] Count den() const { return den_; }
    [[nodiscard]] double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }
    /// "p/q" in lowest terms; integers print as "p/1".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    Count num_ = 0;
    Count den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace spider
