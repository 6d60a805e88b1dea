#include "spider/checked.hpp"

#include <limits>
#include <ostream>

namespace spider {

Rational::Rational(Count num, Count den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (num == std::numeric_limits<Count>::min() || den == std::numeric_limits<Count>::min()) {
        throw ArithmeticError("rational component out of range");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const Count g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace spider
