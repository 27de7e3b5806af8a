#include "fqhe/fraction.hpp"

#include <numeric>

namespace fqhe {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw FractionOverflow("Fraction: multiplication overflow");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw FractionOverflow("Fraction: addition overflow");
    return out;
}

}  // namespace

Fraction::Fraction(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw SingularValue("Fraction: zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = (g != 0) ? numerator / g : 0;
    den_ = (g != 0) ? denominator / g : 1;
}

Fraction Fraction::operator+(const Fraction& rhs) const {
    return Fraction(checked_add(checked_mul(num_, rhs.den_), checked_mul(rhs.num_, den_)),
                    checked_mul(den_, rhs.den_));
}

Fraction Fraction::operator-(const Fraction& rhs) const { return *this + (-rhs); }

Fraction Fraction::operator*(const Fraction& rhs) const {
    return Fraction(checked_mul(num_, rhs.num_), checked_mul(den_, rhs.den_));
}

Fraction Fraction::operator/(const Fraction& rhs) const {
    if (rhs.num_ == 0) throw SingularValue("Fraction: division by zero");
    return Fraction(checked_mul(num_, rhs.den_), checked_mul(den_, rhs.num_));
}

std::strong_ordering Fraction::operator<=>(const Fraction& rhs) const {
    // den_ > 0 on both sides, so cross-multiplication preserves order.
    return checked_mul(num_, rhs.den_) <=> checked_mul(rhs.num_, den_);
}

std::string Fraction::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace fqhe
