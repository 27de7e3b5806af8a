#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "fqhe/constants.hpp"

namespace fqhe {

/// Exact reduced rational with 64-bit components. Used for e*/e, filling
/// fractions and conductivity multiples of e^2/h. Arithmetic is
/// overflow-checked; the physical range (n <= 1e6) stays far below it.
class Fraction {
  public:
    Fraction() : num_(0), den_(1) {}
    Fraction(std::int64_t numerator, std::int64_t denominator);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Fraction operator+(const Fraction& rhs) const;
    Fraction operator-(const Fraction& rhs) const;
    Fraction operator*(const Fraction& rhs) const;
    Fraction operator/(const Fraction& rhs) const;
    Fraction operator-() const { return Fraction(-num_, den_); }

    bool operator==(const Fraction&) const = default;
    std::strong_ordering operator<=>(const Fraction& rhs) const;

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

  private:
    std::int64_t num_;
    std::int64_t den_;  // > 0, gcd(|num_|, den_) == 1
};

class FractionOverflow : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

}  // namespace fqhe
