#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "fqhe/fraction.hpp"
#include "fqhe/special.hpp"

using namespace fqhe;

TEST_CASE("gamma_ratio closed values") {
    CHECK(gamma_ratio(1.5, 2.0)
          == doctest::Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-14));
    CHECK(gamma_ratio(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(gamma_ratio(0.0, 1.0), InvalidParameter);
    CHECK_THROWS_AS(gamma_ratio(1.0, -2.0), InvalidParameter);
}

TEST_CASE("gamma_ratio matches the Stirling asymptote at large n") {
    // Gamma(n+1/2)/Gamma(n+1) -> n^{-1/2} with a 1/(8n) correction.
    const double n = 1e5;
    CHECK(gamma_ratio(n + 0.5, n + 1.0)
          == doctest::Approx(1.0 / std::sqrt(n)).epsilon(1e-5));
    CHECK(half_integer_gamma_ratio(100000)
          == doctest::Approx(gamma_ratio(100000.5, 100001.0)).epsilon(1e-15));
}

TEST_CASE("gamma_ratio stays finite where naive Gamma overflows") {
    CHECK(std::isfinite(gamma_ratio(500.5, 500.0)));
    CHECK(std::isfinite(gamma_ratio(1e6, 1e6 - 0.5)));
}

TEST_CASE("Fraction reduces and normalizes sign") {
    CHECK(Fraction(2, 4) == Fraction(1, 2));
    CHECK(Fraction(-2, -4) == Fraction(1, 2));
    CHECK(Fraction(2, -4) == Fraction(-1, 2));
    CHECK(Fraction(1, 2).den() > 0);
    CHECK(Fraction(0, 5) == Fraction(0, 1));
    CHECK_THROWS_AS(Fraction(1, 0), SingularValue);
}

TEST_CASE("Fraction arithmetic") {
    CHECK(Fraction(1, 3) + Fraction(2, 3) == Fraction(1, 1));
    CHECK(Fraction(1, 2) - Fraction(1, 3) == Fraction(1, 6));
    CHECK(Fraction(2, 3) * Fraction(3, 4) == Fraction(1, 2));
    CHECK(Fraction(1, 2) / Fraction(1, 4) == Fraction(2, 1));
    CHECK(Fraction(1, 3) < Fraction(2, 5));
    CHECK(Fraction(3, 5).value() == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(Fraction(3, 5).str() == "3/5");
    CHECK(Fraction(4, 2).str() == "2");
    CHECK_THROWS_AS(Fraction(1, 2) / Fraction(0, 1), SingularValue);
}

TEST_CASE("Fraction arithmetic is overflow-checked") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(Fraction(big, 1) * Fraction(big, 1), FractionOverflow);
    CHECK_THROWS_AS(Fraction(big, 1) + Fraction(big, 1), FractionOverflow);
}
