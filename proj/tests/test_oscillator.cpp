#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "fqhe/constants.hpp"
#include "fqhe/oscillator.hpp"

using namespace fqhe;

namespace {
const PhysicalConstants nat = constants_for(UnitSystem::Natural);
// m = 1, omega = 2 gives alpha = 1 in natural units.
const OscillatorParams unit_alpha = OscillatorParams::make(1.0, 2.0, nat);
const OscillatorParams half_alpha = OscillatorParams::make(1.0, 1.0, nat);
}  // namespace

TEST_CASE("OscillatorParams derives alpha") {
    CHECK(half_alpha.alpha == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(unit_alpha.alpha == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(OscillatorParams::make(0.0, 1.0, nat), InvalidParameter);
    CHECK_THROWS_AS(OscillatorParams::make(1.0, -1.0, nat), InvalidParameter);
}

TEST_CASE("normalization constant") {
    // Ground state matches the textbook 2-D Gaussian: C_0 = sqrt(2 alpha / pi).
    CHECK(normalization_constant(0, unit_alpha)
          == doctest::Approx(std::sqrt(2.0 / std::numbers::pi)).epsilon(1e-14));
    CHECK(normalization_constant(1, unit_alpha)
          == doctest::Approx(std::sqrt(4.0 / std::numbers::pi)).epsilon(1e-14));

    // log-Gamma survives where the naive factorial overflows.
    const double c170 = normalization_constant(170, unit_alpha);
    CHECK(std::isfinite(c170));
    CHECK(c170 > 0.0);

    // Agreement with the naive product form for small n.
    double factorial = 1.0;
    for (long long n = 0; n <= 20; ++n) {
        if (n > 0) factorial *= static_cast<double>(n);
        const double naive = std::sqrt(
            std::pow(2.0 * unit_alpha.alpha, n + 1) / (std::numbers::pi * factorial));
        CHECK(normalization_constant(n, unit_alpha)
              == doctest::Approx(naive).epsilon(1e-12));
    }
    CHECK_THROWS_AS(normalization_constant(-1, unit_alpha), InvalidParameter);
    CHECK_THROWS_AS(normalization_constant(kMaxQuantumNumber + 1, unit_alpha),
                    InvalidParameter);
}

TEST_CASE("wavefunction values") {
    // n = 0 is real for any angle.
    const auto psi0 = wavefunction({Branch::Psi2, 0}, unit_alpha, 0.7, 1.3);
    CHECK(psi0.imag() == doctest::Approx(0.0));
    CHECK(psi0.real()
          == doctest::Approx(normalization_constant(0, unit_alpha)
                             * std::exp(-unit_alpha.alpha * 0.49)).epsilon(1e-14));

    // Psi2 at n = 1, theta = pi/2 is purely imaginary.
    const auto psi1 = wavefunction({Branch::Psi2, 1}, unit_alpha, 0.5,
                                   std::numbers::pi / 2.0);
    CHECK(std::abs(psi1.real()) < 1e-15);
    CHECK(psi1.imag() > 0.0);
}

TEST_CASE("Psi1 is the complex conjugate of Psi2") {
    for (long long n : {0LL, 1LL, 3LL, 9LL}) {
        for (int ir = 1; ir <= 10; ++ir) {
            for (int it = 0; it < 10; ++it) {
                const double r = 0.3 * ir;
                const double theta = 2.0 * std::numbers::pi * it / 10.0;
                const auto a = wavefunction({Branch::Psi1, n}, unit_alpha, r, theta);
                const auto b = wavefunction({Branch::Psi2, n}, unit_alpha, r, theta);
                CHECK(std::abs(a - std::conj(b)) < 1e-14);
            }
        }
    }
}

TEST_CASE("energy and degeneracy") {
    CHECK(energy(0, half_alpha, nat) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(energy(3, half_alpha, nat) == doctest::Approx(4.0).epsilon(1e-15));
    for (long long n = 0; n <= 100; ++n) {
        // Bit-identical across branches: energy does not depend on the branch.
        CHECK(energy(n, half_alpha, nat) == energy(n, half_alpha, nat));
    }
}

TEST_CASE("angular momentum eigenvalues") {
    CHECK(angular_momentum_hbar({Branch::Psi2, 3}) == 3);
    CHECK(angular_momentum_hbar({Branch::Psi1, 3}) == -3);
    CHECK(angular_momentum_hbar({Branch::Psi1, 0}) == 0);
    CHECK(angular_momentum_hbar({Branch::Psi2, 0}) == 0);
}

TEST_CASE("radial peak") {
    CHECK(radial_peak(0, half_alpha, nat) == 0.0);
    CHECK(radial_peak(4, half_alpha, nat) == doctest::Approx(2.0).epsilon(1e-14));

    const auto si = constants_for(UnitSystem::SI);
    const double omega_c = cyclotron_frequency(1.0, si.m_e, si);
    const auto landau = OscillatorParams::make(si.m_e, omega_c, si);
    CHECK(radial_peak(9, landau, si)
          == doctest::Approx(3.0 * magnetic_length(1.0, si)).epsilon(1e-12));

    for (long long n = 1; n <= 50; ++n) {
        const double r = radial_peak(n, half_alpha, nat);
        CHECK(r * r * half_alpha.mass * half_alpha.omega / nat.hbar
              == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
    }
}

TEST_CASE("momentum expectation closed forms") {
    const double scale = nat.hbar * std::sqrt(half_alpha.mass * half_alpha.omega / nat.hbar);
    CHECK(momentum_expectation({Branch::Psi2, 0}, MomentumComponent::Pz, half_alpha, nat)
          == doctest::Approx(scale / (2.0 * std::sqrt(std::numbers::pi))).epsilon(1e-14));
    CHECK(momentum_expectation({Branch::Psi1, 1}, MomentumComponent::Pzbar, half_alpha, nat)
          == doctest::Approx(scale / (2.0 * std::numbers::pi)
                             * std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-14));
}

TEST_CASE("momentum antisymmetry between branches") {
    for (long long n = 0; n <= 50; ++n) {
        const double p1z = momentum_expectation({Branch::Psi1, n},
                                                MomentumComponent::Pz, half_alpha, nat);
        const double p1zb = momentum_expectation({Branch::Psi1, n},
                                                 MomentumComponent::Pzbar, half_alpha, nat);
        const double p2z = momentum_expectation({Branch::Psi2, n},
                                                MomentumComponent::Pz, half_alpha, nat);
        const double p2zb = momentum_expectation({Branch::Psi2, n},
                                                 MomentumComponent::Pzbar, half_alpha, nat);
        CHECK(p1z == doctest::Approx(-p2zb).epsilon(1e-14));
        CHECK(p1zb == doctest::Approx(-p2z).epsilon(1e-14));
    }
}
