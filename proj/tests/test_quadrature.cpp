#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fqhe/constants.hpp"
#include "fqhe/quadrature.hpp"
#include "fqhe/transport.hpp"

using namespace fqhe;

namespace {
const PhysicalConstants nat = constants_for(UnitSystem::Natural);
const OscillatorParams unit_alpha = OscillatorParams::make(1.0, 2.0, nat);
const OscillatorParams half_alpha = OscillatorParams::make(1.0, 1.0, nat);
}  // namespace

TEST_CASE("integrate_polar basics") {
    QuadratureSpec spec;
    spec.r_max = 1.0;
    CHECK(integrate_polar([](double, double) { return 1.0; }, spec)
          == doctest::Approx(std::numbers::pi).epsilon(1e-12));

    spec.r_max = 8.0;
    // Odd in theta: vanishes regardless of the radial profile.
    const double odd = integrate_polar(
        [](double r, double theta) { return r * std::exp(-2.0 * r * r) * std::sin(theta); },
        spec);
    CHECK(std::abs(odd) < 1e-12);

    // |psi_0|^2 with alpha = 1 integrates to one.
    const double norm = integrate_polar(
        [](double r, double theta) {
            return std::norm(wavefunction({Branch::Psi2, 0}, unit_alpha, r, theta));
        },
        spec);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("QuadratureSpec validation") {
    QuadratureSpec spec;
    spec.r_max = 0.0;
    CHECK_THROWS_AS(spec.validate(), InvalidParameter);
    spec.r_max = 1.0;
    spec.radial_points = 4;
    CHECK_THROWS_AS(spec.validate(), InvalidParameter);
    spec.radial_points = 32;
    spec.tol = 0.5;
    CHECK_THROWS_AS(spec.validate(), InvalidParameter);
}

TEST_CASE("oracle self-consistency under point doubling") {
    const auto spec = QuadratureSpec::for_state(5, half_alpha);
    QuadratureSpec dense = spec;
    dense.radial_points *= 2;
    dense.angular_points *= 2;
    auto density = [](double r, double theta) {
        return std::norm(wavefunction({Branch::Psi2, 5}, half_alpha, r, theta));
    };
    const double coarse = integrate_polar(density, spec);
    const double fine = integrate_polar(density, dense);
    CHECK(std::abs(coarse - fine) < spec.tol * std::abs(fine) + 1e-12);
}

TEST_CASE("normalization residuals") {
    for (auto branch : {Branch::Psi1, Branch::Psi2}) {
        for (long long n : {0LL, 7LL, 20LL}) {
            const StateLabel label{branch, n};
            const auto spec = QuadratureSpec::for_state(n, half_alpha);
            const auto report = check_normalization(label, half_alpha, spec);
            CHECK(report.closed_form == 1.0);
            CHECK(report.abs_residual < (n == 0 ? 1e-10 : 1e-8));
        }
    }
}

TEST_CASE("angular momentum residuals") {
    const auto spec3 = QuadratureSpec::for_state(3, half_alpha);
    const auto up = check_angular_momentum({Branch::Psi2, 3}, half_alpha, spec3, nat);
    CHECK(up.closed_form == doctest::Approx(3.0 * nat.hbar));
    CHECK(up.abs_residual / std::abs(up.closed_form) < 1e-8);

    const auto down = check_angular_momentum({Branch::Psi1, 3}, half_alpha, spec3, nat);
    CHECK(down.closed_form == doctest::Approx(-3.0 * nat.hbar));
    CHECK(down.abs_residual / std::abs(down.closed_form) < 1e-8);

    const auto spec0 = QuadratureSpec::for_state(0, half_alpha);
    const auto zero = check_angular_momentum({Branch::Psi2, 0}, half_alpha, spec0, nat);
    CHECK(std::abs(zero.numeric) < 1e-12);

    // Sign always follows the branch for n >= 1.
    for (long long n = 1; n <= 10; ++n) {
        const auto spec = QuadratureSpec::for_state(n, half_alpha);
        CHECK(check_angular_momentum({Branch::Psi2, n}, half_alpha, spec, nat).numeric > 0.0);
        CHECK(check_angular_momentum({Branch::Psi1, n}, half_alpha, spec, nat).numeric < 0.0);
    }
}

TEST_CASE("radial peak argmax") {
    // alpha = 1/2: density r^2 e^{-r^2} peaks at exactly 1.
    const auto r1 = check_radial_peak({Branch::Psi2, 1}, half_alpha, nat);
    CHECK(r1.numeric == doctest::Approx(1.0).epsilon(1e-6));

    const auto r4 = check_radial_peak({Branch::Psi1, 4}, half_alpha, nat);
    CHECK(r4.abs_residual / r4.closed_form < 1e-6);

    const auto si = constants_for(UnitSystem::SI);
    const double omega_c = cyclotron_frequency(1.0, si.m_e, si);
    const auto landau = OscillatorParams::make(si.m_e, omega_c, si);
    const auto r9 = check_radial_peak({Branch::Psi2, 9}, landau, si);
    CHECK(r9.numeric
          == doctest::Approx(3.0 * magnetic_length(1.0, si)).epsilon(1e-6));

    CHECK_THROWS_AS(check_radial_peak({Branch::Psi2, 0}, half_alpha, nat),
                    InvalidParameter);
}

TEST_CASE("current-moment convention probe") {
    for (long long n : {1LL, 2LL}) {
        const StateLabel label{Branch::Psi2, n};
        const auto spec = QuadratureSpec::for_state(n, half_alpha);
        const auto reports =
            probe_current_moment_conventions(label, half_alpha, spec, nat);
        REQUIRE(reports.size() == 5);

        const double scale = std::abs(reports[0].closed_form);
        // Full plane vanishes by angular symmetry.
        CHECK(std::abs(reports[0].numeric) < 1e-10 * scale);
        CHECK(std::abs(reports[1].numeric) < 1e-10 * scale);
        // Half plane is nonzero; its ratio to the printed closed form is
        // recorded, not asserted (it sits near 1/2 numerically).
        CHECK(std::abs(reports[2].numeric) > 0.0);
        CHECK(reports[2].convention == "half_plane_theta_0_pi");
        // I_y vanishes for the symmetric theta window.
        CHECK(std::abs(reports[3].numeric) < 1e-10 * scale);
    }
    CHECK_THROWS_AS(probe_current_moment_conventions({Branch::Psi2, 0}, half_alpha,
                                                     QuadratureSpec::for_state(0, half_alpha),
                                                     nat),
                    InvalidParameter);
}
