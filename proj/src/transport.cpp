#include "fqhe/transport.hpp"

#include <cmath>
#include <numbers>

#include "fqhe/special.hpp"

namespace fqhe {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_excited(long long n, const char* what) {
    validate_quantum_number(n);
    if (n < 1) throw InvalidParameter(std::string(what) + ": requires n >= 1");
}

}  // namespace

void SampleGeometry::validate() const {
    if (!(length > 0.0) || !(width > 0.0) || !(sheet_density > 0.0))
        throw InvalidParameter("SampleGeometry: L, W, n_s must be positive");
}

std::pair<double, double> current_density(const StateLabel& label,
                                          const OscillatorParams& params,
                                          double r, double theta,
                                          const PhysicalConstants& pc) {
    validate_quantum_number(label.n);
    if (r < 0.0) throw InvalidParameter("current_density: r must be >= 0");
    if (label.n == 0) return {0.0, 0.0};
    const double n = static_cast<double>(label.n);
    const double c = normalization_constant(label.n, params);
    // r^(2n-1) e^{-2 alpha r^2} in log space; zero at the origin for n >= 1.
    double radial = 0.0;
    if (r > 0.0)
        radial = std::exp((2.0 * n - 1.0) * std::log(r) - 2.0 * params.alpha * r * r);
    const double magnitude =
        n * pc.e * pc.hbar / (4.0 * params.mass) * c * c * radial;
    const double sign = (label.branch == Branch::Psi2) ? 1.0 : -1.0;
    return {-sign * magnitude * std::sin(theta), sign * magnitude * std::cos(theta)};
}

std::complex<double> current_moment(const StateLabel& label,
                                    const OscillatorParams& params,
                                    const PhysicalConstants& pc) {
    validate_quantum_number(label.n);
    const double n = static_cast<double>(label.n);
    const double magnitude = n * pc.e * pc.hbar / (kTwoPi * params.mass)
                             * std::sqrt(params.mass * params.omega / pc.hbar)
                             * half_integer_gamma_ratio(label.n);
    const double sign = (label.branch == Branch::Psi2) ? -1.0 : 1.0;
    return {sign * magnitude, 0.0};
}

Fraction fractional_charge(Branch branch, long long n) {
    require_excited(n, "fractional_charge");
    return branch == Branch::Psi2 ? Fraction(n, 2 * n - 1) : Fraction(n, 2 * n + 1);
}

Fraction fractional_charge(const StateLabel& label) {
    return fractional_charge(label.branch, label.n);
}

std::pair<std::vector<Fraction>, std::vector<Fraction>>
conjugate_series(long long n_max) {
    require_excited(n_max, "conjugate_series");
    std::vector<Fraction> psi1, psi2;
    psi1.reserve(n_max);
    psi2.reserve(n_max);
    for (long long n = 1; n <= n_max; ++n) {
        psi1.push_back(fractional_charge(Branch::Psi1, n));
        psi2.push_back(fractional_charge(Branch::Psi2, n));
    }
    return {std::move(psi1), std::move(psi2)};
}

Fraction hall_conductivity(Branch branch, long long n) {
    return fractional_charge(branch, n);
}

double hall_conductivity_siemens(Branch branch, long long n,
                                 const PhysicalConstants& pc) {
    return hall_conductivity(branch, n).value() * pc.e * pc.e / pc.h;
}

Fraction hall_resistance_fraction(Branch branch, long long n) {
    require_excited(n, "hall_resistance");
    return branch == Branch::Psi1 ? Fraction(2 * n + 1, n) : Fraction(2 * n - 1, n);
}

double hall_resistance(Branch branch, long long n, const PhysicalConstants& pc) {
    return hall_resistance_fraction(branch, n).value() * pc.h / (pc.e * pc.e);
}

double characteristic_current(const SampleGeometry& geometry, double mass,
                              const PhysicalConstants& pc) {
    geometry.validate();
    if (!(mass > 0.0)) throw InvalidParameter("characteristic_current: mass must be positive");
    return pc.e * pc.hbar * geometry.sheet_density / (kTwoPi * mass);
}

double sheet_current(long long n, const SampleGeometry& geometry, double omega,
                     double mass, const PhysicalConstants& pc) {
    validate_quantum_number(n);
    geometry.validate();
    const double i0 = characteristic_current(geometry, mass, pc);
    // Gamma(n+1/2)/Gamma(n) written as n * Gamma(n+1/2)/Gamma(n+1), which
    // extends continuously to n = 0 where no current flows.
    return i0 * geometry.width * std::sqrt(mass * omega / pc.hbar)
           * static_cast<double>(n) * half_integer_gamma_ratio(n);
}

double longitudinal_resistance(long long n, double v_x,
                               const SampleGeometry& geometry, double omega,
                               double mass, const PhysicalConstants& pc) {
    require_excited(n, "longitudinal_resistance");
    geometry.validate();
    if (v_x < 0.0) throw InvalidParameter("longitudinal_resistance: V_x must be >= 0");
    const double i0 = characteristic_current(geometry, mass, pc);
    return v_x / (i0 * geometry.width) * std::sqrt(pc.hbar / (mass * omega))
           * gamma_ratio(static_cast<double>(n), static_cast<double>(n) + 0.5);
}

double longitudinal_resistivity(long long n, double v_x,
                                const SampleGeometry& geometry, double omega,
                                double mass, const PhysicalConstants& pc) {
    return geometry.width / geometry.length
           * longitudinal_resistance(n, v_x, geometry, omega, mass, pc);
}

double hall_mobility(long long n, double v_x, const SampleGeometry& geometry,
                     double omega, double mass, const PhysicalConstants& pc) {
    validate_quantum_number(n);
    geometry.validate();
    if (!(v_x > 0.0)) throw InvalidParameter("hall_mobility: V_x must be positive");
    return 2.0 * geometry.sheet_density * pc.hbar * geometry.length / (mass * v_x)
           * std::sqrt(pc.hbar / (mass * omega))
           * gamma_ratio(static_cast<double>(n) + 1.5, static_cast<double>(n) + 1.0);
}

double hall_voltage(long long n, const SampleGeometry& geometry, double omega,
                    double mass, const PhysicalConstants& pc) {
    require_excited(n, "hall_voltage");
    geometry.validate();
    return 2.0 * geometry.sheet_density * pc.hbar * pc.hbar * geometry.width
           / (mass * pc.e) * std::sqrt(mass * omega / pc.hbar)
           * gamma_ratio(static_cast<double>(n) + 1.5, static_cast<double>(n) + 1.0);
}

double sheet_relaxation_time(const SampleGeometry& geometry, double mass,
                             const PhysicalConstants& pc) {
    geometry.validate();
    return mass / (pc.hbar * geometry.sheet_density);
}

HallField hall_field(long long n, const SampleGeometry& geometry, double omega,
                     double mass, double B_tesla, const PhysicalConstants& pc) {
    validate_quantum_number(n);
    geometry.validate();
    const double grat =
        gamma_ratio(static_cast<double>(n) + 1.5, static_cast<double>(n) + 1.0);
    const double canonical = 2.0 * geometry.sheet_density * pc.hbar * pc.hbar
                             / (mass * pc.e) * std::sqrt(mass * omega / pc.hbar)
                             * grat;
    const double tau_s = sheet_relaxation_time(geometry, mass, pc);
    const double alternate =
        std::sqrt(pc.hbar * B_tesla / pc.e) / tau_s * grat;
    return HallField{canonical, alternate, canonical / alternate};
}

TransportTensor invert_conductivity(double sigma_xx, double sigma_xy) {
    const double denom = sigma_xx * sigma_xx + sigma_xy * sigma_xy;
    if (!(denom > 0.0)) throw SingularValue("invert_conductivity: zero tensor");
    return TransportTensor{sigma_xx, sigma_xy, sigma_xx / denom, -sigma_xy / denom};
}

TransportTensor invert_resistivity(double rho_xx, double rho_xy) {
    const double denom = rho_xx * rho_xx + rho_xy * rho_xy;
    if (!(denom > 0.0)) throw SingularValue("invert_resistivity: zero tensor");
    return TransportTensor{rho_xx / denom, -rho_xy / denom, rho_xx, rho_xy};
}

}  // namespace fqhe
