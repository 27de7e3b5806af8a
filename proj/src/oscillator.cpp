#include "fqhe/oscillator.hpp"

#include <cmath>
#include <numbers>

#include "fqhe/special.hpp"

namespace fqhe {

void validate_quantum_number(long long n) {
    if (n < 0) throw InvalidParameter("quantum number n must be >= 0");
    if (n > kMaxQuantumNumber)
        throw InvalidParameter("quantum number n exceeds supported range");
}

OscillatorParams OscillatorParams::make(double mass, double omega,
                                        const PhysicalConstants& pc) {
    if (!(mass > 0.0)) throw InvalidParameter("OscillatorParams: mass must be positive");
    if (!(omega > 0.0)) throw InvalidParameter("OscillatorParams: omega must be positive");
    return OscillatorParams{mass, omega, mass * omega / (2.0 * pc.hbar)};
}

double normalization_constant(long long n, const OscillatorParams& params) {
    validate_quantum_number(n);
    // C_n^2 = (2 alpha)^(n+1) / (pi n!), the unique choice for which
    // int |C_n r^n e^{-alpha r^2}|^2 r dr dtheta = 1.
    const double log_c2 = (static_cast<double>(n) + 1.0) * std::log(2.0 * params.alpha)
                          - std::log(std::numbers::pi)
                          - std::lgamma(static_cast<double>(n) + 1.0);
    return std::exp(0.5 * log_c2);
}

std::complex<double> wavefunction(const StateLabel& label,
                                  const OscillatorParams& params,
                                  double r, double theta) {
    validate_quantum_number(label.n);
    if (r < 0.0) throw InvalidParameter("wavefunction: r must be >= 0");
    const double n = static_cast<double>(label.n);
    const double c = normalization_constant(label.n, params);
    const double radial = (label.n == 0)
                              ? c * std::exp(-params.alpha * r * r)
                              : c * std::exp(n * std::log(r) - params.alpha * r * r);
    const double phase = (label.branch == Branch::Psi2 ? 1.0 : -1.0) * n * theta;
    return std::polar(radial, phase);
}

double energy(long long n, const OscillatorParams& params,
              const PhysicalConstants& pc) {
    validate_quantum_number(n);
    return (static_cast<double>(n) + 1.0) * pc.hbar * params.omega;
}

long long angular_momentum_hbar(const StateLabel& label) {
    validate_quantum_number(label.n);
    return label.branch == Branch::Psi2 ? label.n : -label.n;
}

double radial_peak(long long n, const OscillatorParams& params,
                   const PhysicalConstants& pc) {
    validate_quantum_number(n);
    return std::sqrt(pc.hbar / (params.mass * params.omega))
           * std::sqrt(static_cast<double>(n));
}

double momentum_expectation(const StateLabel& label, MomentumComponent component,
                            const OscillatorParams& params,
                            const PhysicalConstants& pc) {
    validate_quantum_number(label.n);
    const double n = static_cast<double>(label.n);
    // Psi2 pairs p_z with (2n-1) and p_zbar with (2n+1), both negative;
    // Psi1 swaps the pairing and flips the sign.
    double coefficient;
    if (label.branch == Branch::Psi2) {
        coefficient = -(component == MomentumComponent::Pz ? 2.0 * n - 1.0
                                                           : 2.0 * n + 1.0);
    } else {
        coefficient = +(component == MomentumComponent::Pz ? 2.0 * n + 1.0
                                                           : 2.0 * n - 1.0);
    }
    return coefficient / (2.0 * std::numbers::pi) * pc.hbar
           * std::sqrt(params.mass * params.omega / pc.hbar)
           * half_integer_gamma_ratio(label.n);
}

}  // namespace fqhe
