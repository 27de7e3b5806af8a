#pragma once

#include <complex>

#include "fqhe/constants.hpp"

namespace fqhe {

/// The two conjugate state families. Psi2 carries angular momentum +n*hbar
/// (phase e^{+i n theta}), Psi1 carries -n*hbar (phase e^{-i n theta}).
enum class Branch { Psi1, Psi2 };

struct StateLabel {
    Branch branch;
    long long n;  // principal quantum number, >= 0
};

/// Quantum numbers above this are rejected by the public operations; the
/// asymptotics are analytically known well before this point.
inline constexpr long long kMaxQuantumNumber = 1'000'000;

struct OscillatorParams {
    double mass;
    double omega;
    double alpha;  // m*omega / (2*hbar)

    static OscillatorParams make(double mass, double omega,
                                 const PhysicalConstants& pc);
};

enum class MomentumComponent { Pz, Pzbar };

/// C_n = sqrt((2 alpha)^(n+1) / (pi n!)), evaluated in log space; chosen so
/// the state has unit norm under the plane measure r dr dtheta.
double normalization_constant(long long n, const OscillatorParams& params);

/// psi(r, theta) for the given state; Psi2 is C r^n e^{i n theta} e^{-alpha r^2},
/// Psi1 its complex conjugate.
std::complex<double> wavefunction(const StateLabel& label,
                                  const OscillatorParams& params,
                                  double r, double theta);

/// E_n = (n + 1) hbar omega, identical for both branches.
double energy(long long n, const OscillatorParams& params,
              const PhysicalConstants& pc);

/// L_z eigenvalue in units of hbar: +n for Psi2, -n for Psi1.
long long angular_momentum_hbar(const StateLabel& label);

/// Radius of the density maximum, sqrt(n hbar / (m omega)).
double radial_peak(long long n, const OscillatorParams& params,
                   const PhysicalConstants& pc);

/// Closed-form momentum expectation values. The common magnitude is
/// (2n -+ 1)/(2 pi) * hbar * sqrt(m omega / hbar) * Gamma(n+1/2)/Gamma(n+1);
/// signs and the -+ pairing differ per branch and component.
double momentum_expectation(const StateLabel& label, MomentumComponent component,
                            const OscillatorParams& params,
                            const PhysicalConstants& pc);

void validate_quantum_number(long long n);

}  // namespace fqhe
