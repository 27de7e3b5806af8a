#pragma once

#include <optional>
#include <utility>

#include "fqhe/constants.hpp"
#include "fqhe/fraction.hpp"
#include "fqhe/oscillator.hpp"

namespace fqhe {

struct WindingNumber {
    long long value;  // may be negative
};

/// An angle in radians, with its exact rational multiple of pi when the
/// generating formula is rational in pi.
struct PhaseResult {
    double angle;
    std::optional<Fraction> pi_multiple;
};

/// Filling factor N/N_L = n/(2n+-1); the same fraction as the charge and
/// the Hall conductivity.
Fraction filling_ratio(Branch branch, long long n);

/// True when substituting -n into one branch's charge formula yields the
/// other branch's fraction, in exact rationals.
bool conjugation_check(long long n);

/// n -> 1/n duality: (E, L) -> (E/n, L/n).
std::pair<double, double> dual_transform(long long n, double energy,
                                         double angular_momentum);

/// Conductivities under the dual transform: (1/(2+n), -1/(2-n)) in units
/// of e^2/h. The second has a pole at n = 2.
std::pair<Fraction, Fraction> dual_conductivities(long long n);

/// State-preserving rotation angle theta_1 = 2 pi N_w / n.
PhaseResult preservation_angles(long long n, WindingNumber winding);

struct ReflectionAngles {
    PhaseResult theta2;  // pi (2 N_w + 1) / n
    Fraction ratio;      // theta_1/theta_2 = N_w / (2 N_w + 1)
};

ReflectionAngles reflection_angles(long long n, WindingNumber winding);

/// Aharonov-Bohm phase shift q0 phi_B / hbar.
double ab_phase(double charge, double flux_weber, const PhysicalConstants& pc);

/// Coordinate rotation induced by a flux: theta = q0 phi_B / (n hbar).
double rotation_from_flux(double charge, double flux_weber, long long n,
                          const PhysicalConstants& pc);

/// Rotation for a unit flux quantum carried by the state's fractional
/// charge: 2 pi / (2n +- 1), returned as an exact multiple of pi.
PhaseResult unit_flux_rotation(Branch branch, long long n);

/// Quantized flux N_w (2n+-1)/n in units of h/e (+ for Psi1, - for Psi2).
Fraction flux_quantization(Branch branch, long long n, long long winding);
double flux_quantization_weber(Branch branch, long long n, long long winding,
                               const PhysicalConstants& pc);

/// e*(Psi1, n) + e*(Psi2, n+1); equals 1 for every n.
Fraction electron_composition(long long n);

}  // namespace fqhe
