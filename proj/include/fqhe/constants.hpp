#pragma once

#include <stdexcept>

namespace fqhe {

/// Unit conventions supported by the library. Natural sets
/// e = hbar = m_e = k_B = 1 (so h = 2*pi).
enum class UnitSystem { SI, Natural };

struct PhysicalConstants {
    double e;     // elementary charge
    double hbar;  // reduced Planck constant
    double h;     // Planck constant
    double m_e;   // electron mass
    double k_B;   // Boltzmann constant
};

/// Thrown when a parameter is outside an operation's domain.
class InvalidParameter : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown for quantities that diverge at the requested point
/// (zero field, pole of a formula, singular tensor).
class SingularValue : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

PhysicalConstants constants_for(UnitSystem system);

/// omega_c = e B / m. Zero field gives zero frequency.
double cyclotron_frequency(double B_tesla, double mass,
                           const PhysicalConstants& pc);

/// l_B = sqrt(hbar / (e B)). Diverges at B = 0.
double magnetic_length(double B_tesla, const PhysicalConstants& pc);

}  // namespace fqhe
