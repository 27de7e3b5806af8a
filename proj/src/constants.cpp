#include "fqhe/constants.hpp"

#include <cmath>
#include <numbers>

namespace fqhe {

PhysicalConstants constants_for(UnitSystem system) {
    switch (system) {
        case UnitSystem::SI: {
            // CODATA 2018; e and h are exact defined values.
            const double h = 6.62607015e-34;
            return PhysicalConstants{
                1.602176634e-19,             // e [C]
                h / (2.0 * std::numbers::pi),  // hbar [J s]
                h,                           // h [J s]
                9.1093837015e-31,            // m_e [kg]
                1.380649e-23,                // k_B [J/K]
            };
        }
        case UnitSystem::Natural:
            return PhysicalConstants{1.0, 1.0, 2.0 * std::numbers::pi, 1.0, 1.0};
    }
    throw InvalidParameter("unknown unit system");
}

double cyclotron_frequency(double B_tesla, double mass,
                           const PhysicalConstants& pc) {
    if (!(mass > 0.0)) throw InvalidParameter("cyclotron_frequency: mass must be positive");
    if (B_tesla < 0.0) throw InvalidParameter("cyclotron_frequency: B must be non-negative");
    return pc.e * B_tesla / mass;
}

double magnetic_length(double B_tesla, const PhysicalConstants& pc) {
    if (!(B_tesla > 0.0))
        throw SingularValue("magnetic_length: diverges at B = 0");
    return std::sqrt(pc.hbar / (pc.e * B_tesla));
}

}  // namespace fqhe
