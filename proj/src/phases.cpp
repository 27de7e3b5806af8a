#include "fqhe/phases.hpp"

#include <cmath>
#include <numbers>

#include "fqhe/transport.hpp"

namespace fqhe {
namespace {

void require_excited(long long n, const char* what) {
    validate_quantum_number(n);
    if (n < 1) throw InvalidParameter(std::string(what) + ": requires n >= 1");
}

}  // namespace

Fraction filling_ratio(Branch branch, long long n) {
    return fractional_charge(branch, n);
}

bool conjugation_check(long long n) {
    require_excited(n, "conjugation_check");
    // Psi2 formula at -n: (-n)/(2(-n)-1) = n/(2n+1), and vice versa.
    const Fraction psi2_at_minus_n(-n, -2 * n - 1);
    const Fraction psi1_at_minus_n(-n, -2 * n + 1);
    return psi2_at_minus_n == fractional_charge(Branch::Psi1, n)
        && psi1_at_minus_n == fractional_charge(Branch::Psi2, n);
}

std::pair<double, double> dual_transform(long long n, double energy,
                                         double angular_momentum) {
    require_excited(n, "dual_transform");
    const double scale = static_cast<double>(n);
    return {energy / scale, angular_momentum / scale};
}

std::pair<Fraction, Fraction> dual_conductivities(long long n) {
    require_excited(n, "dual_conductivities");
    if (n == 2)
        throw SingularValue("dual_conductivities: pole at n = 2 on the Psi2 branch");
    return {Fraction(1, 2 + n), -Fraction(1, 2 - n)};
}

PhaseResult preservation_angles(long long n, WindingNumber winding) {
    require_excited(n, "preservation_angles");
    const Fraction multiple(2 * winding.value, n);
    return PhaseResult{multiple.value() * std::numbers::pi, multiple};
}

ReflectionAngles reflection_angles(long long n, WindingNumber winding) {
    require_excited(n, "reflection_angles");
    const Fraction multiple(2 * winding.value + 1, n);
    return ReflectionAngles{
        PhaseResult{multiple.value() * std::numbers::pi, multiple},
        Fraction(winding.value, 2 * winding.value + 1)};
}

double ab_phase(double charge, double flux_weber, const PhysicalConstants& pc) {
    return charge * flux_weber / pc.hbar;
}

double rotation_from_flux(double charge, double flux_weber, long long n,
                          const PhysicalConstants& pc) {
    require_excited(n, "rotation_from_flux");
    return charge * flux_weber / (static_cast<double>(n) * pc.hbar);
}

PhaseResult unit_flux_rotation(Branch branch, long long n) {
    require_excited(n, "unit_flux_rotation");
    // q0 = e* e, phi_B = h/e: theta = e* * 2 pi / n = 2 pi / (2n +- 1).
    const Fraction multiple =
        fractional_charge(branch, n) * Fraction(2, n);
    return PhaseResult{multiple.value() * std::numbers::pi, multiple};
}

Fraction flux_quantization(Branch branch, long long n, long long winding) {
    require_excited(n, "flux_quantization");
    if (winding < 1)
        throw InvalidParameter("flux_quantization: winding must be >= 1");
    const long long odd = (branch == Branch::Psi1) ? 2 * n + 1 : 2 * n - 1;
    return Fraction(winding * odd, n);
}

double flux_quantization_weber(Branch branch, long long n, long long winding,
                               const PhysicalConstants& pc) {
    return flux_quantization(branch, n, winding).value() * pc.h / pc.e;
}

Fraction electron_composition(long long n) {
    require_excited(n, "electron_composition");
    return fractional_charge(Branch::Psi1, n)
         + fractional_charge(Branch::Psi2, n + 1);
}

}  // namespace fqhe
