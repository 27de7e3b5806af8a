#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "fqhe/constants.hpp"
#include "fqhe/fraction.hpp"
#include "fqhe/oscillator.hpp"

namespace fqhe {

struct SampleGeometry {
    double length;         // L [m]
    double width;          // W [m]
    double sheet_density;  // n_s [1/m^2]

    void validate() const;
};

struct TransportTensor {
    double sigma_xx;
    double sigma_xy;
    double rho_xx;
    double rho_xy;
};

struct HallField {
    double canonical;  // V_H / W form
    double alternate;  // relaxation-time form, 1/tau_s * sqrt(hbar B / e) * ...
    double ratio;      // canonical / alternate; 2 when omega = omega_c
};

/// Probability-current density (J_x, J_y) of the given state at (r, theta).
std::pair<double, double> current_density(const StateLabel& label,
                                          const OscillatorParams& params,
                                          double r, double theta,
                                          const PhysicalConstants& pc);

/// Closed-form current moment I_x + i I_y; imaginary part is identically 0.
/// Negative (real part) for Psi2, positive for Psi1; zero in the ground state.
std::complex<double> current_moment(const StateLabel& label,
                                    const OscillatorParams& params,
                                    const PhysicalConstants& pc);

/// e*/e = n/(2n-1) on Psi2, n/(2n+1) on Psi1, exact.
Fraction fractional_charge(const StateLabel& label);
Fraction fractional_charge(Branch branch, long long n);

/// The two conjugate series ([n/(2n+1)], [n/(2n-1)]) for n = 1..n_max.
std::pair<std::vector<Fraction>, std::vector<Fraction>>
conjugate_series(long long n_max);

/// sigma_xy as an exact multiple of e^2/h; same fraction as the charge.
Fraction hall_conductivity(Branch branch, long long n);
double hall_conductivity_siemens(Branch branch, long long n,
                                 const PhysicalConstants& pc);

/// R_H = (2n+1)/n * h/e^2 on Psi1, (2n-1)/n * h/e^2 on Psi2.
Fraction hall_resistance_fraction(Branch branch, long long n);
double hall_resistance(Branch branch, long long n, const PhysicalConstants& pc);

/// I_0 = e hbar n_s / (2 pi m).
double characteristic_current(const SampleGeometry& geometry, double mass,
                              const PhysicalConstants& pc);

/// I_z = I_0 W sqrt(m omega / hbar) * n Gamma(n+1/2)/Gamma(n+1); the
/// regularized Gamma form makes n = 0 exactly zero.
double sheet_current(long long n, const SampleGeometry& geometry, double omega,
                     double mass, const PhysicalConstants& pc);

/// R_xx = V_x/(I_0 W) * sqrt(hbar/(m omega)) * Gamma(n)/Gamma(n+1/2).
double longitudinal_resistance(long long n, double v_x,
                               const SampleGeometry& geometry, double omega,
                               double mass, const PhysicalConstants& pc);

/// rho_xx = (W/L) R_xx.
double longitudinal_resistivity(long long n, double v_x,
                                const SampleGeometry& geometry, double omega,
                                double mass, const PhysicalConstants& pc);

/// mu_H = 2 n_s hbar L / (m V_x) * sqrt(hbar/(m omega)) * Gamma(n+3/2)/Gamma(n+1).
double hall_mobility(long long n, double v_x, const SampleGeometry& geometry,
                     double omega, double mass, const PhysicalConstants& pc);

/// V_H = 2 n_s hbar^2 W / (m e) * sqrt(m omega/hbar) * Gamma(n+3/2)/Gamma(n+1).
double hall_voltage(long long n, const SampleGeometry& geometry, double omega,
                    double mass, const PhysicalConstants& pc);

/// Both printed Hall-field forms and their ratio. The canonical value is the
/// V_H/W form; the relaxation-time form differs by a factor 2 at omega = omega_c.
HallField hall_field(long long n, const SampleGeometry& geometry, double omega,
                     double mass, double B_tesla, const PhysicalConstants& pc);

/// tau_s = m / (hbar n_s) = e / (2 pi I_0).
double sheet_relaxation_time(const SampleGeometry& geometry, double mass,
                             const PhysicalConstants& pc);

TransportTensor invert_conductivity(double sigma_xx, double sigma_xy);
TransportTensor invert_resistivity(double rho_xx, double rho_xy);

}  // namespace fqhe
