#pragma once

#include <optional>
#include <vector>

#include "fqhe/constants.hpp"
#include "fqhe/oscillator.hpp"
#include "fqhe/transport.hpp"

namespace fqhe {

struct SweepConfig {
    double b_min;  // tesla
    double b_max;  // tesla
    long long steps;
    SampleGeometry geometry;
    double v_x;  // volt
    Branch branch;

    void validate() const;
};

struct SweepRecord {
    double b;                           // tesla
    double n_cont;                      // continuous level index, may be < 0
    std::optional<long long> n_int;     // nearest integer when on a crossing
    bool on_crossing;
    std::optional<double> r_hall;       // staircase R_H [ohm]; absent below n = 1 domain
    std::optional<double> r_xx;         // [ohm]
    std::optional<double> sigma_xy;     // [S]
    std::optional<long long> filling_i; // i = n + 1 at crossings
};

struct HallDerivative {
    double exact;              // +-(1/(e n_s)) / (1 - eB/(n_s h))^2
    double small_field_approx; // exp(-2 e B/(n_s h)) / (e n_s)
};

struct HallTemperature {
    double kelvin;                  // pi hbar^2 n_s / (k_B m)
    double uncertainty_ratio;       // k_B T_H tau_s / (h/2), reported not asserted
};

/// Continuous level index n = n_s h/(e B) - 1; negative beyond the
/// quantization bound.
double level_index(double B_tesla, double sheet_density,
                   const PhysicalConstants& pc);

/// Crossing fields B_n = n_s h / (e (n+1)), n = 0..n_max, strictly decreasing.
std::vector<double> allowed_fields(double sheet_density, long long n_max,
                                   const PhysicalConstants& pc);

/// n_B = e B / h; quantization requires n_s > n_B.
double magnetic_density(double B_tesla, const PhysicalConstants& pc);

/// Plateau width Delta B = n_s h / (e n (n+1)), n >= 1.
double plateau_width(long long n, double sheet_density,
                     const PhysicalConstants& pc);

/// dR_H/dB, exact and small-field exponential forms.
HallDerivative hall_derivative(double B_tesla, double sheet_density,
                               Branch branch, const PhysicalConstants& pc);

HallTemperature hall_temperature(double sheet_density, double mass,
                                 const PhysicalConstants& pc);

/// R_H = h / (i e^2), i >= 1 (i = n + 1).
double klitzing_resistance(long long i, const PhysicalConstants& pc);

/// Staircase sweep: R_H held at the most recent crossing (the smallest
/// integer level >= n_cont, clamped to n >= 1); R_xx nonzero only at
/// crossings; records with n_cont < 0 carry no transport values.
std::vector<SweepRecord> run_sweep(const SweepConfig& config,
                                   const PhysicalConstants& pc);

inline constexpr double kCrossingTolerance = 1e-6;

}  // namespace fqhe
