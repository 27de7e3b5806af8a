#include "fqhe/landau.hpp"

#include <cmath>
#include <numbers>

namespace fqhe {

void SweepConfig::validate() const {
    if (!(b_min > 0.0) || !(b_max > b_min))
        throw InvalidParameter("SweepConfig: need 0 < B_min < B_max");
    if (steps < 2) throw InvalidParameter("SweepConfig: steps must be >= 2");
    if (!(v_x >= 0.0)) throw InvalidParameter("SweepConfig: V_x must be >= 0");
    geometry.validate();
}

double level_index(double B_tesla, double sheet_density,
                   const PhysicalConstants& pc) {
    if (!(B_tesla > 0.0)) throw InvalidParameter("level_index: B must be positive");
    if (!(sheet_density > 0.0))
        throw InvalidParameter("level_index: n_s must be positive");
    return sheet_density * pc.h / (pc.e * B_tesla) - 1.0;
}

std::vector<double> allowed_fields(double sheet_density, long long n_max,
                                   const PhysicalConstants& pc) {
    if (n_max < 0) throw InvalidParameter("allowed_fields: n_max must be >= 0");
    if (!(sheet_density > 0.0))
        throw InvalidParameter("allowed_fields: n_s must be positive");
    std::vector<double> fields;
    fields.reserve(n_max + 1);
    for (long long n = 0; n <= n_max; ++n)
        fields.push_back(sheet_density * pc.h / (pc.e * static_cast<double>(n + 1)));
    return fields;
}

double magnetic_density(double B_tesla, const PhysicalConstants& pc) {
    if (B_tesla < 0.0) throw InvalidParameter("magnetic_density: B must be >= 0");
    return pc.e * B_tesla / pc.h;
}

double plateau_width(long long n, double sheet_density,
                     const PhysicalConstants& pc) {
    if (n < 1) throw InvalidParameter("plateau_width: n must be >= 1");
    if (!(sheet_density > 0.0))
        throw InvalidParameter("plateau_width: n_s must be positive");
    return sheet_density * pc.h
           / (pc.e * static_cast<double>(n) * static_cast<double>(n + 1));
}

HallDerivative hall_derivative(double B_tesla, double sheet_density,
                               Branch branch, const PhysicalConstants& pc) {
    if (!(B_tesla > 0.0)) throw InvalidParameter("hall_derivative: B must be positive");
    if (!(sheet_density > 0.0))
        throw InvalidParameter("hall_derivative: n_s must be positive");
    const double x = pc.e * B_tesla / (sheet_density * pc.h);
    if (x == 1.0) throw SingularValue("hall_derivative: pole at eB = n_s h");
    const double sign = (branch == Branch::Psi1) ? 1.0 : -1.0;
    const double base = 1.0 / (pc.e * sheet_density);
    return HallDerivative{sign * base / ((1.0 - x) * (1.0 - x)),
                          base * std::exp(-2.0 * x)};
}

HallTemperature hall_temperature(double sheet_density, double mass,
                                 const PhysicalConstants& pc) {
    if (!(sheet_density > 0.0) || !(mass > 0.0))
        throw InvalidParameter("hall_temperature: inputs must be positive");
    const double t_h =
        std::numbers::pi * pc.hbar * pc.hbar * sheet_density / (pc.k_B * mass);
    // Delta E = k_B T_H, Delta t = tau_s = m/(hbar n_s); ratio against h/2.
    const double tau_s = mass / (pc.hbar * sheet_density);
    const double ratio = pc.k_B * t_h * tau_s / (pc.h / 2.0);
    return HallTemperature{t_h, ratio};
}

double klitzing_resistance(long long i, const PhysicalConstants& pc) {
    if (i < 1) throw InvalidParameter("klitzing_resistance: i must be >= 1");
    return pc.h / (static_cast<double>(i) * pc.e * pc.e);
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config,
                                   const PhysicalConstants& pc) {
    config.validate();
    std::vector<SweepRecord> records;
    records.reserve(config.steps);
    const double db = (config.b_max - config.b_min)
                      / static_cast<double>(config.steps - 1);
    for (long long i = 0; i < config.steps; ++i) {
        const double b = config.b_min + db * static_cast<double>(i);
        SweepRecord rec;
        rec.b = b;
        rec.n_cont = level_index(b, config.geometry.sheet_density, pc);
        const double rounded = std::round(rec.n_cont);
        rec.on_crossing = std::abs(rec.n_cont - rounded) < kCrossingTolerance
                          && rounded >= 0.0;
        if (rec.on_crossing) {
            rec.n_int = static_cast<long long>(rounded);
            rec.filling_i = *rec.n_int + 1;
        }
        if (rec.n_cont >= 0.0) {
            // Most recent crossing passed while B increases: the smallest
            // integer level >= n_cont; R_H needs n >= 1, the terminal value.
            const long long n_last =
                std::max<long long>(1, static_cast<long long>(std::ceil(
                                           rec.n_cont - kCrossingTolerance)));
            rec.r_hall = hall_resistance(config.branch, n_last, pc);
            rec.sigma_xy = 1.0 / *rec.r_hall;
            if (rec.on_crossing && *rec.n_int >= 1) {
                const double omega =
                    cyclotron_frequency(b, pc.m_e, pc);
                rec.r_xx = longitudinal_resistance(*rec.n_int, config.v_x,
                                                   config.geometry, omega,
                                                   pc.m_e, pc);
            } else {
                rec.r_xx = 0.0;
            }
        }
        records.push_back(rec);
    }
    return records;
}

}  // namespace fqhe
