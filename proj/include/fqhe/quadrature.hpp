#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fqhe/constants.hpp"
#include "fqhe/oscillator.hpp"

namespace fqhe {

struct QuadratureSpec {
    double r_max;
    int radial_points = 32;
    int angular_points = 64;
    double tol = 1e-10;  // relative

    void validate() const;

    /// Truncation radius covering the |psi_n|^2 family: the mass beyond
    /// sqrt((n + 10)/alpha) is below e^-20 of the total.
    static QuadratureSpec for_state(long long n, const OscillatorParams& params);
};

struct OracleReport {
    std::string quantity;
    double closed_form;
    double numeric;
    double abs_residual;
    std::string convention;
};

/// Thrown when the adaptive radial subdivision fails to converge; carries
/// the best estimate obtained.
class AccuracyError : public std::runtime_error {
  public:
    AccuracyError(const std::string& what, double best)
        : std::runtime_error(what), best_estimate(best) {}
    double best_estimate;
};

/// Integrates f(r, theta) over the disk r in [0, r_max], theta in [0, 2 pi],
/// with the polar measure r dr dtheta applied internally. Gauss-Legendre in
/// theta, adaptive panel bisection in r.
double integrate_polar(const std::function<double(double, double)>& integrand,
                       const QuadratureSpec& spec);

OracleReport check_normalization(const StateLabel& label,
                                 const OscillatorParams& params,
                                 const QuadratureSpec& spec);

OracleReport check_angular_momentum(const StateLabel& label,
                                    const OscillatorParams& params,
                                    const QuadratureSpec& spec,
                                    const PhysicalConstants& pc);

OracleReport check_radial_peak(const StateLabel& label,
                               const OscillatorParams& params,
                               const PhysicalConstants& pc);

/// Integrates the printed current densities under three conventions
/// (full plane, half plane theta in [0, pi], line integral at x = 0) and
/// reports each against the printed current-moment closed form. Purely
/// informational: no convention is declared correct.
std::vector<OracleReport> probe_current_moment_conventions(
    const StateLabel& label, const OscillatorParams& params,
    const QuadratureSpec& spec, const PhysicalConstants& pc);

}  // namespace fqhe
