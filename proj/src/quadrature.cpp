#include "fqhe/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "fqhe/transport.hpp"

namespace fqhe {
namespace {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Nodes by Newton iteration on P_n; standard construction.
GaussLegendreRule gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

double panel_integral(const std::function<double(double)>& g,
                      const GaussLegendreRule& rule, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * g(mid + half * rule.nodes[i]);
    return half * sum;
}

constexpr int kMaxDepth = 28;

double adapt(const std::function<double(double)>& g,
             const GaussLegendreRule& rule, double a, double b, double whole,
             double tol, double scale, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = panel_integral(g, rule, a, mid);
    const double right = panel_integral(g, rule, mid, b);
    const double refined = left + right;
    const double err = std::abs(refined - whole);
    if (err <= tol * std::max(std::abs(refined), scale)) return refined;
    if (depth >= kMaxDepth)
        throw AccuracyError("integrate_polar: radial subdivision did not converge",
                            refined);
    return adapt(g, rule, a, mid, left, tol, scale, depth + 1)
         + adapt(g, rule, mid, b, right, tol, scale, depth + 1);
}

// g_abs estimates the magnitude of the integrand (typically integral of |g|);
// it sets an absolute error floor so integrals that vanish by symmetry stop
// at rounding noise instead of subdividing forever.
double adaptive_1d(const std::function<double(double)>& g,
                   const std::function<double(double)>& g_abs,
                   const QuadratureSpec& spec, double a, double b) {
    const GaussLegendreRule rule = gauss_legendre(spec.radial_points);
    const double whole = panel_integral(g, rule, a, b);
    const double scale = std::max(panel_integral(g_abs, rule, a, b), 1e-300);
    return adapt(g, rule, a, b, whole, spec.tol, scale, 0);
}

double integrate_polar_range(const std::function<double(double, double)>& f,
                             const QuadratureSpec& spec, double theta_lo,
                             double theta_hi) {
    const GaussLegendreRule angular = gauss_legendre(spec.angular_points);
    const double half = 0.5 * (theta_hi - theta_lo);
    const double mid = 0.5 * (theta_hi + theta_lo);
    auto ring = [&](double r) {
        double sum = 0.0;
        for (std::size_t j = 0; j < angular.nodes.size(); ++j)
            sum += angular.weights[j] * f(r, mid + half * angular.nodes[j]);
        return half * sum * r;  // polar measure
    };
    auto ring_abs = [&](double r) {
        double sum = 0.0;
        for (std::size_t j = 0; j < angular.nodes.size(); ++j)
            sum += angular.weights[j] * std::abs(f(r, mid + half * angular.nodes[j]));
        return half * sum * r;
    };
    return adaptive_1d(ring, ring_abs, spec, 0.0, spec.r_max);
}

OracleReport make_report(std::string quantity, double closed_form,
                         double numeric, std::string convention) {
    return OracleReport{std::move(quantity), closed_form, numeric,
                        std::abs(closed_form - numeric), std::move(convention)};
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(r_max > 0.0)) throw InvalidParameter("QuadratureSpec: r_max must be positive");
    if (radial_points < 16 || angular_points < 16)
        throw InvalidParameter("QuadratureSpec: need at least 16 points per axis");
    if (!(tol > 0.0) || tol > 1e-2)
        throw InvalidParameter("QuadratureSpec: tol must lie in (0, 1e-2]");
}

QuadratureSpec QuadratureSpec::for_state(long long n, const OscillatorParams& params) {
    validate_quantum_number(n);
    QuadratureSpec spec;
    // Tail of the density beyond r_max is ~ e^{-2 alpha r_max^2} (n + ...);
    // 2 alpha r_max^2 = 4n + 50 keeps it far below the 1e-10 oracle budget.
    spec.r_max = std::sqrt((2.0 * static_cast<double>(n) + 25.0) / params.alpha);
    return spec;
}

double integrate_polar(const std::function<double(double, double)>& integrand,
                       const QuadratureSpec& spec) {
    spec.validate();
    return integrate_polar_range(integrand, spec, 0.0, 2.0 * std::numbers::pi);
}

OracleReport check_normalization(const StateLabel& label,
                                 const OscillatorParams& params,
                                 const QuadratureSpec& spec) {
    spec.validate();
    auto density = [&](double r, double theta) {
        return std::norm(wavefunction(label, params, r, theta));
    };
    const double numeric = integrate_polar(density, spec);
    return make_report("normalization", 1.0, numeric, "full_plane");
}

OracleReport check_angular_momentum(const StateLabel& label,
                                    const OscillatorParams& params,
                                    const QuadratureSpec& spec,
                                    const PhysicalConstants& pc) {
    spec.validate();
    // psi = (radial) e^{+-i n theta}: the theta derivative acts only on the
    // phase, so conj(psi) (-i hbar d/dtheta) psi = +-n hbar |psi|^2 exactly.
    const double sign = (label.branch == Branch::Psi2) ? 1.0 : -1.0;
    auto integrand = [&](double r, double theta) {
        return sign * static_cast<double>(label.n) * pc.hbar
               * std::norm(wavefunction(label, params, r, theta));
    };
    const double numeric = integrate_polar(integrand, spec);
    const double closed = sign * static_cast<double>(label.n) * pc.hbar;
    return make_report("angular_momentum", closed, numeric, "full_plane");
}

OracleReport check_radial_peak(const StateLabel& label,
                               const OscillatorParams& params,
                               const PhysicalConstants& pc) {
    if (label.n < 1) throw InvalidParameter("check_radial_peak: needs n >= 1");
    auto density = [&](double r) {
        return std::norm(wavefunction(label, params, r, 0.0));
    };
    const double r_max = std::sqrt((static_cast<double>(label.n) + 10.0) / params.alpha);
    // Golden-section search; |psi(r,0)|^2 is unimodal on (0, inf).
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0, b = r_max;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = density(c), fd = density(d);
    for (int i = 0; i < 300 && (b - a) > 1e-13 * r_max; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = density(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = density(d);
        }
    }
    const double numeric = 0.5 * (a + b);
    const double closed = radial_peak(label.n, params, pc);
    return make_report("radial_peak", closed, numeric, "argmax_theta0");
}

std::vector<OracleReport> probe_current_moment_conventions(
    const StateLabel& label, const OscillatorParams& params,
    const QuadratureSpec& spec, const PhysicalConstants& pc) {
    if (label.n < 1)
        throw InvalidParameter("probe_current_moment_conventions: needs n >= 1");
    spec.validate();

    auto jx = [&](double r, double theta) {
        return current_density(label, params, r, theta, pc).first;
    };
    auto jy = [&](double r, double theta) {
        return current_density(label, params, r, theta, pc).second;
    };
    const std::complex<double> closed = current_moment(label, params, pc);

    std::vector<OracleReport> reports;
    const double two_pi = 2.0 * std::numbers::pi;
    reports.push_back(make_report(
        "current_moment_Ix", closed.real(),
        integrate_polar_range(jx, spec, 0.0, two_pi), "full_plane"));
    reports.push_back(make_report(
        "current_moment_Iy", closed.imag(),
        integrate_polar_range(jy, spec, 0.0, two_pi), "full_plane"));
    reports.push_back(make_report(
        "current_moment_Ix", closed.real(),
        integrate_polar_range(jx, spec, 0.0, std::numbers::pi),
        "half_plane_theta_0_pi"));
    reports.push_back(make_report(
        "current_moment_Iy", closed.imag(),
        integrate_polar_range(jy, spec, 0.0, std::numbers::pi),
        "half_plane_theta_0_pi"));

    // Line integral of J_x along the y-axis: r = |y|, theta = +-pi/2.
    auto jx_line = [&](double y) {
        const double theta = (y >= 0.0) ? std::numbers::pi / 2.0
                                        : 3.0 * std::numbers::pi / 2.0;
        return current_density(label, params, std::abs(y), theta, pc).first;
    };
    auto jx_line_abs = [&](double y) { return std::abs(jx_line(y)); };
    reports.push_back(make_report(
        "current_moment_Ix", closed.real(),
        adaptive_1d(jx_line, jx_line_abs, spec, -spec.r_max, spec.r_max),
        "line_x0"));
    return reports;
}

}  // namespace fqhe
