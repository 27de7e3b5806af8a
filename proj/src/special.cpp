#include "fqhe/special.hpp"

#include <cmath>

namespace fqhe {

double gamma_ratio(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw InvalidParameter("gamma_ratio: arguments must be positive");
    return std::exp(std::lgamma(a) - std::lgamma(b));
}

double half_integer_gamma_ratio(long long n) {
    if (n < 0) throw InvalidParameter("half_integer_gamma_ratio: n must be >= 0");
    return gamma_ratio(static_cast<double>(n) + 0.5, static_cast<double>(n) + 1.0);
}

}  // namespace fqhe
