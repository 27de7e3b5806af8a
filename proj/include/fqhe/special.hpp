#pragma once

#include "fqhe/constants.hpp"

namespace fqhe {

/// Gamma(a)/Gamma(b) evaluated as exp(lgamma(a) - lgamma(b)) so large
/// arguments stay finite. Arguments must be positive (poles excluded).
double gamma_ratio(double a, double b);

/// Ratio Gamma(n + 1/2) / Gamma(n + 1), the factor common to the momentum,
/// current and mobility closed forms.
double half_integer_gamma_ratio(long long n);

}  // namespace fqhe
