#pragma once

namespace netgof {

/// Standard normal CDF, 0.5 * erfc(-x / sqrt 2).
double normal_cdf(double x);

/// Upper tail 1 - normal_cdf(x), without cancellation for large x.
double normal_sf(double x);

/// Inverse CDF on (0, 1): bracketing bisection followed by Newton steps.
double normal_quantile(double q);

/// Two-sided p-value 2 * P(Z > |t|).
double two_sided_p_value(double t);

}  // namespace netgof
