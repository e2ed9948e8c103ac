#include "netgof/normal.hpp"

#include "netgof/error.hpp"

#include <cmath>
#include <numbers>

namespace netgof {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_sf(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double two_sided_p_value(double t) { return std::erfc(std::abs(t) / std::numbers::sqrt2); }

double normal_quantile(double q) {
    if (!(q > 0.0 && q < 1.0)) throw InvalidArgument("normal_quantile: q must lie in (0, 1)");
    // The upper half is solved through the tail function to keep precision
    // for q close to one.
    const bool upper = q > 0.5;
    const double target = upper ? 1.0 - q : q;  // in (0, 0.5]
    auto lower_tail = [](double x) { return normal_cdf(x); };

    double lo = -40.0, hi = 0.0;
    for (int it = 0; it < 60 && hi - lo > 1e-3; ++it) {
        const double mid = 0.5 * (lo + hi);
        (lower_tail(mid) < target ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    for (int it = 0; it < 50; ++it) {
        const double density = inv_sqrt_2pi * std::exp(-0.5 * x * x);
        if (density <= 0.0) break;
        const double step = (lower_tail(x) - target) / density;
        x -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    return upper ? -x : x;
}

}  // namespace netgof
