#include "tsecon/distributions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "tsecon/errors.hpp"

namespace tsecon {

double chi_square_sf(double x, int df) {
    if (df < 1) throw ConfigError("chi-square degrees of freedom must be positive");
    if (!(x >= 0.0)) throw ConfigError("chi-square argument must be non-negative, got " + std::to_string(x));
    if (std::isinf(x)) return 0.0;
    if (x == 0.0) return 1.0;
    return boost::math::gamma_q(0.5 * df, 0.5 * x);
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

}  // namespace tsecon
