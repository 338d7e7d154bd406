#pragma once

namespace tsecon {

/// P(X > x) for X ~ chi-square(df), via the regularized upper incomplete gamma.
double chi_square_sf(double x, int df);

/// Standard normal CDF.
double normal_cdf(double x);

}  // namespace tsecon
