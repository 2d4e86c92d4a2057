#pragma once

#include "gmix/vectors.hpp"

namespace gmix {

/// Closed form of the median-deviation mixture H:
///
///   H(x) = 1/(n-1) * sum_i (x_i - x_i |x_i - Med(x)| / sum_j |x_j - Med(x)|)
///
/// and H(x) = x on the diagonal. Vectors whose deviations from the median are
/// all below 1e-15 are treated as diagonal and yield their arithmetic mean.
/// Agrees with gm_eval over median_deviation_family. Requires n >= 2.
double h_eval(const UnitVector& x);

}  // namespace gmix
