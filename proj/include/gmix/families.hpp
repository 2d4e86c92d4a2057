#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmix/weight_family.hpp"

namespace gmix {

// Constructive weight families. Each factory verifies its kind on build.

/// f_i = 1/n. GM is the arithmetic mean.
WeightFamily equal_family(std::size_t n);

/// All weight on the last position of the stable descending order (a minimum).
WeightFamily min_selector_family(std::size_t n);

/// All weight on the first position of the stable descending order (a maximum).
WeightFamily max_selector_family(std::size_t n);

/// f_i = x_i / sum_j x_j, and 1/n at the origin. GM is sum x_i^2 / sum x_i,
/// which is averaging but not monotone.
WeightFamily proportional_family(std::size_t n);

/// The H weights: 1/(n-1) * (1 - |x_i - Med| / sum_j |x_j - Med|), and 1/n on
/// the diagonal. Requires n >= 2.
WeightFamily median_deviation_family(std::size_t n);

/// Translation-invariant weights driven by the gap to the maximum:
///   f_i = (x_(1) - x_i)^alpha / sum_j (x_(1) - x_j)   off the diagonal,
///   f_i = 1/n                                          on it.
/// alpha = 1 is an FWF; alpha > 1 a weak family whose sum drops below one.
WeightFamily max_deviation_family(std::size_t n, double alpha);

/// f_i = min(x_i / r_i, 1) / n, and 0 when min(x) = 0. A weak family whose BGM
/// is r-increasing. Requires 0 < r_i <= 1.
WeightFamily direction_bounded_family(const Direction& r);

/// f_i = w_i for a fixed weight vector.
WeightFamily constant_family(const WeightVector& w);

/// f_i = x_i / n. A weak family: its BGM is sum x_i^2 / n, homogeneous of
/// order two and not idempotent.
WeightFamily coordinate_scaled_family(std::size_t n);

struct FamilyParams {
  std::size_t arity = 0;
  double alpha = 1.0;
  std::vector<double> direction;  ///< direction_bounded
  std::vector<double> weights;    ///< constant
};

/// Names accepted by family_gallery, in a stable order.
const std::vector<std::string>& gallery_family_names();

/// Looks a family up by name: equal, min_selector, max_selector, proportional,
/// median_deviation, max_deviation, direction_bounded, constant,
/// coordinate_scaled. Unknown names and invalid parameters throw BadParams.
WeightFamily family_gallery(std::string_view name, const FamilyParams& params);

}  // namespace gmix
