#include "gmix/h_operator.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gmix/error.hpp"
#include "gmix/operators.hpp"

namespace gmix {

double h_eval(const UnitVector& x) {
  const std::size_t n = x.arity();
  if (n < 2) throw Error(ErrorCode::ArityMismatch, "H needs arity >= 2");

  if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; })) return x[0];

  const double med = median(x.values());
  double total = 0.0;
  bool near_constant = true;
  for (double v : x) {
    const double d = std::abs(v - med);
    total += d;
    near_constant = near_constant && d < 1e-15;
  }
  if (near_constant) return classic_eval(Classic::Arith, x);

  // total >= each deviation in floating point too, so no weight goes negative.
  double acc = 0.0;
  for (double v : x) acc += v * ((total - std::abs(v - med)) / total);
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return std::clamp(acc / static_cast<double>(n - 1), *lo, *hi);
}

}  // namespace gmix
