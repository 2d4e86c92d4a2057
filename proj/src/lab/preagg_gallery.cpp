#include "gmix/lab/preagg_gallery.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gmix/error.hpp"

namespace gmix::lab {

double mode_eval(const UnitVector& x) {
  std::vector<double> v(x.begin(), x.end());
  std::sort(v.begin(), v.end());
  double best = v.front();
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (j - i > best_count) {
      best_count = j - i;
      best = v[i];
    }
    i = j;
  }
  return best;
}

AggregatorSpec gallery_preagg(PreAggKind kind, const PreAggParams& params) {
  switch (kind) {
    case PreAggKind::Mode:
      if (params.arity == 0) throw Error(ErrorCode::BadParams, "Mode needs arity >= 1");
      return AggregatorSpec("mode", params.arity, Provenance::Gallery, mode_eval);
    case PreAggKind::TruncDiff:
      return AggregatorSpec("truncdiff", 2, Provenance::Gallery, [](const UnitVector& x) {
        const double d = std::max(0.0, x[0] - x[1]);
        return x[0] - d * d;
      });
    case PreAggKind::Lehmer: {
      const double l = params.lambda;
      if (!(l > 0.0 && l < 1.0)) throw Error(ErrorCode::BadParams, "Lehmer needs 0 < lambda < 1");
      std::ostringstream name;
      name << "lehmer(lambda=" << l << ")";
      return AggregatorSpec(name.str(), 2, Provenance::Gallery, [l](const UnitVector& x) {
        const double den = l * x[0] + (1.0 - l) * x[1];
        if (den == 0.0) return 0.0;
        return (l * x[0] * x[0] + (1.0 - l) * x[1] * x[1]) / den;
      });
    }
    case PreAggKind::StepA:
      return AggregatorSpec("stepa", 2, Provenance::Gallery, [](const UnitVector& x) {
        return x[1] <= 0.75 ? x[0] * (1.0 - x[0]) : 1.0;
      });
    case PreAggKind::StepB:
      return AggregatorSpec("stepb", 2, Provenance::Gallery, [](const UnitVector& x) {
        return x[0] <= 0.75 ? x[1] * (1.0 - x[1]) : 1.0;
      });
  }
  throw Error(ErrorCode::BadParams, "unknown gallery function");
}

}  // namespace gmix::lab
