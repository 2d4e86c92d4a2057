#pragma once

#include <cstddef>
#include <string>

#include "gmix/aggregator.hpp"

namespace gmix::lab {

enum class PreAggKind { Mode, TruncDiff, Lehmer, StepA, StepB };

struct PreAggParams {
  std::size_t arity = 2;  ///< only Mode takes an arity other than 2
  double lambda = 0.5;    ///< Lehmer weight, in ]0,1[
};

/// Most frequent component; ties go to the smallest value.
double mode_eval(const UnitVector& x);

/// Test functions that are increasing along some direction without being
/// monotone:
///   Mode                 most frequent value, ties to the smallest
///   TruncDiff(x, y)    = x - max(0, x - y)^2
///   Lehmer(x, y)       = (l x^2 + (1-l) y^2) / (l x + (1-l) y), 0/0 = 0
///   StepA(x, y)        = x(1 - x) if y <= 3/4, else 1
///   StepB(x, y)        = y(1 - y) if x <= 3/4, else 1
/// Throws BadParams for lambda outside ]0,1[ or Mode arity 0.
AggregatorSpec gallery_preagg(PreAggKind kind, const PreAggParams& params = {});

}  // namespace gmix::lab
