#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "gmix/vectors.hpp"

namespace gmix {

struct SortedView {
  UnitVector sorted;                     ///< x_(1) >= x_(2) >= ... >= x_(n)
  std::vector<std::size_t> permutation;  ///< sorted[i] == x[permutation[i]], zero-based
};

/// Descending sort with stable tie-breaking: equal values keep input order.
SortedView sort_desc(const UnitVector& x);

enum class Classic { Min, Max, Arith, Prod, Median };

std::string_view to_string(Classic kind) noexcept;

double classic_eval(Classic kind, const UnitVector& x);

/// Median over the descending order: x_(k+1) for n = 2k+1 and the mean of
/// x_(k), x_(k+1) for n = 2k.
double median(std::span<const double> x);

double wavg_eval(const WeightVector& w, const UnitVector& x);

/// sum_i w_i * x_(i) with x_(i) taken from sort_desc.
double owa_eval(const WeightVector& w, const UnitVector& x);

/// Binomial centered-OWA weights C(n-1, i-1) / 2^(n-1).
WeightVector centered_owa_weights(std::size_t n);

/// Weights of the median when written as an OWA.
WeightVector median_owa_weights(std::size_t n);

using UnaryWeight = std::function<double(double)>;

/// Mixture mean sum w_i(x_i) x_i / sum w_i(x_i). A zero denominator is
/// reported as ZeroDenominator rather than resolved by convention.
double mixture_eval(std::span<const UnaryWeight> weight_fns, const UnitVector& x);

}  // namespace gmix
