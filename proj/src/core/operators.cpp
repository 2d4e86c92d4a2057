#include "gmix/operators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "gmix/error.hpp"

namespace gmix {

SortedView sort_desc(const UnitVector& x) {
  std::vector<std::size_t> perm(x.arity());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  std::vector<double> sorted(x.arity());
  for (std::size_t i = 0; i < perm.size(); ++i) sorted[i] = x[perm[i]];
  return {UnitVector(std::move(sorted)), std::move(perm)};
}

std::string_view to_string(Classic kind) noexcept {
  switch (kind) {
    case Classic::Min: return "min";
    case Classic::Max: return "max";
    case Classic::Arith: return "arith";
    case Classic::Prod: return "prod";
    case Classic::Median: return "median";
  }
  return "?";
}

double median(std::span<const double> x) {
  std::vector<double> v(x.begin(), x.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  const std::size_t n = v.size();
  const std::size_t k = n / 2;
  if (n % 2 == 1) return v[k];
  // n = 2k: (x_(k) + x_(k+1)) / 2 with one-based ranks
  return 0.5 * (v[k - 1] + v[k]);
}

double classic_eval(Classic kind, const UnitVector& x) {
  const auto v = x.values();
  switch (kind) {
    case Classic::Min: return *std::min_element(v.begin(), v.end());
    case Classic::Max: return *std::max_element(v.begin(), v.end());
    case Classic::Arith:
      return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    case Classic::Prod:
      return std::accumulate(v.begin(), v.end(), 1.0, std::multiplies<>());
    case Classic::Median: return median(v);
  }
  return 0.0;
}

double wavg_eval(const WeightVector& w, const UnitVector& x) {
  require_same_arity(w.arity(), x.arity(), "wavg");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.arity(); ++i) acc += w[i] * x[i];
  return acc;
}

double owa_eval(const WeightVector& w, const UnitVector& x) {
  require_same_arity(w.arity(), x.arity(), "owa");
  const auto s = sort_desc(x);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.arity(); ++i) acc += w[i] * s.sorted[i];
  return acc;
}

WeightVector centered_owa_weights(std::size_t n) {
  if (n == 0 || n > kMaxArity) throw Error(ErrorCode::BadParams, "cOWA arity out of range");
  // Row n-1 of Pascal's triangle scaled by 2^-(n-1). Integer coefficients up
  // to n = 61; beyond that they overflow 64 bits and log space is used.
  std::vector<double> w(n);
  if (n <= 61) {
    std::uint64_t c = 1;
    const double scale = std::ldexp(1.0, -static_cast<int>(n - 1));
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = static_cast<double>(c) * scale;
      c = c / (i + 1) * (n - 1 - i) + c % (i + 1) * (n - 1 - i) / (i + 1);
    }
  } else {
    const double m = static_cast<double>(n - 1);
    // Mirrored so the weights stay exactly symmetric.
    for (std::size_t i = 0; i <= (n - 1) / 2; ++i) {
      const double k = static_cast<double>(i);
      w[i] = w[n - 1 - i] = std::exp(std::lgamma(m + 1) - std::lgamma(k + 1) -
                                     std::lgamma(m - k + 1) - m * std::log(2.0));
    }
  }
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& wi : w) wi /= sum;
  return WeightVector(std::move(w));
}

WeightVector median_owa_weights(std::size_t n) {
  if (n == 0 || n > kMaxArity) throw Error(ErrorCode::BadParams, "median arity out of range");
  std::vector<double> w(n, 0.0);
  if (n % 2 == 1) {
    w[n / 2] = 1.0;
  } else {
    w[n / 2 - 1] = 0.5;
    w[n / 2] = 0.5;
  }
  return WeightVector(std::move(w));
}

double mixture_eval(std::span<const UnaryWeight> weight_fns, const UnitVector& x) {
  require_same_arity(weight_fns.size(), x.arity(), "mixture");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < x.arity(); ++i) {
    const double w = weight_fns[i](x[i]);
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::RangeError, "mixture weight must be finite and >= 0");
    }
    num += w * x[i];
    den += w;
  }
  if (den == 0.0) throw Error(ErrorCode::ZeroDenominator, "mixture weights sum to zero");
  return num / den;
}

}  // namespace gmix
