#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gmix/aggregator.hpp"
#include "gmix/weight_family.hpp"

namespace gmix::transforms {

/// Decreasing N : [0,1] -> [0,1] with N(0) = 1 and N(1) = 0, checked on a
/// 1024-point grid at construction.
class FuzzyNegation {
 public:
  FuzzyNegation(std::string name, std::function<double(double)> fn);

  static FuzzyNegation standard();
  /// N(x) = 1 - x^alpha, alpha > 0.
  static FuzzyNegation power(double alpha);

  double operator()(double x) const { return fn_(x); }
  UnitVector apply(const UnitVector& x) const;

  const std::string& name() const noexcept { return name_; }
  bool is_standard() const noexcept { return standard_; }
  std::optional<double> alpha() const noexcept { return alpha_; }

 private:
  std::string name_;
  std::function<double(double)> fn_;
  bool standard_ = false;
  std::optional<double> alpha_;
};

/// gamma : [0,1] -> [0,1]. is_automorphism() is a sampled verdict: strictly
/// increasing on a 1024-point grid with gamma(0) = 0 and gamma(1) = 1.
class UnaryMap {
 public:
  UnaryMap(std::string name, std::function<double(double)> fn);

  static UnaryMap identity();
  /// gamma(x) = x^p, p > 0.
  static UnaryMap power(double p);

  double operator()(double x) const { return fn_(x); }
  const std::string& name() const noexcept { return name_; }
  bool is_automorphism() const noexcept { return automorphism_; }

 private:
  std::string name_;
  std::function<double(double)> fn_;
  bool automorphism_ = false;
};

/// Pointwise N(F(N(x_1), ..., N(x_n))). For a GM under the standard negation
/// the result is again a GM, carried over the family from n_dual_family.
AggregatorSpec n_dual(const AggregatorSpec& agg, const FuzzyNegation& neg);

/// g_i(x) = f_i(1 - x_1, ..., 1 - x_n) for an FWF.
WeightFamily n_dual_family(const WeightFamily& family);

/// g_i(x) = f_i(N(x_1), ..., N(x_n)); the kind tag is carried over and
/// re-verified.
WeightFamily weak_dual(const WeightFamily& family, const FuzzyNegation& neg);

/// g_i(x) = f_i(gamma_1(x_1), ..., gamma_n(x_n)). The name is prefixed
/// "weak_conjugate" when every map is the same automorphism and
/// "weak_transform" otherwise.
WeightFamily weak_conjugate(const WeightFamily& family, const std::vector<UnaryMap>& maps);
WeightFamily weak_conjugate(const WeightFamily& family, const UnaryMap& gamma);

/// g_i = f_{n-i+1}.
WeightFamily reverse_family(const WeightFamily& family);

/// Splits the standard dual of a BGM as
///   1 - BGM(1 - x) = sum_i f_i(1 - x) x_i + (1 - sum_i f_i(1 - x)).
struct DualDecomposition {
  double dual = 0.0;       ///< 1 - bgm_eval(family, 1 - x)
  double bgm_part = 0.0;   ///< sum_i f_i(1 - x) x_i
  double remainder = 0.0;  ///< 1 - sum_i f_i(1 - x)
};

DualDecomposition decompose_standard_dual(const WeightFamily& family, const UnitVector& x);

/// g_i(x) = f_i(1 - x_1^a, ..., 1 - x_n^a) * x_i^(a-1), the weights induced by
/// the power negation 1 - x^a. Declared as a weak family.
WeightFamily power_negation_induced_family(const WeightFamily& family, double alpha);

}  // namespace gmix::transforms
