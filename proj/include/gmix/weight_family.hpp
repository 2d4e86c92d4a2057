#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gmix/operators.hpp"
#include "gmix/vectors.hpp"

namespace gmix {

/// FWF: weights sum to one everywhere. WeakFWF: weights sum to at most one,
/// and exactly one at (1, ..., 1).
enum class FamilyKind { FWF, WeakFWF };

std::string_view to_string(FamilyKind kind) noexcept;

using FamilyEvaluator = std::function<std::vector<double>(const UnitVector&)>;

struct FamilyTolerance {
  static constexpr double kSum = 1e-9;       ///< sum constraint on sampled points
  static constexpr double kUnitSum = 1e-12;  ///< weak families at (1, ..., 1)
  static constexpr double kRange = 1e-12;    ///< slack on each weight in [0,1]
};

struct VerificationPlan {
  std::size_t quasi_random_points = 4096;
  std::uint64_t seed = 0x5eed;
  std::size_t max_corner_arity = 12;
};

/// A family of n weight functions f_i : [0,1]^n -> [0,1].
///
/// The kind tag is checked by sampling when the family is built: corners of
/// the cube (small n), a stretch of the diagonal and a low-discrepancy cloud.
/// A failed check throws FamilyViolation. Evaluators must be pure.
class WeightFamily {
 public:
  WeightFamily(std::string name, std::size_t arity, FamilyKind kind, FamilyEvaluator evaluator,
               const VerificationPlan& plan = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t arity() const noexcept { return arity_; }
  FamilyKind kind() const noexcept { return kind_; }

  /// Raw weights at x; arity-checked, not re-verified.
  std::vector<double> weights(const UnitVector& x) const;

  /// Number of points examined when the kind tag was verified.
  std::size_t verified_points() const noexcept { return verified_points_; }

 private:
  std::string name_;
  std::size_t arity_;
  FamilyKind kind_;
  FamilyEvaluator evaluator_;
  std::size_t verified_points_ = 0;
};

/// Checks one weight vector against the family constraints; returns an empty
/// string when it passes, otherwise a description of the violation.
std::string describe_weight_violation(FamilyKind kind, std::span<const double> w,
                                      bool at_unit_corner);

/// sum_i f_i(x) x_i over an FWF. The weights are re-checked at x.
double gm_eval(const WeightFamily& family, const UnitVector& x);

/// sum_i f_i(x) x_i over an FWF or weak FWF.
double bgm_eval(const WeightFamily& family, const UnitVector& x);

/// An OWA written as a GM: f_i(x) is the weight of the rank that
/// x_i occupies in the stable descending order.
WeightFamily owa_as_gm(const WeightVector& w);

/// The normalized family w_i(x_i) / sum_j w_j(x_j) of a mixture. Requires
/// strictly positive denominators; a zero one surfaces as ZeroDenominator.
WeightFamily mixture_as_gm(std::vector<UnaryWeight> weight_fns);

}  // namespace gmix
