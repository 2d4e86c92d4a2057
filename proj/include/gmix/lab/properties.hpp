#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gmix/aggregator.hpp"
#include "gmix/vectors.hpp"

namespace gmix::lab {

/// Sampling budget shared by every checker. A fixed budget, seed included,
/// reproduces a report bit for bit.
struct CheckBudget {
  std::size_t random_samples = 10000;
  std::size_t grid_points_per_axis = 21;
  std::uint64_t rng_seed = 42;
  double tolerance = 1e-9;

  /// Throws BadParams unless every field is positive and the grid has at
  /// least two points.
  void validate() const;

  friend bool operator==(const CheckBudget&, const CheckBudget&) = default;
};

/// Sampling never proves anything, so the strongest verdict is HoldsSampled.
enum class Verdict { HoldsSampled, Refuted, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

/// How a witness is replayed. Each kind names the inequality that was
/// violated; see witness_reproduces.
enum class WitnessKind {
  ExpectValue,   ///< |f(inputs[j]) - params[j]| > tol for every j
  PairDecrease,  ///< f(inputs[2j]) - f(inputs[2j+1]) > tol for every j
  Averaging,     ///< f(inputs[0]) outside [min, max] by more than tol
  Homogeneity,   ///< inputs = {x, lambda x}, params = {lambda, k}
  Shift,         ///< inputs = {x, x + r}, params = {r}
  Symmetry,      ///< inputs = {x, permuted x}
  NonZero,       ///< f(inputs[j]) > tol for every j
  NotOne,        ///< |f(inputs[j]) - 1| > tol for every j
};

std::string_view to_string(WitnessKind k) noexcept;

struct Witness {
  WitnessKind kind = WitnessKind::ExpectValue;
  std::vector<std::vector<double>> inputs;
  std::vector<double> observed;  ///< operator values at inputs, same order
  std::vector<double> params;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::Inconclusive;
  std::size_t samples_used = 0;
  std::size_t violations = 0;
  double tolerance = 0.0;
  std::optional<Witness> witness;
  /// What a search found when it holds: the neutral element, the annihilator,
  /// the divisor, or the direction components.
  std::vector<double> found;
  std::string detail;

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

/// Re-evaluates a Refuted report's witness through the operator and returns
/// true when the violation shows up again beyond the report's tolerance.
bool witness_reproduces(const AggregatorSpec& agg, const PropertyReport& report);

PropertyReport check_boundary(const AggregatorSpec& agg, const CheckBudget& budget = {});

using VectorPair = std::pair<UnitVector, UnitVector>;

/// Samples pairs x <= y. Explicit pairs in `seeded` are examined first, so a
/// known counterexample becomes the reported witness.
PropertyReport check_monotone(const AggregatorSpec& agg, const CheckBudget& budget = {},
                              const std::vector<VectorPair>& seeded = {});

PropertyReport check_idempotent(const AggregatorSpec& agg, const CheckBudget& budget = {});
PropertyReport check_averaging(const AggregatorSpec& agg, const CheckBudget& budget = {});
/// f(lambda x) = lambda^k f(x) for lambda in [0,1].
PropertyReport check_homogeneous(const AggregatorSpec& agg, double order,
                                 const CheckBudget& budget = {});
/// f(x + r) = f(x) + r whenever x + r and f(x) + r stay in range.
PropertyReport check_shift_invariant(const AggregatorSpec& agg, const CheckBudget& budget = {});
PropertyReport check_symmetric(const AggregatorSpec& agg, const CheckBudget& budget = {});

// Element searches scan 101 evenly spaced candidates (0 and 1 included). The
// report holds when some candidate survives every sample, and is refuted with
// one counterexample per candidate otherwise.
PropertyReport find_neutral(const AggregatorSpec& agg, const CheckBudget& budget = {});
PropertyReport find_annihilator(const AggregatorSpec& agg, const CheckBudget& budget = {});
/// Candidates in ]0,1[, inputs drawn from ]0,1]^n.
PropertyReport check_zero_divisor(const AggregatorSpec& agg, const CheckBudget& budget = {});
/// Candidates in [0,1[, inputs drawn from ]0,1]^n.
PropertyReport check_one_divisor(const AggregatorSpec& agg, const CheckBudget& budget = {});

/// f(x) <= f(x + t r) for t > 0 with x + t r in the cube; t is drawn
/// log-uniformly from [1e-4, t_max(x, r)].
PropertyReport check_directional(const AggregatorSpec& agg, const Direction& r,
                                 const CheckBudget& budget = {});

/// Boundary conditions plus a search for an increasing direction among the
/// supplied candidates, the coordinate axes and the diagonal, in that order.
PropertyReport is_pre_aggregation(const AggregatorSpec& agg,
                                  const std::vector<Direction>& candidate_directions = {},
                                  const CheckBudget& budget = {});

}  // namespace gmix::lab
