#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmix/aggregator.hpp"
#include "gmix/lab/properties.hpp"
#include "gmix/sampling.hpp"

namespace gmix::lab::detail {

struct Sample {
  std::vector<double> x;
  bool on_grid = false;
};

/// Corners (n <= 12) followed by budget.random_samples points cycling through
/// Kronecker, Kronecker, grid-snapped and near-diagonal variants.
std::vector<Sample> sample_points(std::size_t n, const CheckBudget& budget, std::string_view stream);

double snap(double v, std::size_t grid);
double snap_up(double v, std::size_t grid);
double grid_value(std::size_t index, std::size_t grid);
double clamp01(double v);

std::string format_number(double v);
std::string format_vector(const std::vector<double>& v);

/// Accumulates samples, violations and evaluation failures for one check.
class Tally {
 public:
  Tally(std::string property, const CheckBudget& budget);

  /// Evaluates agg at x. Library errors are recorded and yield nullopt.
  std::optional<double> eval(const AggregatorSpec& agg, const std::vector<double>& x);
  void count() { ++samples_; }
  void violation(Witness w);
  std::size_t violations() const noexcept { return violations_; }
  double tol() const noexcept { return tolerance_; }

  PropertyReport finish(std::string holds_detail = {});

 private:
  std::string property_;
  double tolerance_;
  std::size_t samples_ = 0;
  std::size_t violations_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
  std::optional<Witness> witness_;
};

}  // namespace gmix::lab::detail
