#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gmix {

inline constexpr std::size_t kMaxArity = std::size_t{1} << 16;

/// A point of [0,1]^n. Components are validated on construction and the
/// arity never changes afterwards.
class UnitVector {
 public:
  explicit UnitVector(std::vector<double> values);
  UnitVector(std::initializer_list<double> values);

  static UnitVector constant(std::size_t arity, double value);

  std::size_t arity() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  /// Component-wise 1 - x_i.
  UnitVector complement() const;

  friend bool operator==(const UnitVector&, const UnitVector&) = default;

 private:
  std::vector<double> values_;
};

/// Fixed weights in [0,1] summing to one (within 1e-12).
class WeightVector {
 public:
  static constexpr double kSumTolerance = 1e-12;

  explicit WeightVector(std::vector<double> weights);
  WeightVector(std::initializer_list<double> weights);

  static WeightVector uniform(std::size_t arity);

  std::size_t arity() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> values() const noexcept { return weights_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> weights_;
};

/// Non-negative, non-null direction for directional monotonicity.
class Direction {
 public:
  explicit Direction(std::vector<double> components);
  Direction(std::initializer_list<double> components);

  static Direction diagonal(std::size_t arity);
  static Direction axis(std::size_t arity, std::size_t index);

  std::size_t arity() const noexcept { return components_.size(); }
  double operator[](std::size_t i) const { return components_[i]; }
  std::span<const double> values() const noexcept { return components_; }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  std::vector<double> components_;
};

void require_same_arity(std::size_t expected, std::size_t actual, const char* what);

}  // namespace gmix
