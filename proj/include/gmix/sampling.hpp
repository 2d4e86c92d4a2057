#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace gmix {

/// splitmix64 finalizer, used to derive independent streams from one seed.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Stream id for a named consumer; stable across runs and platforms.
std::uint64_t stream_id(std::uint64_t seed, std::string_view name) noexcept;

/// Deterministic uniform source. mt19937_64 output is fully specified by the
/// standard; the double conversion below is too, unlike the distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, bound).
  std::size_t below(std::size_t bound) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(bound)) % bound;
  }

 private:
  std::mt19937_64 engine_;
};

/// Additive-recurrence (Kronecker) low-discrepancy sequence in [0,1)^d using
/// the generalized golden ratio, with a Cranley-Patterson shift.
class KroneckerSequence {
 public:
  KroneckerSequence(std::size_t dimension, std::uint64_t seed);

  std::vector<double> point(std::size_t index) const;
  std::size_t dimension() const noexcept { return alpha_.size(); }

 private:
  std::vector<double> alpha_;
  std::vector<double> shift_;
};

/// All 2^n vertices of the unit cube in lexicographic order; empty when
/// n exceeds max_arity.
std::vector<std::vector<double>> cube_corners(std::size_t n, std::size_t max_arity = 12);

}  // namespace gmix
