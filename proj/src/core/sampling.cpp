#include "gmix/sampling.hpp"

#include <cmath>

namespace gmix {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_id(std::uint64_t seed, std::string_view name) noexcept {
  // FNV-1a over the name, then mixed with the seed
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(seed ^ mix64(h));
}

namespace {

// Unique positive root of x^(d+1) = x + 1.
double generalized_golden_ratio(std::size_t d) {
  double x = 2.0;
  const double p = static_cast<double>(d + 1);
  for (int it = 0; it < 64; ++it) x = std::pow(1.0 + x, 1.0 / p);
  return x;
}

}  // namespace

KroneckerSequence::KroneckerSequence(std::size_t dimension, std::uint64_t seed)
    : alpha_(dimension), shift_(dimension) {
  const double g = generalized_golden_ratio(dimension);
  double inv = 1.0;
  Rng rng(mix64(seed));
  for (std::size_t j = 0; j < dimension; ++j) {
    inv /= g;
    alpha_[j] = inv - std::floor(inv);
    shift_[j] = rng.uniform();
  }
}

std::vector<double> KroneckerSequence::point(std::size_t index) const {
  std::vector<double> p(alpha_.size());
  const double k = static_cast<double>(index + 1);
  for (std::size_t j = 0; j < alpha_.size(); ++j) {
    const double v = shift_[j] + k * alpha_[j];
    p[j] = v - std::floor(v);
  }
  return p;
}

std::vector<std::vector<double>> cube_corners(std::size_t n, std::size_t max_arity) {
  std::vector<std::vector<double>> out;
  if (n > max_arity || n >= 63) return out;
  const std::uint64_t count = std::uint64_t{1} << n;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<double> c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = (mask >> (n - 1 - j)) & 1U ? 1.0 : 0.0;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace gmix
