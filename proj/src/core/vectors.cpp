#include "gmix/vectors.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "gmix/error.hpp"

namespace gmix {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::FamilyViolation: return "FamilyViolation";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::MalformedPgm: return "MalformedPGM";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
  }
  return "Error";
}

namespace {

void check_arity(std::size_t n, const char* what) {
  if (n == 0 || n > kMaxArity) {
    throw Error(ErrorCode::ArityMismatch,
                std::string(what) + " arity must be in [1, 65536], got " + std::to_string(n));
  }
}

}  // namespace

void require_same_arity(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw Error(ErrorCode::ArityMismatch, std::string(what) + ": expected arity " +
                                              std::to_string(expected) + ", got " +
                                              std::to_string(actual));
  }
}

UnitVector::UnitVector(std::vector<double> values) : values_(std::move(values)) {
  check_arity(values_.size(), "UnitVector");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::RangeError, "UnitVector component " + std::to_string(i) +
                                             " outside [0,1]: " + std::to_string(v));
    }
  }
}

UnitVector::UnitVector(std::initializer_list<double> values)
    : UnitVector(std::vector<double>(values)) {}

UnitVector UnitVector::constant(std::size_t arity, double value) {
  return UnitVector(std::vector<double>(arity, value));
}

UnitVector UnitVector::complement() const {
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = 1.0 - values_[i];
  return UnitVector(std::move(out));
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  check_arity(weights_.size(), "WeightVector");
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw Error(ErrorCode::BadParams, "weight outside [0,1]: " + std::to_string(w));
    }
  }
  const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw Error(ErrorCode::BadParams, "weights must sum to 1, got " + std::to_string(sum));
  }
}

WeightVector::WeightVector(std::initializer_list<double> weights)
    : WeightVector(std::vector<double>(weights)) {}

WeightVector WeightVector::uniform(std::size_t arity) {
  check_arity(arity, "WeightVector");
  return WeightVector(std::vector<double>(arity, 1.0 / static_cast<double>(arity)));
}

Direction::Direction(std::vector<double> components) : components_(std::move(components)) {
  check_arity(components_.size(), "Direction");
  bool any_positive = false;
  for (double r : components_) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw Error(ErrorCode::BadParams, "direction components must be finite and >= 0");
    }
    any_positive = any_positive || r > 0.0;
  }
  if (!any_positive) throw Error(ErrorCode::BadParams, "direction must not be the null vector");
}

Direction::Direction(std::initializer_list<double> components)
    : Direction(std::vector<double>(components)) {}

Direction Direction::diagonal(std::size_t arity) {
  return Direction(std::vector<double>(arity, 1.0));
}

Direction Direction::axis(std::size_t arity, std::size_t index) {
  std::vector<double> r(arity, 0.0);
  if (index >= arity) throw Error(ErrorCode::BadParams, "axis index out of range");
  r[index] = 1.0;
  return Direction(std::move(r));
}

}  // namespace gmix
