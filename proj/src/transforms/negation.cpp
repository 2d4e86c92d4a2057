#include <cmath>
#include <sstream>

#include "gmix/error.hpp"
#include "gmix/transforms.hpp"

namespace gmix::transforms {

namespace {

constexpr int kGrid = 1024;
constexpr double kEndpointTolerance = 1e-12;

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double grid_point(int k) { return static_cast<double>(k) / (kGrid - 1); }

}  // namespace

FuzzyNegation::FuzzyNegation(std::string name, std::function<double(double)> fn)
    : name_(std::move(name)), fn_(std::move(fn)) {
  if (!fn_) throw Error(ErrorCode::BadParams, "negation function is empty");
  if (std::abs(fn_(0.0) - 1.0) > kEndpointTolerance || std::abs(fn_(1.0)) > kEndpointTolerance) {
    throw Error(ErrorCode::BadParams, name_ + ": a negation needs N(0) = 1 and N(1) = 0");
  }
  double prev = fn_(0.0);
  for (int k = 0; k < kGrid; ++k) {
    const double v = fn_(grid_point(k));
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::BadParams, name_ + ": value outside [0,1] at " + num(grid_point(k)));
    }
    if (v > prev) {
      throw Error(ErrorCode::BadParams, name_ + ": not decreasing at " + num(grid_point(k)));
    }
    prev = v;
  }
}

FuzzyNegation FuzzyNegation::standard() {
  FuzzyNegation n("standard", [](double x) { return 1.0 - x; });
  n.standard_ = true;
  n.alpha_ = 1.0;
  return n;
}

FuzzyNegation FuzzyNegation::power(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::BadParams, "power negation needs alpha > 0");
  }
  if (alpha == 1.0) return standard();
  FuzzyNegation n("1-x^" + num(alpha), [alpha](double x) { return 1.0 - std::pow(x, alpha); });
  n.alpha_ = alpha;
  return n;
}

UnitVector FuzzyNegation::apply(const UnitVector& x) const {
  std::vector<double> out(x.arity());
  for (std::size_t i = 0; i < x.arity(); ++i) out[i] = fn_(x[i]);
  return UnitVector(std::move(out));
}

UnaryMap::UnaryMap(std::string name, std::function<double(double)> fn)
    : name_(std::move(name)), fn_(std::move(fn)) {
  if (!fn_) throw Error(ErrorCode::BadParams, "map function is empty");
  bool increasing = true;
  double prev = -1.0;
  for (int k = 0; k < kGrid; ++k) {
    const double v = fn_(grid_point(k));
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::BadParams, name_ + ": value outside [0,1] at " + num(grid_point(k)));
    }
    increasing = increasing && v > prev;
    prev = v;
  }
  automorphism_ = increasing && std::abs(fn_(0.0)) <= kEndpointTolerance &&
                  std::abs(fn_(1.0) - 1.0) <= kEndpointTolerance;
}

UnaryMap UnaryMap::identity() {
  return UnaryMap("id", [](double x) { return x; });
}

UnaryMap UnaryMap::power(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw Error(ErrorCode::BadParams, "power map needs p > 0");
  return UnaryMap("x^" + num(p), [p](double x) { return std::pow(x, p); });
}

}  // namespace gmix::transforms
