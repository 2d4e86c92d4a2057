#include "gmix/weight_family.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gmix/error.hpp"
#include "gmix/sampling.hpp"

namespace gmix {

std::string_view to_string(FamilyKind kind) noexcept {
  return kind == FamilyKind::FWF ? "FWF" : "wFWF";
}

std::string describe_weight_violation(FamilyKind kind, std::span<const double> w,
                                      bool at_unit_corner) {
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double wi = w[i];
    if (!std::isfinite(wi) || wi < -FamilyTolerance::kRange ||
        wi > 1.0 + FamilyTolerance::kRange) {
      std::ostringstream os;
      os.precision(17);
      os << "weight f_" << (i + 1) << " = " << wi << " outside [0,1]";
      return os.str();
    }
    sum += wi;
  }
  std::ostringstream os;
  os.precision(17);
  if (kind == FamilyKind::FWF) {
    if (std::abs(sum - 1.0) > FamilyTolerance::kSum) {
      os << "FWF weights sum to " << sum;
      return os.str();
    }
  } else {
    if (sum > 1.0 + FamilyTolerance::kSum) {
      os << "wFWF weights sum to " << sum << " > 1";
      return os.str();
    }
    if (at_unit_corner && std::abs(sum - 1.0) > FamilyTolerance::kUnitSum) {
      os << "wFWF weights at (1,...,1) sum to " << sum << " != 1";
      return os.str();
    }
  }
  return {};
}

namespace {

std::string format_point(std::span<const double> x) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << ')';
  return os.str();
}

}  // namespace

WeightFamily::WeightFamily(std::string name, std::size_t arity, FamilyKind kind,
                           FamilyEvaluator evaluator, const VerificationPlan& plan)
    : name_(std::move(name)), arity_(arity), kind_(kind), evaluator_(std::move(evaluator)) {
  if (arity_ == 0 || arity_ > kMaxArity) {
    throw Error(ErrorCode::ArityMismatch, "family arity must be in [1, 65536]");
  }
  if (!evaluator_) throw Error(ErrorCode::BadParams, "family evaluator is empty");

  auto check = [&](const std::vector<double>& p, bool unit_corner) {
    const UnitVector x(p);
    const auto w = evaluator_(x);
    if (w.size() != arity_) {
      throw Error(ErrorCode::FamilyViolation,
                  name_ + ": evaluator returned " + std::to_string(w.size()) + " weights");
    }
    if (auto msg = describe_weight_violation(kind_, w, unit_corner); !msg.empty()) {
      throw Error(ErrorCode::FamilyViolation, name_ + " is not a " +
                                                  std::string(to_string(kind_)) + ": " + msg +
                                                  " at " + format_point(p));
    }
    ++verified_points_;
  };

  check(std::vector<double>(arity_, 1.0), true);
  for (auto& corner : cube_corners(arity_, plan.max_corner_arity)) {
    const bool all_ones =
        std::all_of(corner.begin(), corner.end(), [](double v) { return v == 1.0; });
    check(corner, all_ones);
  }
  for (int k = 0; k <= 16; ++k) {
    check(std::vector<double>(arity_, k / 16.0), k == 16);
  }
  const KroneckerSequence seq(arity_, plan.seed);
  for (std::size_t k = 0; k < plan.quasi_random_points; ++k) check(seq.point(k), false);
}

std::vector<double> WeightFamily::weights(const UnitVector& x) const {
  require_same_arity(arity_, x.arity(), name_.c_str());
  auto w = evaluator_(x);
  if (w.size() != arity_) {
    throw Error(ErrorCode::FamilyViolation, name_ + ": evaluator returned wrong weight count");
  }
  return w;
}

namespace {

double weighted_sum(std::span<const double> w, const UnitVector& x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.arity(); ++i) acc += w[i] * x[i];
  return acc;
}

bool is_unit_corner(const UnitVector& x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return v == 1.0; });
}

}  // namespace

double gm_eval(const WeightFamily& family, const UnitVector& x) {
  if (family.kind() != FamilyKind::FWF) {
    throw Error(ErrorCode::FamilyViolation, "gm_eval needs an FWF, got wFWF " + family.name());
  }
  const auto w = family.weights(x);
  if (auto msg = describe_weight_violation(FamilyKind::FWF, w, false); !msg.empty()) {
    throw Error(ErrorCode::FamilyViolation, family.name() + ": " + msg + " at " +
                                                format_point(x.values()));
  }
  return weighted_sum(w, x);
}

double bgm_eval(const WeightFamily& family, const UnitVector& x) {
  const auto w = family.weights(x);
  if (auto msg = describe_weight_violation(FamilyKind::WeakFWF, w, is_unit_corner(x));
      !msg.empty()) {
    throw Error(ErrorCode::FamilyViolation, family.name() + ": " + msg + " at " +
                                                format_point(x.values()));
  }
  return weighted_sum(w, x);
}

WeightFamily owa_as_gm(const WeightVector& w) {
  const std::size_t n = w.arity();
  // Every weight vector is a permutation of w, already validated, so a light
  // sampling pass is enough.
  VerificationPlan owa_plan;
  owa_plan.quasi_random_points = 64;
  return WeightFamily("owa_as_gm", n, FamilyKind::FWF, [w](const UnitVector& x) {
    const auto s = sort_desc(x);
    std::vector<double> f(x.arity());
    // rank i holds source index perm[i]; that source gets weight w_i
    for (std::size_t i = 0; i < s.permutation.size(); ++i) f[s.permutation[i]] = w[i];
    return f;
  }, owa_plan);
}

WeightFamily mixture_as_gm(std::vector<UnaryWeight> weight_fns) {
  const std::size_t n = weight_fns.size();
  return WeightFamily("mixture_as_gm", n, FamilyKind::FWF,
                      [fns = std::move(weight_fns)](const UnitVector& x) {
                        require_same_arity(fns.size(), x.arity(), "mixture_as_gm");
                        std::vector<double> f(x.arity());
                        double den = 0.0;
                        for (std::size_t i = 0; i < x.arity(); ++i) {
                          f[i] = fns[i](x[i]);
                          den += f[i];
                        }
                        if (!(den > 0.0)) {
                          throw Error(ErrorCode::ZeroDenominator,
                                      "mixture weights sum to zero");
                        }
                        for (double& fi : f) fi /= den;
                        return f;
                      });
}

}  // namespace gmix
