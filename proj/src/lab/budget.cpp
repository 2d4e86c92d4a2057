#include <algorithm>
#include <cmath>
#include <charconv>

#include "detail.hpp"
#include "gmix/error.hpp"
#include "gmix/lab/properties.hpp"

namespace gmix::lab {

void CheckBudget::validate() const {
  if (random_samples == 0) throw Error(ErrorCode::BadParams, "random_samples must be positive");
  if (grid_points_per_axis < 2) {
    throw Error(ErrorCode::BadParams, "grid_points_per_axis must be at least 2");
  }
  if (rng_seed == 0) throw Error(ErrorCode::BadParams, "rng_seed must be positive");
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw Error(ErrorCode::BadParams, "tolerance must be positive and finite");
  }
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::HoldsSampled: return "Holds(sampled)";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string_view to_string(WitnessKind k) noexcept {
  switch (k) {
    case WitnessKind::ExpectValue: return "expect_value";
    case WitnessKind::PairDecrease: return "pair_decrease";
    case WitnessKind::Averaging: return "averaging";
    case WitnessKind::Homogeneity: return "homogeneity";
    case WitnessKind::Shift: return "shift";
    case WitnessKind::Symmetry: return "symmetry";
    case WitnessKind::NonZero: return "nonzero";
    case WitnessKind::NotOne: return "not_one";
  }
  return "?";
}

bool witness_reproduces(const AggregatorSpec& agg, const PropertyReport& report) {
  if (report.verdict != Verdict::Refuted || !report.witness) return false;
  const Witness& w = *report.witness;
  const double tol = report.tolerance;
  const auto& in = w.inputs;
  if (in.empty()) return false;
  auto f = [&](std::size_t j) { return agg(in[j]); };

  switch (w.kind) {
    case WitnessKind::ExpectValue:
      if (w.params.size() != in.size()) return false;
      for (std::size_t j = 0; j < in.size(); ++j) {
        if (!(std::abs(f(j) - w.params[j]) > tol)) return false;
      }
      return true;
    case WitnessKind::PairDecrease:
      if (in.size() % 2 != 0) return false;
      for (std::size_t j = 0; j < in.size(); j += 2) {
        if (!(f(j) - f(j + 1) > tol)) return false;
      }
      return true;
    case WitnessKind::Averaging: {
      const auto [lo, hi] = std::minmax_element(in[0].begin(), in[0].end());
      const double v = f(0);
      return v < *lo - tol || v > *hi + tol;
    }
    case WitnessKind::Homogeneity:
      if (in.size() != 2 || w.params.size() != 2) return false;
      return std::abs(f(1) - std::pow(w.params[0], w.params[1]) * f(0)) > tol;
    case WitnessKind::Shift:
      if (in.size() != 2 || w.params.size() != 1) return false;
      return std::abs(f(1) - f(0) - w.params[0]) > tol;
    case WitnessKind::Symmetry:
      if (in.size() != 2) return false;
      return std::abs(f(0) - f(1)) > tol;
    case WitnessKind::NonZero:
      for (std::size_t j = 0; j < in.size(); ++j) {
        if (!(f(j) > tol)) return false;
      }
      return true;
    case WitnessKind::NotOne:
      for (std::size_t j = 0; j < in.size(); ++j) {
        if (!(std::abs(f(j) - 1.0) > tol)) return false;
      }
      return true;
  }
  return false;
}

namespace detail {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double grid_value(std::size_t index, std::size_t grid) {
  return static_cast<double>(index) / static_cast<double>(grid - 1);
}

double snap(double v, std::size_t grid) {
  const double steps = static_cast<double>(grid - 1);
  return clamp01(std::round(v * steps) / steps);
}

double snap_up(double v, std::size_t grid) {
  const double steps = static_cast<double>(grid - 1);
  return clamp01(std::ceil(v * steps - 1e-9) / steps);
}

std::string format_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_vector(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_number(v[i]);
  }
  return s + ")";
}

std::vector<Sample> sample_points(std::size_t n, const CheckBudget& budget,
                                  std::string_view stream) {
  budget.validate();
  const std::uint64_t id = stream_id(budget.rng_seed, stream);
  const std::size_t g = budget.grid_points_per_axis;
  std::vector<Sample> out;
  for (auto& c : cube_corners(n)) out.push_back({std::move(c), true});

  KroneckerSequence seq(n, id);
  Rng rng(mix64(id ^ 0x9e3779b97f4a7c15ULL));
  std::size_t next_qmc = 0;
  for (std::size_t k = 0; k < budget.random_samples; ++k) {
    Sample s;
    switch (k % 4) {
      case 0:
      case 1:
        s.x = seq.point(next_qmc++);
        break;
      case 2:
        s.x.resize(n);
        for (auto& v : s.x) v = grid_value(rng.below(g), g);
        s.on_grid = true;
        break;
      default: {
        const double c = rng.uniform();
        const double spread = std::pow(10.0, -rng.uniform(1.0, 6.0));
        s.x.resize(n);
        for (auto& v : s.x) v = clamp01(c + spread * (2.0 * rng.uniform() - 1.0));
        break;
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

Tally::Tally(std::string property, const CheckBudget& budget)
    : property_(std::move(property)), tolerance_(budget.tolerance) {
  budget.validate();
}

std::optional<double> Tally::eval(const AggregatorSpec& agg, const std::vector<double>& x) {
  try {
    return agg(x);
  } catch (const Error& e) {
    if (failures_++ == 0) first_failure_ = e.what();
    return std::nullopt;
  }
}

void Tally::violation(Witness w) {
  if (violations_++ == 0) witness_ = std::move(w);
}

PropertyReport Tally::finish(std::string holds_detail) {
  PropertyReport r;
  r.property = property_;
  r.samples_used = samples_;
  r.violations = violations_;
  r.tolerance = tolerance_;
  if (violations_ > 0) {
    r.verdict = Verdict::Refuted;
    r.witness = std::move(witness_);
    r.detail = std::to_string(violations_) + " of " + std::to_string(samples_) +
               " samples violate the property";
  } else if (failures_ > 0) {
    r.verdict = Verdict::Inconclusive;
    r.detail = std::to_string(failures_) + " evaluations failed; first: " + first_failure_;
  } else if (samples_ == 0) {
    r.verdict = Verdict::Inconclusive;
    r.detail = "no admissible samples";
  } else {
    r.verdict = Verdict::HoldsSampled;
    r.detail = holds_detail.empty()
                   ? "no violation in " + std::to_string(samples_) + " samples"
                   : std::move(holds_detail);
  }
  return r;
}

}  // namespace detail
}  // namespace gmix::lab
