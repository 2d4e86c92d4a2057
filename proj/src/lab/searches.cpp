#include <algorithm>
#include <cmath>
#include <functional>

#include "detail.hpp"
#include "gmix/error.hpp"
#include "gmix/lab/properties.hpp"

namespace gmix::lab {

namespace {

constexpr std::size_t kCandidates = 101;

double candidate(std::size_t j) { return static_cast<double>(j) / (kCandidates - 1); }

// Result of probing one candidate: the first counterexample, if any.
struct Probe {
  std::vector<double> input;
  double observed = 0.0;
  double expected = 0.0;
};

using ProbeFn = std::function<std::optional<Probe>(double, std::size_t&)>;

// Runs `probe` over candidates [first, last] and assembles the report. A
// candidate survives when its probe finds no counterexample.
PropertyReport search(std::string property, const CheckBudget& budget, std::size_t first,
                      std::size_t last, WitnessKind kind, const ProbeFn& probe) {
  budget.validate();
  PropertyReport out;
  out.property = std::move(property);
  out.tolerance = budget.tolerance;
  Witness w{kind, {}, {}, {}};
  for (std::size_t j = first; j <= last; ++j) {
    const double c = candidate(j);
    auto cex = probe(c, out.samples_used);
    if (!cex) {
      out.found.push_back(c);
      continue;
    }
    ++out.violations;
    w.inputs.push_back(std::move(cex->input));
    w.observed.push_back(cex->observed);
    if (kind == WitnessKind::ExpectValue) w.params.push_back(cex->expected);
  }
  if (!out.found.empty()) {
    out.verdict = Verdict::HoldsSampled;
    out.detail = "surviving candidates: " + detail::format_vector(out.found);
  } else {
    out.verdict = Verdict::Refuted;
    out.witness = std::move(w);
    out.detail = "every candidate has a counterexample";
  }
  return out;
}

// Failed evaluations are skipped rather than counted.
std::optional<double> try_eval(const AggregatorSpec& agg, const std::vector<double>& x) {
  try {
    return agg(x);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Values for the free coordinate: the grid, then random draws.
std::vector<double> probe_values(const CheckBudget& b, Rng& rng, bool open_at_zero) {
  std::vector<double> t;
  const std::size_t g = b.grid_points_per_axis;
  for (std::size_t k = open_at_zero ? 1 : 0; k < g; ++k) t.push_back(detail::grid_value(k, g));
  const std::size_t extra = std::max<std::size_t>(1, b.random_samples / 100);
  for (std::size_t k = 0; k < extra; ++k) {
    t.push_back(open_at_zero ? 1.0 - rng.uniform() : rng.uniform());
  }
  return t;
}

// Fills every coordinate except `skip` from a grid-or-random draw.
void fill_others(std::vector<double>& x, std::size_t skip, const CheckBudget& b, Rng& rng,
                 std::size_t k, bool open_at_zero) {
  const std::size_t g = b.grid_points_per_axis;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == skip) continue;
    if (k % 2 == 0) {
      const std::size_t lo = open_at_zero ? 1 : 0;
      x[i] = detail::grid_value(lo + rng.below(g - lo), g);
    } else {
      x[i] = open_at_zero ? 1.0 - rng.uniform() : rng.uniform();
    }
  }
}

// Planted-element search shared by the annihilator and divisor checks.
std::optional<Probe> planted_probe(const AggregatorSpec& agg, const CheckBudget& b, double a,
                                   std::size_t& samples, bool open_at_zero,
                                   const std::function<bool(double)>& violates, double expected) {
  const std::size_t n = agg.arity();
  Rng rng(mix64(stream_id(b.rng_seed, "planted:" + detail::format_number(a))));
  const std::size_t per_position = std::max<std::size_t>(2, b.random_samples / 100);
  std::vector<double> x(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t k = 0; k < per_position + 2; ++k) {
      if (k < 2 && !open_at_zero) {
        std::fill(x.begin(), x.end(), k == 0 ? 0.0 : 1.0);
      } else if (k < 2) {
        std::fill(x.begin(), x.end(), k == 0 ? detail::grid_value(1, b.grid_points_per_axis) : 1.0);
      } else {
        fill_others(x, p, b, rng, k, open_at_zero);
      }
      x[p] = a;
      const auto v = try_eval(agg, x);
      if (!v) continue;
      ++samples;
      if (violates(*v)) return Probe{x, *v, expected};
    }
  }
  return std::nullopt;
}

}  // namespace

PropertyReport find_neutral(const AggregatorSpec& agg, const CheckBudget& budget) {
  const std::size_t n = agg.arity();
  return search("neutral", budget, 0, kCandidates - 1, WitnessKind::ExpectValue,
                [&](double e, std::size_t& samples) -> std::optional<Probe> {
                  Rng rng(mix64(stream_id(budget.rng_seed, "neutral:" + detail::format_number(e))));
                  const auto ts = probe_values(budget, rng, false);
                  std::vector<double> x(n, e);
                  for (std::size_t p = 0; p < n; ++p) {
                    for (double t : ts) {
                      x[p] = t;
                      const auto v = try_eval(agg, x);
                      x[p] = e;
                      if (!v) continue;
                      ++samples;
                      if (std::abs(*v - t) > budget.tolerance) {
                        std::vector<double> in(n, e);
                        in[p] = t;
                        return Probe{std::move(in), *v, t};
                      }
                    }
                  }
                  return std::nullopt;
                });
}

PropertyReport find_annihilator(const AggregatorSpec& agg, const CheckBudget& budget) {
  return search("annihilator", budget, 0, kCandidates - 1, WitnessKind::ExpectValue,
                [&](double a, std::size_t& samples) {
                  return planted_probe(
                      agg, budget, a, samples, false,
                      [&](double v) { return std::abs(v - a) > budget.tolerance; }, a);
                });
}

PropertyReport check_zero_divisor(const AggregatorSpec& agg, const CheckBudget& budget) {
  return search("zero-divisor", budget, 1, kCandidates - 2, WitnessKind::NonZero,
                [&](double a, std::size_t& samples) {
                  return planted_probe(
                      agg, budget, a, samples, true,
                      [&](double v) { return v > budget.tolerance; }, 0.0);
                });
}

PropertyReport check_one_divisor(const AggregatorSpec& agg, const CheckBudget& budget) {
  return search("one-divisor", budget, 0, kCandidates - 2, WitnessKind::NotOne,
                [&](double a, std::size_t& samples) {
                  return planted_probe(
                      agg, budget, a, samples, true,
                      [&](double v) { return std::abs(v - 1.0) > budget.tolerance; }, 1.0);
                });
}

}  // namespace gmix::lab
