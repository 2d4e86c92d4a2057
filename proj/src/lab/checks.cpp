#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "detail.hpp"
#include "gmix/error.hpp"
#include "gmix/lab/properties.hpp"

namespace gmix::lab {

using detail::clamp01;
using detail::Sample;
using detail::Tally;

namespace {

std::vector<double> to_vector(const UnitVector& x) { return {x.begin(), x.end()}; }

void check_pair(const AggregatorSpec& agg, Tally& tally, const std::vector<double>& x,
                const std::vector<double>& y, std::vector<double> params = {}) {
  const auto fx = tally.eval(agg, x);
  const auto fy = tally.eval(agg, y);
  if (!fx || !fy) return;
  tally.count();
  if (*fx - *fy > tally.tol()) {
    tally.violation({WitnessKind::PairDecrease, {x, y}, {*fx, *fy}, std::move(params)});
  }
}

PropertyReport directional_impl(const AggregatorSpec& agg, const Direction& r,
                                const CheckBudget& budget, bool stop_early) {
  require_same_arity(agg.arity(), r.arity(), "direction");
  const std::vector<double> rv(r.values().begin(), r.values().end());
  Tally tally("directional" + detail::format_vector(rv), budget);
  const std::size_t n = agg.arity();
  Rng rng(mix64(stream_id(budget.rng_seed, "directional:steps")));
  const double t_min = 1e-4;

  auto room = [&](const std::vector<double>& x) {
    double t_max = INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
      if (rv[i] > 0.0) t_max = std::min(t_max, (1.0 - x[i]) / rv[i]);
    }
    return t_max;
  };
  for (Sample s : detail::sample_points(n, budget, "directional")) {
    // A point with no room along r is swapped for a uniform one so the
    // budget counts usable samples.
    double t_max = room(s.x);
    for (int tries = 0; !(t_max > 0.0) && tries < 16; ++tries) {
      for (auto& v : s.x) v = rng.uniform();
      t_max = room(s.x);
    }
    const double u = rng.uniform();
    if (!(t_max > 0.0)) continue;
    const double t = t_max > t_min
                         ? std::exp(std::log(t_min) + u * (std::log(t_max) - std::log(t_min)))
                         : t_max * (1.0 - u);
    if (!(t > 0.0)) continue;
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = clamp01(s.x[i] + t * rv[i]);
    std::vector<double> params{t};
    params.insert(params.end(), rv.begin(), rv.end());
    check_pair(agg, tally, s.x, y, std::move(params));
    if (stop_early && tally.violations() > 0) break;
  }
  return tally.finish();
}

}  // namespace

PropertyReport check_boundary(const AggregatorSpec& agg, const CheckBudget& budget) {
  Tally tally("boundary", budget);
  Witness w{WitnessKind::ExpectValue, {}, {}, {}};
  for (double corner : {0.0, 1.0}) {
    const std::vector<double> x(agg.arity(), corner);
    const auto v = tally.eval(agg, x);
    if (!v) continue;
    tally.count();
    if (std::abs(*v - corner) > tally.tol()) {
      w.inputs.push_back(x);
      w.observed.push_back(*v);
      w.params.push_back(corner);
    }
  }
  if (!w.inputs.empty()) tally.violation(std::move(w));
  return tally.finish("f(0,...,0) = 0 and f(1,...,1) = 1");
}

PropertyReport check_monotone(const AggregatorSpec& agg, const CheckBudget& budget,
                              const std::vector<VectorPair>& seeded) {
  Tally tally("monotone", budget);
  const std::size_t n = agg.arity();
  for (const auto& [x, y] : seeded) {
    require_same_arity(n, x.arity(), "seeded pair");
    require_same_arity(n, y.arity(), "seeded pair");
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] > y[i]) throw Error(ErrorCode::BadParams, "seeded pair must satisfy x <= y");
    }
    check_pair(agg, tally, to_vector(x), to_vector(y));
  }

  const std::size_t g = budget.grid_points_per_axis;
  Rng rng(mix64(stream_id(budget.rng_seed, "monotone:increments")));
  for (const Sample& s : detail::sample_points(n, budget, "monotone")) {
    std::vector<bool> mask(n);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) any |= (mask[i] = rng.uniform() < 0.5);
    if (!any) mask[rng.below(n)] = true;
    const double scale = std::pow(10.0, -3.0 * rng.uniform());
    std::vector<double> y = s.x;
    for (std::size_t i = 0; i < n; ++i) {
      if (!mask[i]) continue;
      y[i] = clamp01(s.x[i] + (1.0 - s.x[i]) * rng.uniform() * scale);
      if (s.on_grid) y[i] = std::max(s.x[i], detail::snap_up(y[i], g));
    }
    check_pair(agg, tally, s.x, y);
  }
  return tally.finish();
}

PropertyReport check_idempotent(const AggregatorSpec& agg, const CheckBudget& budget) {
  Tally tally("idempotent", budget);
  const std::size_t g = budget.grid_points_per_axis;
  Rng rng(mix64(stream_id(budget.rng_seed, "idempotent")));
  // Grid constants are visited from the centre outwards.
  const std::size_t mid = (g - 1) / 2;
  for (std::size_t k = 0; k < g + budget.random_samples; ++k) {
    const std::size_t j = k % 2 == 0 ? mid + k / 2 : mid - (k + 1) / 2;
    const double c = k < g ? detail::grid_value(j, g) : rng.uniform();
    const std::vector<double> x(agg.arity(), c);
    const auto v = tally.eval(agg, x);
    if (!v) continue;
    tally.count();
    if (std::abs(*v - c) > tally.tol()) {
      tally.violation({WitnessKind::ExpectValue, {x}, {*v}, {c}});
    }
  }
  return tally.finish();
}

PropertyReport check_averaging(const AggregatorSpec& agg, const CheckBudget& budget) {
  Tally tally("averaging", budget);
  for (const Sample& s : detail::sample_points(agg.arity(), budget, "averaging")) {
    const auto v = tally.eval(agg, s.x);
    if (!v) continue;
    tally.count();
    const auto [lo, hi] = std::minmax_element(s.x.begin(), s.x.end());
    if (*v < *lo - tally.tol() || *v > *hi + tally.tol()) {
      tally.violation({WitnessKind::Averaging, {s.x}, {*v}, {}});
    }
  }
  return tally.finish();
}

PropertyReport check_homogeneous(const AggregatorSpec& agg, double order,
                                 const CheckBudget& budget) {
  if (!(order >= 0.0) || !std::isfinite(order)) {
    throw Error(ErrorCode::BadParams, "homogeneity order must be >= 0");
  }
  Tally tally("homogeneous:" + detail::format_number(order), budget);
  const std::size_t g = budget.grid_points_per_axis;
  Rng rng(mix64(stream_id(budget.rng_seed, "homogeneous:lambda")));
  std::size_t k = 0;
  for (const Sample& s : detail::sample_points(agg.arity(), budget, "homogeneous")) {
    const double u = rng.uniform();
    const double lambda = (k++ % 10 == 0) ? detail::snap(u, g) : u;
    std::vector<double> y(s.x.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = lambda * s.x[i];
    const auto fx = tally.eval(agg, s.x);
    const auto fy = tally.eval(agg, y);
    if (!fx || !fy) continue;
    tally.count();
    if (std::abs(*fy - std::pow(lambda, order) * *fx) > tally.tol()) {
      tally.violation({WitnessKind::Homogeneity, {s.x, y}, {*fx, *fy}, {lambda, order}});
    }
  }
  return tally.finish();
}

PropertyReport check_shift_invariant(const AggregatorSpec& agg, const CheckBudget& budget) {
  Tally tally("shift-invariant", budget);
  Rng rng(mix64(stream_id(budget.rng_seed, "shift-invariant:r")));
  for (Sample s : detail::sample_points(agg.arity(), budget, "shift-invariant")) {
    auto range = [&] {
      const auto [lo_it, hi_it] = std::minmax_element(s.x.begin(), s.x.end());
      return std::pair{-*lo_it, 1.0 - *hi_it};
    };
    auto [lo, hi] = range();
    // Vectors spanning [0,1] cannot move; use a uniform point instead.
    for (int tries = 0; !(hi > lo) && tries < 16; ++tries) {
      for (auto& v : s.x) v = rng.uniform();
      std::tie(lo, hi) = range();
    }
    const double r = rng.uniform(lo, hi);
    if (!(hi > lo) || r == 0.0) continue;
    const auto fx = tally.eval(agg, s.x);
    if (!fx || *fx + r < 0.0 || *fx + r > 1.0) continue;
    std::vector<double> y(s.x.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = clamp01(s.x[i] + r);
    const auto fy = tally.eval(agg, y);
    if (!fy) continue;
    tally.count();
    if (std::abs(*fy - *fx - r) > tally.tol()) {
      tally.violation({WitnessKind::Shift, {s.x, y}, {*fx, *fy}, {r}});
    }
  }
  return tally.finish();
}

PropertyReport check_symmetric(const AggregatorSpec& agg, const CheckBudget& budget) {
  Tally tally("symmetric", budget);
  const std::size_t n = agg.arity();
  Rng rng(mix64(stream_id(budget.rng_seed, "symmetric:perm")));
  std::size_t k = 0;
  for (const Sample& s : detail::sample_points(n, budget, "symmetric")) {
    std::vector<double> p = s.x;
    if (k++ % 3 == 0) {
      std::reverse(p.begin(), p.end());
    } else {
      for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
    }
    const auto fx = tally.eval(agg, s.x);
    const auto fp = tally.eval(agg, p);
    if (!fx || !fp) continue;
    tally.count();
    if (std::abs(*fx - *fp) > tally.tol()) {
      tally.violation({WitnessKind::Symmetry, {s.x, p}, {*fx, *fp}, {}});
    }
  }
  return tally.finish();
}

PropertyReport check_directional(const AggregatorSpec& agg, const Direction& r,
                                 const CheckBudget& budget) {
  return directional_impl(agg, r, budget, false);
}

PropertyReport is_pre_aggregation(const AggregatorSpec& agg,
                                  const std::vector<Direction>& candidate_directions,
                                  const CheckBudget& budget) {
  const std::size_t n = agg.arity();
  PropertyReport boundary = check_boundary(agg, budget);
  if (boundary.verdict != Verdict::HoldsSampled) {
    boundary.property = "pre-aggregation";
    boundary.detail = "boundary conditions: " + boundary.detail;
    return boundary;
  }

  std::vector<Direction> dirs;
  auto add = [&](const Direction& d) {
    require_same_arity(n, d.arity(), "candidate direction");
    if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(d);
  };
  for (const auto& d : candidate_directions) add(d);
  for (std::size_t i = 0; i < n; ++i) add(Direction::axis(n, i));
  add(Direction::diagonal(n));

  PropertyReport out;
  out.property = "pre-aggregation";
  out.tolerance = budget.tolerance;
  out.samples_used = boundary.samples_used;
  Witness combined{WitnessKind::PairDecrease, {}, {}, {}};
  bool inconclusive = false;
  for (const auto& d : dirs) {
    const PropertyReport rep = directional_impl(agg, d, budget, true);
    out.samples_used += rep.samples_used;
    if (rep.verdict == Verdict::HoldsSampled) {
      out.verdict = Verdict::HoldsSampled;
      out.found.assign(d.values().begin(), d.values().end());
      out.detail = "boundary holds and f is increasing along " + detail::format_vector(out.found);
      return out;
    }
    if (rep.verdict == Verdict::Inconclusive) {
      inconclusive = true;
      continue;
    }
    ++out.violations;
    const Witness& w = *rep.witness;
    combined.inputs.insert(combined.inputs.end(), w.inputs.begin(), w.inputs.end());
    combined.observed.insert(combined.observed.end(), w.observed.begin(), w.observed.end());
  }
  if (inconclusive) {
    out.verdict = Verdict::Inconclusive;
    out.detail = "no direction held and some checks were inconclusive";
    return out;
  }
  out.verdict = Verdict::Refuted;
  out.witness = std::move(combined);
  out.detail = "each of " + std::to_string(dirs.size()) + " candidate directions was refuted";
  return out;
}

}  // namespace gmix::lab
