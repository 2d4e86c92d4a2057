#include "gmix/families.hpp"

#include <algorithm>
#include <cmath>

#include "gmix/error.hpp"

namespace gmix {

namespace {

void require_arity(std::size_t n, std::size_t min_arity, const char* family) {
  if (n < min_arity || n > kMaxArity) {
    throw Error(ErrorCode::BadParams, std::string(family) + " needs arity in [" +
                                          std::to_string(min_arity) + ", 65536], got " +
                                          std::to_string(n));
  }
}

bool all_equal(const UnitVector& x) {
  return std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; });
}

}  // namespace

WeightFamily equal_family(std::size_t n) {
  require_arity(n, 1, "equal");
  return WeightFamily("equal", n, FamilyKind::FWF, [n](const UnitVector&) {
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
  });
}

WeightFamily min_selector_family(std::size_t n) {
  require_arity(n, 1, "min_selector");
  return WeightFamily("min_selector", n, FamilyKind::FWF, [](const UnitVector& x) {
    std::vector<double> f(x.arity(), 0.0);
    f[sort_desc(x).permutation.back()] = 1.0;
    return f;
  });
}

WeightFamily max_selector_family(std::size_t n) {
  require_arity(n, 1, "max_selector");
  return WeightFamily("max_selector", n, FamilyKind::FWF, [](const UnitVector& x) {
    std::vector<double> f(x.arity(), 0.0);
    f[sort_desc(x).permutation.front()] = 1.0;
    return f;
  });
}

WeightFamily proportional_family(std::size_t n) {
  require_arity(n, 1, "proportional");
  return WeightFamily("proportional", n, FamilyKind::FWF, [](const UnitVector& x) {
    const std::size_t m = x.arity();
    double sum = 0.0;
    for (double v : x) sum += v;
    if (sum == 0.0) return std::vector<double>(m, 1.0 / static_cast<double>(m));
    std::vector<double> f(m);
    for (std::size_t i = 0; i < m; ++i) f[i] = x[i] / sum;
    return f;
  });
}

WeightFamily median_deviation_family(std::size_t n) {
  require_arity(n, 2, "median_deviation");
  return WeightFamily("median_deviation", n, FamilyKind::FWF, [](const UnitVector& x) {
    const std::size_t m = x.arity();
    const double med = median(x.values());
    std::vector<double> dev(m);
    double total = 0.0;
    bool near_constant = true;
    for (std::size_t i = 0; i < m; ++i) {
      dev[i] = std::abs(x[i] - med);
      total += dev[i];
      near_constant = near_constant && dev[i] < 1e-15;
    }
    if (all_equal(x) || near_constant) {
      return std::vector<double>(m, 1.0 / static_cast<double>(m));
    }
    const double scale = 1.0 / static_cast<double>(m - 1);
    std::vector<double> f(m);
    for (std::size_t i = 0; i < m; ++i) f[i] = scale * (1.0 - dev[i] / total);
    return f;
  });
}

WeightFamily max_deviation_family(std::size_t n, double alpha) {
  require_arity(n, 1, "max_deviation");
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::BadParams, "max_deviation needs a finite alpha >= 1");
  }
  const FamilyKind kind = alpha == 1.0 ? FamilyKind::FWF : FamilyKind::WeakFWF;
  return WeightFamily(
      "max_deviation(alpha=" + std::to_string(alpha) + ")", n, kind,
      [alpha](const UnitVector& x) {
        const std::size_t m = x.arity();
        if (all_equal(x)) return std::vector<double>(m, 1.0 / static_cast<double>(m));
        const double top = *std::max_element(x.begin(), x.end());
        double total = 0.0;
        for (double v : x) total += top - v;
        std::vector<double> f(m);
        for (std::size_t i = 0; i < m; ++i) {
          const double gap = top - x[i];
          f[i] = (alpha == 1.0 ? gap : std::pow(gap, alpha)) / total;
        }
        return f;
      });
}

WeightFamily direction_bounded_family(const Direction& r) {
  for (double ri : r.values()) {
    if (!(ri > 0.0 && ri <= 1.0)) {
      throw Error(ErrorCode::BadParams, "direction_bounded needs every r_i in (0, 1]");
    }
  }
  const std::size_t n = r.arity();
  return WeightFamily("direction_bounded", n, FamilyKind::WeakFWF, [r](const UnitVector& x) {
    const std::size_t m = x.arity();
    std::vector<double> f(m, 0.0);
    if (*std::min_element(x.begin(), x.end()) == 0.0) return f;
    for (std::size_t i = 0; i < m; ++i) {
      f[i] = std::min(x[i] / r[i], 1.0) / static_cast<double>(m);
    }
    return f;
  });
}

WeightFamily constant_family(const WeightVector& w) {
  return WeightFamily("constant", w.arity(), FamilyKind::FWF, [w](const UnitVector&) {
    return std::vector<double>(w.values().begin(), w.values().end());
  });
}

WeightFamily coordinate_scaled_family(std::size_t n) {
  require_arity(n, 1, "coordinate_scaled");
  return WeightFamily("coordinate_scaled", n, FamilyKind::WeakFWF, [](const UnitVector& x) {
    std::vector<double> f(x.arity());
    const double m = static_cast<double>(x.arity());
    for (std::size_t i = 0; i < x.arity(); ++i) f[i] = x[i] / m;
    return f;
  });
}

const std::vector<std::string>& gallery_family_names() {
  static const std::vector<std::string> names = {
      "equal",         "min_selector",      "max_selector", "proportional",
      "median_deviation", "max_deviation",  "direction_bounded", "constant",
      "coordinate_scaled"};
  return names;
}

WeightFamily family_gallery(std::string_view name, const FamilyParams& p) {
  if (name == "equal") return equal_family(p.arity);
  if (name == "min_selector") return min_selector_family(p.arity);
  if (name == "max_selector") return max_selector_family(p.arity);
  if (name == "proportional") return proportional_family(p.arity);
  if (name == "median_deviation") return median_deviation_family(p.arity);
  if (name == "max_deviation") return max_deviation_family(p.arity, p.alpha);
  if (name == "direction_bounded") {
    if (p.direction.empty()) return direction_bounded_family(Direction::diagonal(p.arity));
    if (p.direction.size() != p.arity && p.arity != 0) {
      throw Error(ErrorCode::BadParams, "direction length does not match arity");
    }
    return direction_bounded_family(Direction(p.direction));
  }
  if (name == "constant") {
    if (p.weights.empty()) return constant_family(WeightVector::uniform(p.arity));
    if (p.weights.size() != p.arity && p.arity != 0) {
      throw Error(ErrorCode::BadParams, "weight count does not match arity");
    }
    return constant_family(WeightVector(p.weights));
  }
  if (name == "coordinate_scaled") return coordinate_scaled_family(p.arity);
  throw Error(ErrorCode::BadParams, "unknown weight family '" + std::string(name) + "'");
}

}  // namespace gmix
