#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmix/operators.hpp"
#include "gmix/vectors.hpp"
#include "gmix/weight_family.hpp"

namespace gmix {

enum class Provenance { Classic, OWA, Mixture, GM, BGM, H, Gallery, UserExpression };

std::string_view to_string(Provenance p) noexcept;

using Evaluator = std::function<double(const UnitVector&)>;

/// A named n-ary function [0,1]^n -> [0,1].
///
/// Calls are arity-checked and the result must land in [0,1]; anything further
/// out than kOutputSlack is a RangeError, and results are never clamped.
/// Operators built from a weight family keep it so transforms can work at the
/// family level.
class AggregatorSpec {
 public:
  static constexpr double kOutputSlack = 1e-12;

  AggregatorSpec(std::string name, std::size_t arity, Provenance provenance, Evaluator evaluator,
                 std::optional<WeightFamily> family = std::nullopt);

  double operator()(const UnitVector& x) const;
  double operator()(std::vector<double> x) const { return (*this)(UnitVector(std::move(x))); }

  const std::string& name() const noexcept { return name_; }
  std::size_t arity() const noexcept { return arity_; }
  Provenance provenance() const noexcept { return provenance_; }
  const std::optional<WeightFamily>& family() const noexcept { return family_; }

 private:
  std::string name_;
  std::size_t arity_;
  Provenance provenance_;
  Evaluator evaluator_;
  std::optional<WeightFamily> family_;
};

AggregatorSpec make_classic(Classic kind, std::size_t arity);
AggregatorSpec make_wavg(const WeightVector& w);
AggregatorSpec make_owa(const WeightVector& w, std::string name = "owa");
AggregatorSpec make_cowa(std::size_t arity);
AggregatorSpec make_mixture(std::vector<UnaryWeight> weight_fns, std::string name = "mixture");
AggregatorSpec make_gm(const WeightFamily& family);
AggregatorSpec make_bgm(const WeightFamily& family);
AggregatorSpec make_h(std::size_t arity);

/// Wraps an arbitrary callable, e.g. an expression supplied by a caller.
AggregatorSpec make_user(std::string name, std::size_t arity, Evaluator evaluator);

}  // namespace gmix
