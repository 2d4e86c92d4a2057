#include <cmath>

#include "gmix/error.hpp"
#include "gmix/transforms.hpp"

namespace gmix::transforms {

namespace {

UnitVector map_components(const UnitVector& x, const std::vector<UnaryMap>& maps) {
  std::vector<double> out(x.arity());
  for (std::size_t i = 0; i < x.arity(); ++i) out[i] = maps[i](x[i]);
  return UnitVector(std::move(out));
}

}  // namespace

WeightFamily n_dual_family(const WeightFamily& family) {
  if (family.kind() != FamilyKind::FWF) {
    throw Error(ErrorCode::FamilyViolation,
                "n_dual_family is defined for FWF families, got wFWF " + family.name());
  }
  return WeightFamily("n_dual(" + family.name() + ")", family.arity(), FamilyKind::FWF,
                      [family](const UnitVector& x) { return family.weights(x.complement()); });
}

AggregatorSpec n_dual(const AggregatorSpec& agg, const FuzzyNegation& neg) {
  const auto& fam = agg.family();
  if (neg.is_standard() && fam && fam->kind() == FamilyKind::FWF) {
    auto dual = make_gm(n_dual_family(*fam));
    return AggregatorSpec("n_dual(" + agg.name() + ")", agg.arity(), Provenance::GM,
                          [dual](const UnitVector& x) { return dual(x); }, dual.family());
  }
  return AggregatorSpec("n_dual[" + neg.name() + "](" + agg.name() + ")", agg.arity(),
                        agg.provenance(),
                        [agg, neg](const UnitVector& x) { return neg(agg(neg.apply(x))); });
}

WeightFamily weak_dual(const WeightFamily& family, const FuzzyNegation& neg) {
  return WeightFamily("weak_dual[" + neg.name() + "](" + family.name() + ")", family.arity(),
                      family.kind(),
                      [family, neg](const UnitVector& x) { return family.weights(neg.apply(x)); });
}

WeightFamily weak_conjugate(const WeightFamily& family, const std::vector<UnaryMap>& maps) {
  require_same_arity(family.arity(), maps.size(), "weak_conjugate maps");
  bool conjugate = maps.front().is_automorphism();
  for (const auto& m : maps) conjugate = conjugate && m.name() == maps.front().name();
  const std::string label = conjugate ? "weak_conjugate[" + maps.front().name() + "]"
                                      : std::string("weak_transform");
  return WeightFamily(label + "(" + family.name() + ")", family.arity(), family.kind(),
                      [family, maps](const UnitVector& x) {
                        return family.weights(map_components(x, maps));
                      });
}

WeightFamily weak_conjugate(const WeightFamily& family, const UnaryMap& gamma) {
  return weak_conjugate(family, std::vector<UnaryMap>(family.arity(), gamma));
}

WeightFamily reverse_family(const WeightFamily& family) {
  return WeightFamily("reverse(" + family.name() + ")", family.arity(), family.kind(),
                      [family](const UnitVector& x) {
                        auto w = family.weights(x);
                        return std::vector<double>(w.rbegin(), w.rend());
                      });
}

DualDecomposition decompose_standard_dual(const WeightFamily& family, const UnitVector& x) {
  const UnitVector y = x.complement();
  const auto w = family.weights(y);
  DualDecomposition d;
  double sum = 0.0;
  for (std::size_t i = 0; i < x.arity(); ++i) {
    d.bgm_part += w[i] * x[i];
    sum += w[i];
  }
  d.remainder = 1.0 - sum;
  d.dual = 1.0 - bgm_eval(family, y);
  return d;
}

WeightFamily power_negation_induced_family(const WeightFamily& family, double alpha) {
  const auto neg = FuzzyNegation::power(alpha);
  return WeightFamily("induced[" + neg.name() + "](" + family.name() + ")", family.arity(),
                      FamilyKind::WeakFWF, [family, neg, alpha](const UnitVector& x) {
                        auto w = family.weights(neg.apply(x));
                        for (std::size_t i = 0; i < w.size(); ++i) {
                          w[i] *= std::pow(x[i], alpha - 1.0);
                        }
                        return w;
                      });
}

}  // namespace gmix::transforms
