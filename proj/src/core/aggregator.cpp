#include "gmix/aggregator.hpp"

#include <cmath>
#include <sstream>

#include "gmix/error.hpp"
#include "gmix/families.hpp"
#include "gmix/h_operator.hpp"

namespace gmix {

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::Classic: return "Classic";
    case Provenance::OWA: return "OWA";
    case Provenance::Mixture: return "Mixture";
    case Provenance::GM: return "GM";
    case Provenance::BGM: return "BGM";
    case Provenance::H: return "H";
    case Provenance::Gallery: return "Gallery";
    case Provenance::UserExpression: return "UserExpression";
  }
  return "?";
}

AggregatorSpec::AggregatorSpec(std::string name, std::size_t arity, Provenance provenance,
                               Evaluator evaluator, std::optional<WeightFamily> family)
    : name_(std::move(name)),
      arity_(arity),
      provenance_(provenance),
      evaluator_(std::move(evaluator)),
      family_(std::move(family)) {
  if (arity_ == 0 || arity_ > kMaxArity) {
    throw Error(ErrorCode::ArityMismatch, "operator arity must be in [1, 65536]");
  }
  if (!evaluator_) throw Error(ErrorCode::BadParams, "operator evaluator is empty");
  if (family_ && family_->arity() != arity_) {
    throw Error(ErrorCode::ArityMismatch, "operator and family arity differ");
  }
}

double AggregatorSpec::operator()(const UnitVector& x) const {
  require_same_arity(arity_, x.arity(), name_.c_str());
  const double v = evaluator_(x);
  if (!(v >= -kOutputSlack && v <= 1.0 + kOutputSlack)) {
    std::ostringstream os;
    os.precision(17);
    os << name_ << " produced " << v << " outside [0,1]";
    throw Error(ErrorCode::RangeError, os.str());
  }
  return v;
}

AggregatorSpec make_classic(Classic kind, std::size_t arity) {
  return AggregatorSpec(std::string(to_string(kind)), arity, Provenance::Classic,
                        [kind](const UnitVector& x) { return classic_eval(kind, x); });
}

AggregatorSpec make_wavg(const WeightVector& w) {
  return AggregatorSpec("wavg", w.arity(), Provenance::Classic,
                        [w](const UnitVector& x) { return wavg_eval(w, x); });
}

AggregatorSpec make_owa(const WeightVector& w, std::string name) {
  return AggregatorSpec(std::move(name), w.arity(), Provenance::OWA,
                        [w](const UnitVector& x) { return owa_eval(w, x); });
}

AggregatorSpec make_cowa(std::size_t arity) {
  return make_owa(centered_owa_weights(arity), "cowa");
}

AggregatorSpec make_mixture(std::vector<UnaryWeight> weight_fns, std::string name) {
  const std::size_t n = weight_fns.size();
  return AggregatorSpec(std::move(name), n, Provenance::Mixture,
                        [fns = std::move(weight_fns)](const UnitVector& x) {
                          return mixture_eval(fns, x);
                        });
}

AggregatorSpec make_gm(const WeightFamily& family) {
  if (family.kind() != FamilyKind::FWF) {
    throw Error(ErrorCode::FamilyViolation, "GM needs an FWF; use make_bgm for " + family.name());
  }
  return AggregatorSpec("gm:" + family.name(), family.arity(), Provenance::GM,
                        [family](const UnitVector& x) { return gm_eval(family, x); }, family);
}

AggregatorSpec make_bgm(const WeightFamily& family) {
  return AggregatorSpec("bgm:" + family.name(), family.arity(), Provenance::BGM,
                        [family](const UnitVector& x) { return bgm_eval(family, x); }, family);
}

AggregatorSpec make_h(std::size_t arity) {
  if (arity < 2) throw Error(ErrorCode::ArityMismatch, "H needs arity >= 2");
  return AggregatorSpec("h", arity, Provenance::H, [](const UnitVector& x) { return h_eval(x); },
                        median_deviation_family(arity));
}

AggregatorSpec make_user(std::string name, std::size_t arity, Evaluator evaluator) {
  return AggregatorSpec(std::move(name), arity, Provenance::UserExpression, std::move(evaluator));
}

}  // namespace gmix
