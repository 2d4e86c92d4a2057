#include <catch_amalgamated.hpp>

#include "gmix/error.hpp"
#include "gmix/families.hpp"
#include "gmix/h_operator.hpp"
#include "gmix/transforms.hpp"
#include "support/oracle.hpp"

using namespace gmix;
using namespace gmix::transforms;
using Catch::Matchers::WithinAbs;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no gmix::Error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("negations are validated") {
  const auto std_neg = FuzzyNegation::standard();
  CHECK(std_neg.is_standard());
  CHECK(std_neg(0.25) == 0.75);
  const auto p = FuzzyNegation::power(2.0);
  CHECK_FALSE(p.is_standard());
  CHECK(p.alpha() == 2.0);
  CHECK(p(0.5) == 0.75);
  CHECK(FuzzyNegation::power(1.0).is_standard());
  CHECK(code_of([] { FuzzyNegation("id", [](double x) { return x; }); }) == ErrorCode::BadParams);
  CHECK(code_of([] { FuzzyNegation("bump", [](double x) { return x < 1 ? 1.0 - x * (1 - x) * 4 * x : 0.0; }); }) ==
        ErrorCode::BadParams);
  CHECK(code_of([] { FuzzyNegation::power(0.0); }) == ErrorCode::BadParams);
}

TEST_CASE("unary maps flag automorphisms") {
  CHECK(UnaryMap::identity().is_automorphism());
  CHECK(UnaryMap::power(2.0).is_automorphism());
  CHECK_FALSE(UnaryMap("half", [](double x) { return x / 2; }).is_automorphism());
  CHECK_FALSE(UnaryMap("flat", [](double) { return 0.5; }).is_automorphism());
  CHECK(code_of([] { UnaryMap("big", [](double x) { return 2 * x; }); }) == ErrorCode::BadParams);
}

TEST_CASE("n_dual of Min is Max") {
  const auto dual = n_dual(make_classic(Classic::Min, 3), FuzzyNegation::standard());
  oracle::Source src(3);
  for (int k = 0; k < 1000; ++k) {
    const auto x = src.vec(3);
    CHECK_THAT(dual(x), WithinAbs(*std::max_element(x.begin(), x.end()), 1e-12));
  }
}

TEST_CASE("n_dual of a GM under the standard negation is a GM") {
  const auto gm = make_gm(proportional_family(3));
  const auto dual = n_dual(gm, FuzzyNegation::standard());
  CHECK(dual.provenance() == Provenance::GM);
  REQUIRE(dual.family());
  CHECK(dual.family()->kind() == FamilyKind::FWF);
  oracle::Source src(4);
  for (int k = 0; k < 1000; ++k) {
    const auto x = src.vec(3);
    std::vector<double> y(3);
    for (int i = 0; i < 3; ++i) y[i] = 1.0 - x[i];
    CHECK_THAT(dual(x), WithinAbs(1.0 - oracle::proportional_gm(y), 1e-9));
  }
}

TEST_CASE("n_dual_family of equal and median-deviation families") {
  const auto eq = n_dual_family(equal_family(4));
  const auto x = UnitVector{0.1, 0.7, 0.3, 0.3};
  CHECK(eq.weights(x) == equal_family(4).weights(x));
  const auto md = median_deviation_family(4);
  const auto dual = n_dual_family(md);
  oracle::Source src(5);
  for (int k = 0; k < 200; ++k) {
    const UnitVector v(src.vec(4));
    CHECK_THAT(gm_eval(dual, v), WithinAbs(gm_eval(md, v), 1e-9));
  }
  CHECK(code_of([] { n_dual_family(coordinate_scaled_family(2)); }) == ErrorCode::FamilyViolation);
}

TEST_CASE("n_dual_family of the proportional family") {
  const auto dual = n_dual_family(proportional_family(3));
  oracle::Source src(6);
  for (int k = 0; k < 100; ++k) {
    const auto x = src.vec(3);
    const auto w = dual.weights(UnitVector(x));
    const double s = 3.0 - (x[0] + x[1] + x[2]);
    for (int i = 0; i < 3; ++i) CHECK_THAT(w[i], WithinAbs((1.0 - x[i]) / s, 1e-12));
  }
}

TEST_CASE("weak dual under a power negation") {
  const auto fam = proportional_family(3);
  for (double a : {1.0, 2.0, 3.0}) {
    const auto wd = weak_dual(fam, FuzzyNegation::power(a));
    CHECK(wd.kind() == FamilyKind::FWF);
    CHECK(gm_eval(wd, UnitVector{0.0, 0.0, 0.0}) == 0.0);
    oracle::Source src(static_cast<std::uint64_t>(a * 10));
    for (int k = 0; k < 1000; ++k) {
      const auto x = src.vec(3);
      CHECK_THAT(gm_eval(wd, UnitVector(x)), WithinAbs(oracle::weak_dual_proportional(x, a), 1e-9));
    }
  }
}

TEST_CASE("the printed weak-dual closed form disagrees with the composition") {
  const auto wd = weak_dual(proportional_family(2), FuzzyNegation::standard());
  const std::vector<double> x{0.5, 0.5};
  CHECK_THAT(gm_eval(wd, UnitVector(x)), WithinAbs(0.5, 1e-12));
  CHECK_THAT(oracle::weak_dual_proportional_printed(x, 1.0), WithinAbs(1.5, 1e-12));
}

TEST_CASE("weak dual by the standard negation is an involution") {
  const auto fam = median_deviation_family(3);
  const auto neg = FuzzyNegation::standard();
  const auto twice = weak_dual(weak_dual(fam, neg), neg);
  oracle::Source src(8);
  for (int k = 0; k < 200; ++k) {
    const UnitVector x(src.vec(3));
    const auto a = twice.weights(x);
    const auto b = fam.weights(x);
    for (int i = 0; i < 3; ++i) CHECK_THAT(a[i], WithinAbs(b[i], 1e-12));
  }
  const auto eq = weak_dual(equal_family(3), FuzzyNegation::power(2.0));
  CHECK(eq.weights(UnitVector{0.2, 0.9, 0.4}) == equal_family(3).weights(UnitVector{0.2, 0.9, 0.4}));
}

TEST_CASE("weak conjugates") {
  const auto prop = proportional_family(2);
  const auto sq = weak_conjugate(prop, UnaryMap::power(2.0));
  CHECK(sq.name().rfind("weak_conjugate[x^2]", 0) == 0);
  const auto w = sq.weights(UnitVector{0.5, 0.5});
  CHECK_THAT(w[0], WithinAbs(0.5, 1e-12));
  CHECK_THAT(w[1], WithinAbs(0.5, 1e-12));
  CHECK_THAT(gm_eval(sq, UnitVector{0.5, 0.5}), WithinAbs(0.5, 1e-12));

  const auto id = weak_conjugate(prop, UnaryMap::identity());
  CHECK(id.weights(UnitVector{0.3, 0.6}) == prop.weights(UnitVector{0.3, 0.6}));
  const auto eq = weak_conjugate(equal_family(3), UnaryMap::power(2.0));
  CHECK(eq.weights(UnitVector{0.3, 0.6, 0.1}) == equal_family(3).weights(UnitVector{0.3, 0.6, 0.1}));

  const std::vector<UnaryMap> mixed{UnaryMap::identity(), UnaryMap::power(2.0)};
  CHECK(weak_conjugate(prop, mixed).name().rfind("weak_transform", 0) == 0);
  CHECK(code_of([&] { weak_conjugate(prop, std::vector<UnaryMap>{UnaryMap::identity()}); }) ==
        ErrorCode::ArityMismatch);
}

TEST_CASE("reversed families") {
  const auto fam = owa_as_gm(WeightVector{0.3, 0.4, 0.3});
  const auto rev = reverse_family(fam);
  CHECK(rev.weights(UnitVector{0.1, 1.0, 0.9}) == std::vector<double>{0.4, 0.3, 0.3});
  const auto back = reverse_family(rev);
  oracle::Source src(9);
  for (int k = 0; k < 100; ++k) {
    const UnitVector x(src.vec(3));
    CHECK(back.weights(x) == fam.weights(x));
  }
  CHECK(reverse_family(equal_family(3)).weights(UnitVector{0.1, 0.2, 0.3}) ==
        equal_family(3).weights(UnitVector{0.1, 0.2, 0.3}));
  CHECK(reverse_family(coordinate_scaled_family(3)).kind() == FamilyKind::WeakFWF);
}

TEST_CASE("standard dual of a BGM splits into a BGM part and a remainder") {
  const auto fam = coordinate_scaled_family(3);
  const auto neg = FuzzyNegation::standard();
  const auto pointwise = n_dual(make_bgm(fam), neg);
  oracle::Source src(10);
  for (int k = 0; k < 1000; ++k) {
    const UnitVector x(src.vec(3));
    const auto d = decompose_standard_dual(fam, x);
    CHECK_THAT(d.dual, WithinAbs(pointwise(x), 1e-12));
    CHECK_THAT(d.bgm_part + d.remainder, WithinAbs(d.dual, 1e-9));
  }
}

TEST_CASE("power negation induces a weak family that is not an FWF") {
  const auto induced = power_negation_induced_family(proportional_family(3), 2.0);
  CHECK(induced.kind() == FamilyKind::WeakFWF);
  const auto w = induced.weights(UnitVector{0.5, 0.2, 0.1});
  CHECK(w[0] + w[1] + w[2] < 1.0 - 1e-3);
  CHECK(code_of([] {
          WeightFamily("induced-as-fwf", 3, FamilyKind::FWF, [](const UnitVector& x) {
            return power_negation_induced_family(proportional_family(3), 2.0).weights(x);
          });
        }) == ErrorCode::FamilyViolation);
}
