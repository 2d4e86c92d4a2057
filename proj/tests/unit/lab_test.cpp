#include <catch_amalgamated.hpp>

#include <json.hpp>

#include "gmix/error.hpp"
#include "gmix/families.hpp"
#include "gmix/lab/preagg_gallery.hpp"
#include "gmix/lab/properties.hpp"
#include "gmix/lab/report.hpp"

using namespace gmix;
using namespace gmix::lab;
using Catch::Matchers::WithinAbs;

namespace {

CheckBudget small() {
  CheckBudget b;
  b.random_samples = 2000;
  return b;
}

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

TEST_CASE("budget validation") {
  CHECK_NOTHROW(CheckBudget{}.validate());
  CheckBudget b;
  b.random_samples = 0;
  CHECK(code_of([&] { b.validate(); }) == ErrorCode::BadParams);
  b = {};
  b.grid_points_per_axis = 1;
  CHECK(code_of([&] { b.validate(); }) == ErrorCode::BadParams);
  b = {};
  b.tolerance = -1;
  CHECK(code_of([&] { b.validate(); }) == ErrorCode::BadParams);
  b = {};
  b.rng_seed = 0;
  CHECK(code_of([&] { check_symmetric(make_h(3), b); }) == ErrorCode::BadParams);
}

TEST_CASE("boundary conditions") {
  CHECK(check_boundary(make_classic(Classic::Arith, 3)).verdict == Verdict::HoldsSampled);
  const auto half = make_user("half", 2, [](const UnitVector&) { return 0.5; });
  const auto r = check_boundary(half);
  CHECK(r.verdict == Verdict::Refuted);
  CHECK(witness_reproduces(half, r));
}

TEST_CASE("constant 0.5 is not idempotent") {
  const auto half = make_user("half", 3, [](const UnitVector&) { return 0.5; });
  const auto r = check_idempotent(half, small());
  CHECK(r.verdict == Verdict::Refuted);
  REQUIRE(r.witness);
  CHECK(witness_reproduces(half, r));
}

TEST_CASE("proportional GM refuted with the seeded pair") {
  const auto gm = make_gm(proportional_family(3));
  const UnitVector x{0.5, 0.2, 0.1}, y{0.5, 0.22, 0.2};
  const auto r = check_monotone(gm, small(), {{x, y}});
  REQUIRE(r.verdict == Verdict::Refuted);
  REQUIRE(r.witness);
  CHECK(r.witness->kind == WitnessKind::PairDecrease);
  CHECK(r.witness->inputs[0] == std::vector<double>{0.5, 0.2, 0.1});
  CHECK(r.witness->inputs[1] == std::vector<double>{0.5, 0.22, 0.2});
  CHECK_THAT(r.witness->observed[0], WithinAbs(0.375, 1e-12));
  CHECK_THAT(r.witness->observed[1], WithinAbs(0.36783, 5e-4));
  CHECK(witness_reproduces(gm, r));
  CHECK(code_of([&] { check_monotone(gm, small(), {{y, x}}); }) == ErrorCode::BadParams);
}

TEST_CASE("Mode is not monotone") {
  const auto mode = gallery_preagg(PreAggKind::Mode, {3, 0.5});
  const auto r = check_monotone(mode, small());
  CHECK(r.verdict == Verdict::Refuted);
  CHECK(witness_reproduces(mode, r));
}

TEST_CASE("arithmetic mean passes the basic properties") {
  const auto a = make_classic(Classic::Arith, 4);
  const auto b = small();
  CHECK(check_monotone(a, b).verdict == Verdict::HoldsSampled);
  CHECK(check_idempotent(a, b).verdict == Verdict::HoldsSampled);
  CHECK(check_averaging(a, b).verdict == Verdict::HoldsSampled);
  CHECK(check_homogeneous(a, 1.0, b).verdict == Verdict::HoldsSampled);
  CHECK(check_shift_invariant(a, b).verdict == Verdict::HoldsSampled);
  CHECK(check_symmetric(a, b).verdict == Verdict::HoldsSampled);
}

TEST_CASE("coordinate-scaled BGM: not idempotent, homogeneous of order 2") {
  const auto bgm = make_bgm(coordinate_scaled_family(2));
  CheckBudget b;
  const auto idem = check_idempotent(bgm, b);
  REQUIRE(idem.verdict == Verdict::Refuted);
  REQUIRE(idem.witness);
  CHECK(idem.witness->inputs[0] == std::vector<double>{0.5, 0.5});
  CHECK(idem.witness->observed[0] == 0.25);
  const auto hom = check_homogeneous(bgm, 2.0, b);
  CHECK(hom.verdict == Verdict::HoldsSampled);
  CHECK(hom.property == "homogeneous:2");
  CHECK(check_homogeneous(bgm, 1.0, b).verdict == Verdict::Refuted);
  CHECK(code_of([&] { check_homogeneous(bgm, -1.0, b); }) == ErrorCode::BadParams);
}

TEST_CASE("non-symmetric and non-shift-invariant operators are refuted") {
  const auto w = make_wavg(WeightVector{0.2, 0.8});
  const auto s = check_symmetric(w, small());
  CHECK(s.verdict == Verdict::Refuted);
  CHECK(witness_reproduces(w, s));
  const auto prod = make_classic(Classic::Prod, 2);
  const auto sh = check_shift_invariant(prod, small());
  CHECK(sh.verdict == Verdict::Refuted);
  CHECK(witness_reproduces(prod, sh));
  const auto av = check_averaging(prod, small());
  CHECK(av.verdict == Verdict::Refuted);
  CHECK(witness_reproduces(prod, av));
}

TEST_CASE("neutral elements and annihilators") {
  const auto b = small();
  const auto mn = make_classic(Classic::Min, 3);
  const auto mx = make_classic(Classic::Max, 3);
  const auto n_min = find_neutral(mn, b);
  CHECK(n_min.verdict == Verdict::HoldsSampled);
  CHECK(n_min.found == std::vector<double>{1.0});
  CHECK(find_neutral(mx, b).found == std::vector<double>{0.0});
  CHECK(find_annihilator(mn, b).found == std::vector<double>{0.0});
  CHECK(find_annihilator(mx, b).found == std::vector<double>{1.0});
  for (const auto& op : {make_classic(Classic::Arith, 3), make_h(3)}) {
    const auto ne = find_neutral(op, b);
    CHECK(ne.verdict == Verdict::Refuted);
    CHECK(ne.found.empty());
    CHECK(witness_reproduces(op, ne));
    const auto an = find_annihilator(op, b);
    CHECK(an.verdict == Verdict::Refuted);
    CHECK(witness_reproduces(op, an));
  }
}

TEST_CASE("divisor searches") {
  const auto b = small();
  for (const auto& op : {make_classic(Classic::Min, 2), make_classic(Classic::Max, 2),
                         make_classic(Classic::Arith, 2), make_classic(Classic::Prod, 2),
                         make_h(2)}) {
    const auto z = check_zero_divisor(op, b);
    CHECK(z.verdict == Verdict::Refuted);
    CHECK(witness_reproduces(op, z));
    const auto o = check_one_divisor(op, b);
    CHECK(o.verdict == Verdict::Refuted);
    CHECK(witness_reproduces(op, o));
  }
  // Zero whenever some coordinate is at most 0.3: the divisors are 0.01 .. 0.3.
  const auto cut = make_user("cut", 2, [](const UnitVector& x) {
    const double m = std::min(x[0], x[1]);
    return m <= 0.3 ? 0.0 : m;
  });
  const auto z = check_zero_divisor(cut, b);
  CHECK(z.verdict == Verdict::HoldsSampled);
  CHECK(z.found.size() == 30);
  CHECK(z.found.back() == 0.3);
}

TEST_CASE("gallery values") {
  const PreAggParams p2{2, 0.5};
  CHECK(gallery_preagg(PreAggKind::TruncDiff, p2)(std::vector<double>{0.3, 0.7}) == 0.3);
  CHECK_THAT(gallery_preagg(PreAggKind::TruncDiff, p2)(std::vector<double>{0.7, 0.3}), WithinAbs(0.54, 1e-12));
  CHECK(gallery_preagg(PreAggKind::StepA, p2)(std::vector<double>{0.5, 0.8}) == 1.0);
  CHECK(gallery_preagg(PreAggKind::StepA, p2)(std::vector<double>{0.5, 0.7}) == 0.25);
  CHECK(gallery_preagg(PreAggKind::StepB, p2)(std::vector<double>{0.8, 0.5}) == 1.0);
  CHECK(gallery_preagg(PreAggKind::Lehmer, p2)(std::vector<double>{0.0, 0.0}) == 0.0);
  CHECK_THAT(gallery_preagg(PreAggKind::Lehmer, p2)(std::vector<double>{0.2, 0.6}), WithinAbs(0.5, 1e-12));
  CHECK(code_of([] { gallery_preagg(PreAggKind::Lehmer, {2, 1.0}); }) == ErrorCode::BadParams);
  CHECK(mode_eval(UnitVector{0.3, 0.7, 0.3}) == 0.3);
  CHECK(mode_eval(UnitVector{0.9, 0.2, 0.5}) == 0.2);
  CHECK(mode_eval(UnitVector{0.9, 0.9, 0.1, 0.1}) == 0.1);
}

TEST_CASE("directional claims for the gallery") {
  const auto b = small();
  CHECK(check_directional(gallery_preagg(PreAggKind::Mode, {2, 0.5}), Direction{1, 1}, b).verdict ==
        Verdict::HoldsSampled);
  CHECK(check_directional(gallery_preagg(PreAggKind::TruncDiff), Direction{0, 1}, b).verdict ==
        Verdict::HoldsSampled);
  for (double l : {0.25, 0.5, 0.75}) {
    CHECK(check_directional(gallery_preagg(PreAggKind::Lehmer, {2, l}), Direction{1 - l, l}, b).verdict ==
          Verdict::HoldsSampled);
  }
  CHECK(check_directional(gallery_preagg(PreAggKind::StepA), Direction{0, 1}, b).verdict ==
        Verdict::HoldsSampled);
  CHECK(check_directional(gallery_preagg(PreAggKind::StepB), Direction{1, 0}, b).verdict ==
        Verdict::HoldsSampled);

  const auto a = gallery_preagg(PreAggKind::StepA);
  const auto r = check_directional(a, Direction{1, 0}, b);
  CHECK(r.verdict == Verdict::Refuted);
  CHECK(r.property == "directional(1,0)");
  CHECK(witness_reproduces(a, r));
  CHECK(code_of([&] { check_directional(a, Direction{1, 1, 1}, b); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("pre-aggregation classification") {
  const auto b = small();
  const auto h = is_pre_aggregation(make_h(3), {Direction::diagonal(3)}, b);
  CHECK(h.verdict == Verdict::HoldsSampled);
  CHECK(h.found == std::vector<double>{1, 1, 1});
  const auto mode = is_pre_aggregation(gallery_preagg(PreAggKind::Mode, {2, 0.5}), {}, b);
  CHECK(mode.verdict == Verdict::HoldsSampled);
  const auto half = make_user("half", 2, [](const UnitVector&) { return 0.5; });
  CHECK(is_pre_aggregation(half, {}, b).verdict == Verdict::Refuted);
  // Passes the boundary but decreases along every candidate.
  const auto bump = make_user("bump", 2, [](const UnitVector& x) {
    const double s = x[0] + x[1];
    return s == 2.0 ? 1.0 : (s == 0.0 ? 0.0 : 4 * x[0] * (1 - x[0]) * x[1] * (1 - x[1]));
  });
  const auto r = is_pre_aggregation(bump, {}, b);
  CHECK(r.verdict == Verdict::Refuted);
  CHECK(r.property == "pre-aggregation");
  CHECK(witness_reproduces(bump, r));
}

TEST_CASE("reports are deterministic and serialise") {
  const auto gm = make_gm(proportional_family(3));
  const auto a = check_monotone(gm, small());
  const auto b = check_monotone(gm, small());
  CHECK(a == b);
  CHECK(to_text(a) == to_text(b));
  CheckBudget other = small();
  other.rng_seed = 7;
  CHECK(check_monotone(gm, other).samples_used == a.samples_used);

  for (const auto& r : {a, find_neutral(make_classic(Classic::Min, 2), small()),
                        check_symmetric(make_h(3), small())}) {
    const auto back = report_from_json(nlohmann::json::parse(to_json_line(r)));
    CHECK(back == r);
  }
  CHECK(code_of([] { report_from_json(nlohmann::json::parse("{\"property\": 3}")); }) == ErrorCode::ParseError);
  const std::string line = to_text(a);
  CHECK(line.rfind("property=monotone verdict=Refuted", 0) == 0);
  CHECK(line.find("witness.kind=pair_decrease") != std::string::npos);
}

TEST_CASE("failed evaluations make a check inconclusive") {
  const auto bad = make_user("bad", 2, [](const UnitVector& x) { return x[0] + 2 * x[1]; });
  const auto r = check_symmetric(make_user("err", 2, [](const UnitVector&) -> double {
                                   throw Error(ErrorCode::ZeroDenominator, "boom");
                                 }),
                                 small());
  CHECK(r.verdict == Verdict::Inconclusive);
  CHECK(check_idempotent(bad, small()).verdict != Verdict::HoldsSampled);
}
