#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "gmix/error.hpp"
#include "gmix/families.hpp"
#include "gmix/h_operator.hpp"
#include "gmix/image/pipeline.hpp"
#include "gmix/lab/properties.hpp"
#include "gmix/transforms.hpp"
#include "support/oracle.hpp"

using namespace gmix;
using Catch::Matchers::WithinAbs;

namespace {

constexpr int kDraws = 2000;

// Every gallery family at arity n, with a direction and weights that fit.
std::vector<WeightFamily> gallery(std::size_t n) {
  std::vector<WeightFamily> out;
  for (const auto& name : gallery_family_names()) {
    FamilyParams p;
    p.arity = n;
    p.direction.assign(n, 1.0);
    p.direction[0] = 0.5;
    p.weights.assign(n, 1.0 / n);
    out.push_back(family_gallery(name, p));
    if (name == "max_deviation") {
      p.alpha = 2.0;
      out.push_back(family_gallery(name, p));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("GM values stay between Min and Max; BGM values below Max") {
  oracle::Source src(11);
  for (std::size_t n : {2u, 3u, 5u}) {
    for (const auto& fam : gallery(n)) {
      for (int k = 0; k < kDraws / 4; ++k) {
        const auto x = src.vec(n);
        const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
        if (fam.kind() == FamilyKind::FWF) {
          const double v = gm_eval(fam, UnitVector(x));
          CHECK(v >= *lo - 1e-12);
          CHECK(v <= *hi + 1e-12);
        } else {
          const double v = bgm_eval(fam, UnitVector(x));
          CHECK(v >= 0.0);
          CHECK(v <= *hi + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("OWA written as a GM agrees with OWA") {
  oracle::Source src(12);
  for (int k = 0; k < kDraws; ++k) {
    const std::size_t n = 1 + src.index(8);
    const auto w = src.simplex(n);
    const auto x = src.vec(n);
    const WeightVector wv(w);
    CHECK_THAT(gm_eval(owa_as_gm(wv), UnitVector(x)), WithinAbs(oracle::owa(w, x), 1e-12));
    CHECK_THAT(owa_eval(wv, UnitVector(x)), WithinAbs(oracle::owa(w, x), 1e-12));
  }
}

TEST_CASE("mixture written as a GM agrees with the mixture") {
  const std::vector<UnaryWeight> fns{[](double t) { return 1 + t; }, [](double t) { return 2 - t; },
                                     [](double t) { return t * t + 0.1; }};
  const auto fam = mixture_as_gm(fns);
  oracle::Source src(13);
  for (int k = 0; k < kDraws; ++k) {
    const auto x = src.vec(3);
    long double num = 0, den = 0;
    for (int i = 0; i < 3; ++i) {
      num += fns[i](x[i]) * x[i];
      den += fns[i](x[i]);
    }
    const double want = static_cast<double>(num / den);
    CHECK_THAT(gm_eval(fam, UnitVector(x)), WithinAbs(want, 1e-12));
    CHECK_THAT(mixture_eval(fns, UnitVector(x)), WithinAbs(want, 1e-12));
  }
}

TEST_CASE("H: closed form, GM form and the oracle agree") {
  oracle::Source src(14);
  for (std::size_t n : {2u, 3u, 4u, 5u, 8u}) {
    const auto fam = median_deviation_family(n);
    for (int k = 0; k < kDraws / 5; ++k) {
      const auto x = src.vec(n);
      const double want = oracle::h(x);
      CHECK_THAT(h_eval(UnitVector(x)), WithinAbs(want, 1e-12));
      CHECK_THAT(gm_eval(fam, UnitVector(x)), WithinAbs(want, 1e-12));
    }
  }
}

TEST_CASE("H: self-dual, symmetric, homogeneous, shift-invariant") {
  oracle::Source src(15);
  for (std::size_t n : {2u, 3u, 5u, 8u}) {
    for (int k = 0; k < kDraws / 4; ++k) {
      auto x = src.vec(n);
      const double hx = h_eval(UnitVector(x));
      std::vector<double> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = 1 - x[i];
      CHECK_THAT(1 - h_eval(UnitVector(c)), WithinAbs(hx, 1e-9));

      auto p = x;
      std::shuffle(p.begin(), p.end(), src.engine());
      CHECK_THAT(h_eval(UnitVector(p)), WithinAbs(hx, 1e-12));

      const double l = src.unit();
      std::vector<double> s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = l * x[i];
      CHECK_THAT(h_eval(UnitVector(s)), WithinAbs(l * hx, 1e-12));

      const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
      const double r = -*lo + src.unit() * (1 - *hi + *lo);
      for (std::size_t i = 0; i < n; ++i) s[i] = std::clamp(x[i] + r, 0.0, 1.0);
      CHECK_THAT(h_eval(UnitVector(s)), WithinAbs(hx + r, 1e-9));
    }
  }
}

TEST_CASE("transforms preserve the family kind") {
  using namespace gmix::transforms;
  oracle::Source src(16);
  const auto neg = FuzzyNegation::standard();
  for (const auto& fam : gallery(3)) {
    INFO(fam.name());
    CHECK(weak_conjugate(fam, UnaryMap::power(2.0)).kind() == fam.kind());
    CHECK(reverse_family(fam).kind() == fam.kind());
    // A weak family vanishing at the origin cannot keep weight one at (1,...,1)
    // once the inputs are negated.
    const bool vanishes = fam.weights(UnitVector{0.0, 0.0, 0.0}) == std::vector<double>(3, 0.0);
    if (vanishes && fam.kind() == FamilyKind::WeakFWF) {
      CHECK_THROWS_AS(weak_dual(fam, neg), Error);
    } else {
      CHECK(weak_dual(fam, neg).kind() == fam.kind());
    }
  }
  for (int k = 0; k < 50; ++k) {
    const auto w = src.simplex(4);
    const auto fam = owa_as_gm(WeightVector(w));
    CHECK(weak_dual(fam, FuzzyNegation::power(1 + 3 * src.unit())).kind() == FamilyKind::FWF);
  }
}

TEST_CASE("N-dual of a GM under the standard negation") {
  using namespace gmix::transforms;
  oracle::Source src(17);
  for (const auto& fam : gallery(3)) {
    if (fam.kind() != FamilyKind::FWF) continue;
    const auto dual = n_dual(make_gm(fam), FuzzyNegation::standard());
    const auto by_family = n_dual_family(fam);
    for (int k = 0; k < 100; ++k) {
      const auto x = src.vec(3);
      std::vector<double> c(3);
      for (int i = 0; i < 3; ++i) c[i] = 1 - x[i];
      CHECK_THAT(dual(x), WithinAbs(1 - gm_eval(fam, UnitVector(c)), 1e-12));
      CHECK_THAT(gm_eval(by_family, UnitVector(x)), WithinAbs(dual(x), 1e-9));
    }
  }
}

TEST_CASE("shift invariance implies diagonal directional monotonicity") {
  lab::CheckBudget b;
  b.random_samples = 1500;
  const std::vector<AggregatorSpec> ops{
      make_classic(Classic::Arith, 3), make_classic(Classic::Min, 3), make_classic(Classic::Max, 3),
      make_classic(Classic::Median, 4), make_cowa(5), make_h(3), make_gm(proportional_family(3)),
      make_classic(Classic::Prod, 2)};
  int shift_holds = 0;
  for (const auto& op : ops) {
    INFO(op.name());
    if (lab::check_shift_invariant(op, b).verdict != lab::Verdict::HoldsSampled) continue;
    ++shift_holds;
    CHECK(lab::check_directional(op, Direction::diagonal(op.arity()), b).verdict ==
          lab::Verdict::HoldsSampled);
  }
  CHECK(shift_holds >= 6);
}

TEST_CASE("monotone weight families lift to diagonal monotonicity") {
  lab::CheckBudget b;
  b.random_samples = 2000;
  for (double alpha : {1.0, 2.0}) {
    const auto fam = max_deviation_family(3, alpha);
    oracle::Source src(18);
    for (int k = 0; k < 500; ++k) {
      const auto x = src.vec(3);
      const double top = *std::max_element(x.begin(), x.end());
      const double l = (1 - top) * src.unit();
      std::vector<double> y(3);
      for (int i = 0; i < 3; ++i) y[i] = std::min(1.0, x[i] + l);
      const auto fx = fam.weights(UnitVector(x)), fy = fam.weights(UnitVector(y));
      for (int i = 0; i < 3; ++i) REQUIRE(fx[i] <= fy[i] + 1e-9);
    }
    CHECK(lab::check_directional(make_bgm(fam), Direction::diagonal(3), b).verdict ==
          lab::Verdict::HoldsSampled);
  }
}

TEST_CASE("direction-bounded BGMs increase along their own direction") {
  lab::CheckBudget b;
  b.random_samples = 2000;
  for (const auto& r : {Direction{1.0, 0.5}, Direction{0.25, 1.0, 0.5}, Direction{1.0, 1.0}}) {
    const auto bgm = make_bgm(direction_bounded_family(r));
    CHECK(lab::check_directional(bgm, r, b).verdict == lab::Verdict::HoldsSampled);
  }
}

TEST_CASE("block reduction is local, commutes with transposition and is ordered") {
  using namespace gmix::image;
  oracle::Source src(19);
  auto random = [&](std::size_t w, std::size_t h) {
    std::vector<std::uint8_t> px(w * h);
    for (auto& p : px) p = static_cast<std::uint8_t>(src.index(256));
    return GrayImage(w, h, px);
  };
  auto transpose = [](const GrayImage& g) {
    std::vector<std::uint8_t> px(g.size());
    for (std::size_t y = 0; y < g.height(); ++y)
      for (std::size_t x = 0; x < g.width(); ++x) px[x * g.height() + y] = g.at(x, y);
    return GrayImage(g.height(), g.width(), px);
  };
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 2 + src.index(3);
    const auto img = random(k * (1 + src.index(5)), k * (1 + src.index(5)));
    const auto mn = block_reduce(img, {k, make_classic(Classic::Min, k * k)});
    const auto mx = block_reduce(img, {k, make_classic(Classic::Max, k * k)});
    for (std::size_t i = 0; i < mn.size(); ++i) CHECK(mn.pixels()[i] <= mx.pixels()[i]);

    const auto h = make_h(k * k);
    const auto out = block_reduce(img, {k, h});
    CHECK(block_reduce(transpose(img), {k, h}) == transpose(out));

    auto px = img.pixels();
    const std::size_t victim = src.index(px.size());
    px[victim] = static_cast<std::uint8_t>(255 - px[victim]);
    const auto changed = block_reduce(GrayImage(img.width(), img.height(), px), {k, h});
    const std::size_t bx = (victim % img.width()) / k, by = (victim / img.width()) / k;
    for (std::size_t y = 0; y < out.height(); ++y)
      for (std::size_t x = 0; x < out.width(); ++x)
        if (x != bx || y != by) CHECK(changed.at(x, y) == out.at(x, y));
  }
}

TEST_CASE("PSNR is symmetric and non-negative") {
  using namespace gmix::image;
  oracle::Source src(20);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint8_t> a(64), b(64);
    for (auto& p : a) p = static_cast<std::uint8_t>(src.index(256));
    for (auto& p : b) p = static_cast<std::uint8_t>(src.index(256));
    const GrayImage ia(8, 8, a), ib(8, 8, b);
    CHECK(psnr(ia, ib) == psnr(ib, ia));
    CHECK(psnr(ia, ib) >= 0.0);
  }
}
