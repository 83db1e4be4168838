#include <algorithm>
#include <cmath>

#include "doctest.h"

#include "crooked/annuli.hpp"
#include "crooked/error.hpp"
#include "crooked/kernels.hpp"

using namespace crooked;

namespace {

const WParams kW{};

double min_dist_to(const LiftedCurve& c, LiftPoint p) {
  double best = 1e300;
  for (std::size_t i = 0; i < c.size(); ++i) best = std::min(best, cylinder_distance(c.vertices[i], p));
  return best;
}

}  // namespace

TEST_CASE("membership examples") {
  const BlockSchedule any{{{1, 1}, {2, 3}}, kW};
  for (std::size_t k = 0; k <= 2; ++k) CHECK(membership(CylinderPoint::radians(0, 0), any, k));
  CHECK_FALSE(membership(CylinderPoint::radians(0, 3), any, 0));
  CHECK_FALSE(membership(CylinderPoint::radians(kPi / 2, 1), {{{1, 1}}, kW}, 1));
}

TEST_CASE("T pullback of y = 2") {
  const auto c = pullback_curve(horizontal_line(2.0), MapId::T, kW);
  CHECK(c.holonomy == doctest::Approx(kPi));
  for (const auto& v : c.vertices) CHECK(v.y == doctest::Approx(0.25));
}

TEST_CASE("W pullback of y = 0 matches the closed form") {
  const auto c = pullback_curve(horizontal_line(0.0), MapId::W, kW);
  CHECK(c.holonomy == doctest::Approx(kTwoPi));
  const double a = 511.0 / 512.0;
  double ymax = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double u = c.params[i];
    CHECK(std::abs(c.vertices[i].x - (u + kTwoPi * a * std::sin(u))) < 1e-12 * 16);
    CHECK(std::abs(c.vertices[i].y - a * std::sin(u)) < 1e-12);
    ymax = std::max(ymax, std::abs(c.vertices[i].y));
  }
  const LiftPoint at0 = c.evaluate(0.0);
  CHECK(at0.x == 0.0);
  CHECK(at0.y == 0.0);
  CHECK(ymax <= a + 1e-15);
  CHECK(ymax > a - 1e-6);
}

TEST_CASE("refinement bounds segment length") {
  const RefineOptions opts{1e-3, 0.2, 10'000'000};
  const auto c = pullback_curve(horizontal_line(0.0), MapId::W, kW, opts);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const LiftPoint a = c.vertex(i), b = c.vertex(i + 1);
    CHECK(std::hypot(b.x - a.x, b.y - a.y) <= opts.tol);
  }
}

TEST_CASE("vertex budget raises UNRESOLVED_CURVE") {
  const RefineOptions tiny{1e-3, 0.2, 100};
  try {
    (void)pullback_curve(horizontal_line(0.0), MapId::W, kW, tiny);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnresolvedCurve);
  }
}

TEST_CASE("trace_chain examples") {
  const auto t = trace_chain({{{1, 0}}, kW}, 1);
  for (const auto& v : t.level(1).upper.vertices) CHECK(v.y == doctest::Approx(0.25));
  for (const auto& v : t.level(1).lower.vertices) CHECK(v.y == doctest::Approx(-0.25));

  const auto w = trace_chain({{{0, 1}}, kW}, 1);
  const auto direct = pullback_curve(horizontal_line(0.0), MapId::W, kW);
  const auto& core = w.level(1).core;
  for (std::size_t i = 0; i < core.size(); i += 97) {
    const LiftPoint p = direct.evaluate(core.params[i]);
    CHECK(std::abs(p.x - core.vertices[i].x) < 1e-12 * 16);
    CHECK(std::abs(p.y - core.vertices[i].y) < 1e-12);
  }

  const BlockSchedule s{{{1, 1}}, kW};
  const auto c = trace_chain(s, 1);
  for (const auto* curve : {&c.level(1).upper, &c.level(1).lower, &c.level(1).core})
    for (const auto& v : curve->vertices) CHECK(membership(project(v), s, 1, 1e-6));
}

TEST_CASE("core samples are members and curves are disjoint") {
  const BlockSchedule s{{{0, 1}, {1, 1}}, kW};
  const auto chain = trace_chain(s, 2);
  for (std::size_t k = 0; k <= 2; ++k) {
    const auto& lv = chain.level(k);
    for (std::size_t i = 0; i < lv.core.size(); i += 13) CHECK(membership(project(lv.core.vertices[i]), s, k, 1e-6));
    // Disjointness: at equal base parameter the three curves are separated.
    for (std::size_t i = 0; i < lv.core.size(); i += 101) {
      const double u = lv.core.params[i];
      const LiftPoint a = lv.upper.evaluate(u), b = lv.lower.evaluate(u), m = lv.core.evaluate(u);
      CHECK(std::hypot(a.x - m.x, a.y - m.y) > 0);
      CHECK(std::hypot(b.x - m.x, b.y - m.y) > 0);
    }
  }
}

TEST_CASE("nesting: boundary vertices lie strictly inside the previous level") {
  for (const BlockSchedule& s : {BlockSchedule{{{0, 1}}, kW}, BlockSchedule{{{1, 1}}, kW},
                                 BlockSchedule{{{0, 1}, {2, 1}}, kW}}) {
    const std::size_t k = s.depth();
    const auto lv = trace_level(s, k);
    for (const auto* c : {&lv.upper, &lv.lower}) {
      for (std::size_t i = 0; i < c->size(); i += 7) {
        const CylinderPoint p = project(c->vertices[i]);
        CHECK(std::abs(std::abs(block_forward(p, s, k).y) - 2.0) < 1e-6);
        CHECK(std::abs(block_forward(p, s, k - 1).y) < 2.0);
      }
    }
  }
}

TEST_CASE("holonomy halves for each T step pulled back after the last W step") {
  struct Case {
    BlockSchedule s;
    double hol;
  };
  for (const Case& c : {Case{{{{1, 0}}, kW}, kPi}, Case{{{{2, 0}}, kW}, kPi / 2}, Case{{{{0, 1}}, kW}, kTwoPi},
                        Case{{{{1, 1}}, kW}, kPi}, Case{{{{1, 1}, {0, 1}}, kW}, kPi},
                        Case{{{{0, 1}, {1, 0}}, kW}, kTwoPi}, Case{{{{2, 0}, {1, 0}}, kW}, kPi / 4}}) {
    const auto core = trace_curve(c.s, c.s.depth(), 0.0);
    CHECK(core.holonomy == doctest::Approx(c.hol));
    // One closed loop on the cylinder wraps exactly once.
    CHECK(core.holonomy * static_cast<double>(core.periods_per_loop()) == doctest::Approx(kTwoPi));
  }
}

TEST_CASE("raster examples") {
  const RasterBox box{};
  const auto r0 = rasterize({{{1, 0}}, kW}, 0, box, 100, 100);
  CHECK(std::abs(r0.fraction() - 0.5) <= 0.01);
  const auto r1 = rasterize({{{1, 0}}, kW}, 1, box, 100, 100);
  CHECK(std::abs(r1.fraction() - 1.0 / 16) <= 0.01);
  const auto rw = rasterize({{{0, 1}}, kW}, 1, box, 100, 100);
  const double expect = 1.0 / (2 * 512.0);
  CHECK(rw.fraction() >= expect / 2);
  CHECK(rw.fraction() <= expect * 2);
  // Bits agree with membership at cell centers.
  for (std::size_t row = 0; row < rw.rows; ++row)
    for (std::size_t col = 0; col < rw.cols; ++col)
      CHECK(rw.at(col, row) == membership(project(rw.center(col, row)), {{{0, 1}}, kW}, 1));
}

TEST_CASE("boundaries separate set and unset raster cells") {
  for (const BlockSchedule& s : {BlockSchedule{{{1, 0}}, kW}, BlockSchedule{{{0, 1}}, kW}}) {
    const auto r = rasterize(s, 1, {}, 80, 80);
    const auto lv = trace_level(s, 1);
    const double dx = kTwoPi / 80, dy = 8.0 / 80;
    const double tol = 0.5 * std::min(dx, dy);
    for (std::size_t row = 0; row < r.rows; ++row)
      for (std::size_t col = 0; col < r.cols; ++col) {
        if (!r.at(col, row)) continue;
        const LiftPoint c = r.center(col, row);
        if (std::min(min_dist_to(lv.upper, c), min_dist_to(lv.lower, c)) > tol) continue;
        bool unset = false;
        if (row > 0 && !r.at(col, row - 1)) unset = true;
        if (row + 1 < r.rows && !r.at(col, row + 1)) unset = true;
        if (!r.at((col + 1) % r.cols, row) || !r.at((col + r.cols - 1) % r.cols, row)) unset = true;
        CHECK(unset);
      }
  }
}
