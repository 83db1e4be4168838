#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"

#include "crooked/annuli.hpp"
#include "crooked/error.hpp"

using namespace crooked;

namespace {

const WParams kW{};

// Geometric oracle for "two closed polygons intersect": some pair of edges
// meets (touching counts), or one polygon holds a vertex of the other.
double orient(LiftPoint o, LiftPoint a, LiftPoint b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool on_segment(LiftPoint p, LiftPoint a, LiftPoint b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool edges_meet(LiftPoint a, LiftPoint b, LiftPoint c, LiftPoint d) {
  const double d1 = orient(c, d, a), d2 = orient(c, d, b), d3 = orient(a, b, c), d4 = orient(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  return (d1 == 0 && on_segment(a, c, d)) || (d2 == 0 && on_segment(b, c, d)) || (d3 == 0 && on_segment(c, a, b)) ||
         (d4 == 0 && on_segment(d, a, b));
}

bool inside(LiftPoint p, const std::vector<LiftPoint>& poly) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const LiftPoint a = poly[i], b = poly[j];
    if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
  }
  return in;
}

struct Edge {
  LiftPoint a, b;
  double lo, hi;
};

std::vector<Edge> edges(const std::vector<LiftPoint>& poly, double dx) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    LiftPoint a = poly[i], b = poly[(i + 1) % poly.size()];
    a.x += dx;
    b.x += dx;
    out.push_back({a, b, std::min(a.x, b.x), std::max(a.x, b.x)});
  }
  std::sort(out.begin(), out.end(), [](const Edge& e, const Edge& f) { return e.lo < f.lo; });
  return out;
}

bool polygons_meet(const std::vector<LiftPoint>& P, const std::vector<LiftPoint>& Q, double dx) {
  const auto ep = edges(P, 0.0), eq = edges(Q, dx);
  double maxw = 0;
  for (const auto& e : eq) maxw = std::max(maxw, e.hi - e.lo);
  for (const auto& e : ep) {
    auto it = std::lower_bound(eq.begin(), eq.end(), e.lo - maxw, [](const Edge& f, double v) { return f.lo < v; });
    for (; it != eq.end() && it->lo <= e.hi; ++it)
      if (it->hi >= e.lo && edges_meet(e.a, e.b, it->a, it->b)) return true;
  }
  LiftPoint q0 = Q[0];
  q0.x += dx;
  std::vector<LiftPoint> Qs = Q;
  for (auto& v : Qs) v.x += dx;
  return inside(P[0], Qs) || inside(q0, P);
}

bool rects_meet(const RectanglePartition& part, int i, int j) {
  for (double dx : {-kTwoPi, 0.0, kTwoPi})
    if (polygons_meet(part.boundary(i), part.boundary(j), dx)) return true;
  return false;
}

}  // namespace

TEST_CASE("depth 0 partition into 4") {
  const BlockSchedule s{{{0, 1}}, kW};
  const auto part = partition(trace_level(s, 0), s.prefix(0), 4);
  REQUIRE(part.cut_params.size() == 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(part.cut_arclength[j] == doctest::Approx(j * kPi / 2).epsilon(1e-9));
    CHECK(part.cut_params[j] == doctest::Approx(j * kPi / 2).epsilon(1e-9));
    const auto b = part.boundary(j);
    double lo = 1e9, hi = -1e9;
    for (const auto& p : b) {
      lo = std::min(lo, p.x);
      hi = std::max(hi, p.x);
    }
    CHECK(hi - lo == doctest::Approx(kPi / 2).epsilon(1e-9));
  }
}

TEST_CASE("depth 0 diameters") {
  const BlockSchedule s{{{0, 1}}, kW};
  const auto lv = trace_level(s, 0);
  const double d4 = max_rect_diameter(partition(lv, s.prefix(0), 4));
  const double d8 = max_rect_diameter(partition(lv, s.prefix(0), 8));
  CHECK(d4 >= 4.0);
  CHECK(d4 <= std::sqrt(kPi * kPi / 4 + 16) + 1e-12);
  CHECK(d8 <= d4);
}

TEST_CASE("thin band diameter approaches the x spacing") {
  const BlockSchedule s{{{3, 0}}, kW};  // band |y| <= 2 / 512
  const int N = 16;
  const auto part = partition(trace_level(s, 1), s, N);
  const double d = max_rect_diameter(part);
  CHECK(d >= kTwoPi / N);
  CHECK(d <= kTwoPi / N * 1.01);
}

TEST_CASE("N below 4 is rejected") {
  const BlockSchedule s{{{0, 1}}, kW};
  try {
    (void)partition(trace_level(s, 0), s.prefix(0), 3);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigInvalid);
  }
}

TEST_CASE("cyclic adjacency rule holds geometrically") {
  const BlockSchedule s{{{0, 1}}, kW};
  const auto part = partition(trace_level(s, 1), s, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == 7);
      CHECK_MESSAGE(rects_meet(part, i, j) == adjacent, "rectangles " << i << " and " << j);
    }
}

TEST_CASE("points on a fiber between cuts get that rectangle") {
  const BlockSchedule s{{{0, 1}}, kW};
  const int N = 6;
  const auto part = partition(trace_level(s, 1), s, N);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> t(0.01, 0.99);
  for (int j = 0; j < N; ++j) {
    const double ua = part.cut_params[j];
    const double ub = j + 1 < N ? part.cut_params[j + 1] : part.loop_param;
    for (int r = 0; r < 20; ++r) {
      const double u = ua + t(rng) * (ub - ua);
      for (const auto& p : part.fiber_at(u)) CHECK(part.index_of_point(p) == j);
    }
  }
}

TEST_CASE("every sampled annulus point lies in some rectangle") {
  const BlockSchedule s{{{1, 1}}, kW};
  const int N = 5;
  const auto part = partition(trace_level(s, 1), s, N);
  const CurveSource src{0.0, part.steps, kW};
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> U(0, part.loop_param), Y(-2, 2);
  for (int r = 0; r < 500; ++r) {
    const LiftPoint p = src.evaluate(U(rng), Y(rng));
    const long j = part.index_of_point(p);
    CHECK(j >= 0);
    CHECK(j < N);
  }
}
