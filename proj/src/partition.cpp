#include <algorithm>
#include <cmath>

#include "crooked/annuli.hpp"
#include "crooked/error.hpp"
#include "crooked/kernels.hpp"

namespace crooked {

namespace {

void unroll_loop(const LiftedCurve& c, std::vector<double>& us, std::vector<LiftPoint>& pts) {
  const std::size_t n = c.size() * c.periods_per_loop();
  us.resize(n);
  pts.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    us[i] = c.param(i);
    pts[i] = c.vertex(i);
  }
}

double cross(LiftPoint o, LiftPoint a, LiftPoint b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool segments_cross(LiftPoint a, LiftPoint b, LiftPoint c, LiftPoint d) {
  const double d1 = cross(c, d, a), d2 = cross(c, d, b);
  const double d3 = cross(a, b, c), d4 = cross(a, b, d);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

bool polylines_cross(const std::vector<LiftPoint>& p, const std::vector<LiftPoint>& q, double shift) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    for (std::size_t j = 0; j + 1 < q.size(); ++j) {
      const LiftPoint c{q[j].x + shift, q[j].y}, d{q[j + 1].x + shift, q[j + 1].y};
      if (segments_cross(p[i], p[i + 1], c, d)) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<LiftPoint> RectanglePartition::fiber_at(double u) const {
  const CurveSource src{0.0, steps, schedule.params};
  std::vector<LiftPoint> f(fiber_samples);
  for (std::size_t i = 0; i < fiber_samples; ++i) {
    const double y = -kAnnulusHalfHeight + 2.0 * kAnnulusHalfHeight * static_cast<double>(i) /
                                               static_cast<double>(fiber_samples - 1);
    f[i] = src.evaluate(u, y);
  }
  return f;
}

long RectanglePartition::index_of_param(double u) const {
  const double k = std::floor(u / loop_param);
  const double r = u - k * loop_param;
  auto it = std::upper_bound(cut_params.begin(), cut_params.end(), r);
  const long j = std::max<long>(0, static_cast<long>(it - cut_params.begin()) - 1);
  return static_cast<long>(k) * N + j;
}

double RectanglePartition::base_param(LiftPoint p) const {
  return block_forward_lift(p, schedule, depth).x;
}

std::vector<LiftPoint> RectanglePartition::boundary(int j) const {
  const double ua = cut_params[static_cast<std::size_t>(j)];
  const double ub = (j + 1 < N) ? cut_params[static_cast<std::size_t>(j + 1)] : loop_param;
  std::vector<LiftPoint> poly;
  auto piece = [&](const std::vector<double>& us, const std::vector<LiftPoint>& pts, const LiftedCurve& c,
                   std::vector<LiftPoint>& out) {
    out.push_back(c.evaluate(ua));
    auto lo = std::upper_bound(us.begin(), us.end(), ua);
    auto hi = std::lower_bound(us.begin(), us.end(), ub);
    for (auto it = lo; it < hi; ++it) out.push_back(pts[static_cast<std::size_t>(it - us.begin())]);
    out.push_back(c.evaluate(ub));
  };
  piece(lower_u, lower_pts, lower, poly);
  const auto fb = fiber_at(ub);
  poly.insert(poly.end(), fb.begin() + 1, fb.end() - 1);
  std::vector<LiftPoint> up;
  piece(upper_u, upper_pts, upper, up);
  poly.insert(poly.end(), up.rbegin(), up.rend());
  const auto fa = fiber_at(ua);
  poly.insert(poly.end(), fa.rbegin() + 1, fa.rend() - 1);
  return poly;
}

std::vector<LiftPoint> RectanglePartition::boundary_samples(int j, std::size_t max_samples) const {
  auto poly = boundary(j);
  if (poly.size() <= max_samples) return poly;
  std::vector<LiftPoint> out;
  const double stride = static_cast<double>(poly.size()) / static_cast<double>(max_samples);
  for (std::size_t i = 0; i < max_samples; ++i) out.push_back(poly[static_cast<std::size_t>(i * stride)]);
  return out;
}

RectanglePartition partition(const AnnulusLevel& level, const BlockSchedule& sched, int N,
                             std::size_t fiber_samples) {
  if (N < 4) throw Error(ErrorCode::ConfigInvalid, "a partition needs N >= 4 rectangles");
  if (!level.core.source) throw Error(ErrorCode::ConfigInvalid, "partition needs traced curves");
  RectanglePartition part;
  part.N = N;
  part.depth = level.depth;
  part.schedule = sched.prefix(level.depth);
  part.steps = level.steps;
  part.core = level.core;
  part.upper = level.upper;
  part.lower = level.lower;
  part.fiber_samples = std::max<std::size_t>(2, fiber_samples);
  part.loop_param = level.core.loop_param();
  unroll_loop(level.upper, part.upper_u, part.upper_pts);
  unroll_loop(level.lower, part.lower_u, part.lower_pts);

  std::vector<double> us;
  std::vector<LiftPoint> pts;
  unroll_loop(level.core, us, pts);
  us.push_back(level.core.params.front() + part.loop_param);
  pts.push_back(level.core.evaluate(us.back()));
  std::vector<double> arc(us.size(), 0.0);
  for (std::size_t i = 1; i < us.size(); ++i) {
    arc[i] = arc[i - 1] + std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y);
  }
  part.loop_length = arc.back();
  for (int j = 0; j < N; ++j) {
    const double s = part.loop_length * static_cast<double>(j) / static_cast<double>(N);
    auto it = std::upper_bound(arc.begin(), arc.end(), s);
    std::size_t hi = std::min<std::size_t>(static_cast<std::size_t>(it - arc.begin()), arc.size() - 1);
    std::size_t lo = hi == 0 ? 0 : hi - 1;
    const double t = arc[hi] > arc[lo] ? (s - arc[lo]) / (arc[hi] - arc[lo]) : 0.0;
    part.cut_params.push_back(us[lo] + t * (us[hi] - us[lo]));
    part.cut_arclength.push_back(s);
  }
  for (int j = 0; j < N; ++j) part.fibers.push_back(part.fiber_at(part.cut_params[static_cast<std::size_t>(j)]));

  for (int a = 0; a < N; ++a) {
    for (int b = a + 1; b < N; ++b) {
      for (double shift : {-kTwoPi, 0.0, kTwoPi}) {
        if (polylines_cross(part.fibers[static_cast<std::size_t>(a)], part.fibers[static_cast<std::size_t>(b)],
                            shift)) {
          throw Error(ErrorCode::SelfIntersectingFibers,
                      "fibers " + std::to_string(a) + " and " + std::to_string(b) + " cross");
        }
      }
    }
  }
  return part;
}

RectanglePartition partition(const AnnulusChain& chain, std::size_t k, int N, std::size_t fiber_samples) {
  return partition(chain.level(k), chain.schedule, N, fiber_samples);
}

double max_rect_diameter(const RectanglePartition& part) {
  double best = 0.0;
  for (int j = 0; j < part.N; ++j) {
    const auto samples = part.boundary_samples(j);
    best = std::max(best, kernels::max_pairwise_distance(samples));
  }
  return best;
}

}  // namespace crooked
