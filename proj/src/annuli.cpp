#include "crooked/annuli.hpp"

#include <cmath>

#include "crooked/error.hpp"

namespace crooked {

bool membership(CylinderPoint p, const BlockSchedule& sched, std::size_t k, double slack) {
  const CylinderPoint q = block_forward(p, sched, k);
  return std::abs(q.y) <= kAnnulusHalfHeight + slack;
}

LiftedCurve trace_curve(const BlockSchedule& sched, std::size_t k, double base_y, const RefineOptions& opts) {
  LiftedCurve c = horizontal_line(base_y, sched.params);
  for (MapId m : inverse_steps(sched, k)) c = pullback_curve(c, m, sched.params, opts);
  return c;
}

AnnulusLevel trace_level(const BlockSchedule& sched, std::size_t k, const RefineOptions& opts) {
  if (k > sched.depth()) throw Error(ErrorCode::ConfigInvalid, "depth exceeds schedule length");
  AnnulusLevel lv;
  lv.depth = k;
  lv.steps = inverse_steps(sched, k);
  lv.upper = trace_curve(sched, k, kAnnulusHalfHeight, opts);
  lv.lower = trace_curve(sched, k, -kAnnulusHalfHeight, opts);
  lv.core = trace_curve(sched, k, 0.0, opts);
  return lv;
}

AnnulusChain trace_chain(const BlockSchedule& sched, std::size_t k, const RefineOptions& opts) {
  sched.validate();
  if (k > sched.depth()) throw Error(ErrorCode::ConfigInvalid, "depth exceeds schedule length");
  AnnulusChain chain;
  chain.schedule = sched;
  for (std::size_t d = 0; d <= k; ++d) chain.levels.push_back(trace_level(sched, d, opts));
  return chain;
}

double cylinder_distance(LiftPoint a, LiftPoint b) {
  return std::hypot(circle_delta(a.x, b.x), a.y - b.y);
}

double strip_width(const AnnulusLevel& level) {
  // Both boundaries are parameterized by the same base coordinate.
  double w = 0.0;
  const auto& src_u = level.upper;
  for (std::size_t i = 0; i < src_u.size(); ++i) {
    const double u = src_u.params[i];
    const LiftPoint a = src_u.vertices[i];
    const LiftPoint b = level.lower.evaluate(u);
    w = std::max(w, std::hypot(a.x - b.x, a.y - b.y));
  }
  return w;
}

}  // namespace crooked
