#include "crooked/curve.hpp"

#include <algorithm>
#include <cmath>

#include "crooked/error.hpp"

namespace crooked {

LiftPoint CurveSource::evaluate(double u) const { return evaluate(u, base_y); }

LiftPoint CurveSource::evaluate(double u, double y) const {
  return apply_inverse_steps(steps, LiftPoint{u, y}, params);
}

LiftPoint LiftedCurve::evaluate(double u) const {
  if (source) return source->evaluate(u);
  const double p0 = params.front();
  const double k = std::floor((u - p0) / period);
  const double r = u - k * period;
  const double shift = k * holonomy;
  auto it = std::upper_bound(params.begin(), params.end(), r);
  const std::size_t hi = static_cast<std::size_t>(it - params.begin());
  const std::size_t lo = hi - 1;
  const LiftPoint a = vertices[lo];
  LiftPoint b;
  double ub;
  if (hi < params.size()) {
    b = vertices[hi];
    ub = params[hi];
  } else {
    b = {vertices.front().x + holonomy, vertices.front().y};
    ub = p0 + period;
  }
  const double t = (ub > params[lo]) ? (r - params[lo]) / (ub - params[lo]) : 0.0;
  return {a.x + t * (b.x - a.x) + shift, a.y + t * (b.y - a.y)};
}

std::size_t LiftedCurve::periods_per_loop() const {
  const double f = kTwoPi / holonomy;
  return static_cast<std::size_t>(std::max(1.0, std::round(f)));
}

LiftPoint LiftedCurve::vertex(std::size_t i) const {
  const std::size_t n = vertices.size();
  const LiftPoint v = vertices[i % n];
  return {v.x + static_cast<double>(i / n) * holonomy, v.y};
}

double LiftedCurve::param(std::size_t i) const {
  const std::size_t n = params.size();
  return params[i % n] + static_cast<double>(i / n) * period;
}

LiftedCurve horizontal_line(double y, const WParams& params, std::size_t samples) {
  LiftedCurve c;
  c.period = kTwoPi;
  c.holonomy = kTwoPi;
  c.source = CurveSource{y, {}, params};
  c.params.reserve(samples);
  c.vertices.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double u = kTwoPi * static_cast<double>(i) / static_cast<double>(samples);
    c.params.push_back(u);
    c.vertices.push_back({u, y});
  }
  return c;
}

namespace {

struct Sample {
  double u;
  LiftPoint p;
};

double seg_len(const LiftPoint& a, const LiftPoint& b) { return std::hypot(b.x - a.x, b.y - a.y); }

double turn_angle(const LiftPoint& a, const LiftPoint& b, const LiftPoint& c) {
  const double x1 = b.x - a.x, y1 = b.y - a.y;
  const double x2 = c.x - b.x, y2 = c.y - b.y;
  return std::abs(std::atan2(x1 * y2 - y1 * x2, x1 * x2 + y1 * y2));
}

bool is_multiple_of_two_pi(double h) {
  const double k = std::round(h / kTwoPi);
  return k >= 1.0 && std::abs(h - k * kTwoPi) <= 1e-12 * h;
}

}  // namespace

LiftedCurve pullback_curve(const LiftedCurve& c, MapId m, const WParams& params, const RefineOptions& opts) {
  if (!(c.holonomy > 0.0) || c.vertices.empty()) {
    throw Error(ErrorCode::ConfigInvalid, "pullback needs a nonempty curve with nonzero holonomy");
  }

  LiftedCurve out;
  std::size_t copies = 1;
  out.period = c.period;
  out.holonomy = c.holonomy;
  switch (m) {
    case MapId::T:
      out.holonomy = 0.5 * c.holonomy;
      break;
    case MapId::Sigma:
      break;
    case MapId::S:
    case MapId::W:
      // s^{-1} commutes only with deck shifts by 2*pi: unroll to a full loop first.
      if (!is_multiple_of_two_pi(c.holonomy)) {
        copies = c.periods_per_loop();
        out.period = c.period * static_cast<double>(copies);
        out.holonomy = c.holonomy * static_cast<double>(copies);
      }
      break;
  }
  if (c.source) {
    CurveSource src = *c.source;
    src.params = params;
    src.steps.push_back(m);
    out.source = std::move(src);
  }

  auto eval = [&](double u) -> LiftPoint {
    if (out.source) return out.source->evaluate(u);
    return lift_inverse_step(m, c.evaluate(u), params);
  };

  if (c.size() * copies > opts.budget) {
    throw Error(ErrorCode::UnresolvedCurve,
                "unrolled curve exceeds the vertex budget of " + std::to_string(opts.budget));
  }
  const double p0 = c.params.front();
  const double p_end = p0 + out.period;
  std::vector<Sample> pts(c.size() * copies + 1);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < c.size() * copies; ++i) {
    const double u = c.param(i);
    pts[i] = {u, eval(u)};
  }
  pts.back() = {p_end, eval(p_end)};

  const double min_len = opts.tol * 1e-6;
  std::vector<char> split;
  std::vector<Sample> mids;
  std::vector<Sample> next;
  for (;;) {
    const std::size_t n = pts.size();  // closed: pts.back() is pts.front() shifted by the holonomy
    split.assign(n - 1, 0);
    auto vertex_at = [&](std::ptrdiff_t i) -> LiftPoint {
      if (i < 0) {
        const LiftPoint v = pts[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(n - 1) + i)].p;
        return {v.x - out.holonomy, v.y};
      }
      if (i >= static_cast<std::ptrdiff_t>(n)) {
        const LiftPoint v = pts[static_cast<std::size_t>(i - static_cast<std::ptrdiff_t>(n) + 1)].p;
        return {v.x + out.holonomy, v.y};
      }
      return pts[static_cast<std::size_t>(i)].p;
    };
    std::size_t count = 0;
    const std::size_t nseg = n - 1;
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (std::size_t i = 0; i < nseg; ++i) {
      const double du = pts[i + 1].u - pts[i].u;
      if (!(du > 1e-13 * std::max(1.0, std::abs(pts[i].u)))) continue;
      const LiftPoint a = pts[i].p, b = pts[i + 1].p;
      const double len = seg_len(a, b);
      bool need = len > opts.tol;
      if (!need && len > min_len) {
        const auto ii = static_cast<std::ptrdiff_t>(i);
        const LiftPoint prev = vertex_at(ii - 1), next_p = vertex_at(ii + 2);
        if ((seg_len(prev, a) > min_len && turn_angle(prev, a, b) > opts.max_turn) ||
            (seg_len(b, next_p) > min_len && turn_angle(a, b, next_p) > opts.max_turn)) {
          need = true;
        }
      }
      if (need) {
        split[i] = 1;
        ++count;
      }
    }
    if (count == 0) break;
    if (n + count > opts.budget) {
      throw Error(ErrorCode::UnresolvedCurve,
                  "refinement exceeds the vertex budget of " + std::to_string(opts.budget));
    }
    std::vector<std::size_t> where;
    where.reserve(count);
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (split[i]) where.push_back(i);
    mids.resize(count);
#pragma omp parallel for schedule(static)
    for (std::size_t j = 0; j < count; ++j) {
      const std::size_t i = where[j];
      const double u = 0.5 * (pts[i].u + pts[i + 1].u);
      mids[j] = {u, eval(u)};
    }
    next.clear();
    next.reserve(n + count);
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
      next.push_back(pts[i]);
      if (i + 1 < n && split[i]) next.push_back(mids[j++]);
    }
    pts.swap(next);
  }

  pts.pop_back();
  out.params.reserve(pts.size());
  out.vertices.reserve(pts.size());
  for (const auto& s : pts) {
    out.params.push_back(s.u);
    out.vertices.push_back(s.p);
  }
  return out;
}

}  // namespace crooked
