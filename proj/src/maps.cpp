#include "crooked/maps.hpp"

#include <cmath>
#include <cstdio>

#include "crooked/error.hpp"

namespace crooked {

CylinderPoint project(LiftPoint q) { return {Angle::from_radians(q.x), q.y}; }

void WParams::validate() const {
  if (!(M >= 512.0) || !std::isfinite(M)) {
    throw Error(ErrorCode::ConfigInvalid, "M must be a finite value >= 512");
  }
}

void BlockSchedule::validate() const {
  params.validate();
  if (blocks.empty()) throw Error(ErrorCode::ConfigInvalid, "block schedule is empty");
  for (const auto& b : blocks) {
    if (b.m < 0 || b.n < 0 || b.m + b.n < 1) {
      throw Error(ErrorCode::ConfigInvalid, "every block needs m, n >= 0 and m + n >= 1");
    }
  }
}

BlockSchedule BlockSchedule::prefix(std::size_t k) const {
  BlockSchedule out;
  out.params = params;
  out.blocks.assign(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(std::min(k, blocks.size())));
  return out;
}

std::string BlockSchedule::canonical() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "M=%.17g", params.M);
  std::string s = buf;
  for (const auto& b : blocks) s += ";" + std::to_string(b.m) + "," + std::to_string(b.n);
  return s;
}

std::string BlockSchedule::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t BlockSchedule::total_T(std::size_t k) const {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < k && i < blocks.size(); ++i) t += static_cast<std::uint64_t>(blocks[i].m);
  return t;
}

std::string to_string(MapId m) {
  switch (m) {
    case MapId::T: return "T";
    case MapId::S: return "S";
    case MapId::Sigma: return "SIGMA";
    case MapId::W: return "W";
  }
  return "?";
}

CylinderPoint apply_T(CylinderPoint p) {
  return {Angle::from_pi_units(2.0 * p.x.pi_units()), 8.0 * p.y};
}

CylinderPoint apply_s(CylinderPoint p, const WParams& params) {
  const double M = params.M;
  return {p.x, M * p.y - (M - 1.0) * sin_pi(p.x.pi_units())};
}

// 2*pi*y radians is 2*y in units of pi.
CylinderPoint apply_sigma(CylinderPoint p) {
  return {Angle::from_pi_units(p.x.pi_units() - 2.0 * p.y), p.y};
}

CylinderPoint apply_W(CylinderPoint p, const WParams& params) { return apply_s(apply_sigma(p), params); }

CylinderPoint apply_W_inverse(CylinderPoint p, const WParams& params) {
  const double M = params.M;
  const double y = (p.y + (M - 1.0) * sin_pi(p.x.pi_units())) / M;
  return {Angle::from_pi_units(p.x.pi_units() + 2.0 * y), y};
}

CylinderPoint apply(MapId m, CylinderPoint p, const WParams& params) {
  switch (m) {
    case MapId::T: return apply_T(p);
    case MapId::S: return apply_s(p, params);
    case MapId::Sigma: return apply_sigma(p);
    case MapId::W: return apply_W(p, params);
  }
  return p;
}

LiftPoint lift_forward_step(MapId m, LiftPoint q, const WParams& params) {
  const double M = params.M;
  switch (m) {
    case MapId::T: return {2.0 * q.x, 8.0 * q.y};
    case MapId::S: return {q.x, M * q.y - (M - 1.0) * std::sin(q.x)};
    case MapId::Sigma: return {q.x - kTwoPi * q.y, q.y};
    case MapId::W: {
      const double x = q.x - kTwoPi * q.y;
      return {x, M * q.y - (M - 1.0) * std::sin(x)};
    }
  }
  return q;
}

LiftPoint lift_inverse_step(MapId m, LiftPoint q, const WParams& params) {
  const double M = params.M;
  switch (m) {
    case MapId::T: return {0.5 * q.x, q.y / 8.0};
    case MapId::S: return {q.x, (q.y + (M - 1.0) * std::sin(q.x)) / M};
    case MapId::Sigma: return {q.x + kTwoPi * q.y, q.y};
    case MapId::W: {
      const double y = (q.y + (M - 1.0) * std::sin(q.x)) / M;
      return {q.x + kTwoPi * y, y};
    }
  }
  return q;
}

CylinderPoint block_forward(CylinderPoint p, const BlockSchedule& sched, std::size_t k) {
  for (std::size_t i = 0; i < k && i < sched.blocks.size(); ++i) {
    const Block& b = sched.blocks[i];
    for (int j = 0; j < b.m; ++j) p = apply_T(p);
    for (int j = 0; j < b.n; ++j) p = apply_W(p, sched.params);
  }
  return p;
}

LiftPoint block_forward_lift(LiftPoint q, const BlockSchedule& sched, std::size_t k) {
  for (std::size_t i = 0; i < k && i < sched.blocks.size(); ++i) {
    const Block& b = sched.blocks[i];
    for (int j = 0; j < b.m; ++j) q = lift_forward_step(MapId::T, q, sched.params);
    for (int j = 0; j < b.n; ++j) q = lift_forward_step(MapId::W, q, sched.params);
  }
  return q;
}

std::vector<MapId> inverse_steps(const BlockSchedule& sched, std::size_t k) {
  std::vector<MapId> steps;
  k = std::min(k, sched.blocks.size());
  for (std::size_t i = k; i-- > 0;) {
    const Block& b = sched.blocks[i];
    steps.insert(steps.end(), static_cast<std::size_t>(b.n), MapId::W);
    steps.insert(steps.end(), static_cast<std::size_t>(b.m), MapId::T);
  }
  return steps;
}

LiftPoint apply_inverse_steps(std::span<const MapId> steps, LiftPoint q, const WParams& params) {
  for (MapId m : steps) q = lift_inverse_step(m, q, params);
  return q;
}

}  // namespace crooked
