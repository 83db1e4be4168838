#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "crooked/angle.hpp"

namespace crooked {

/// A point of the cylinder S^1 x R.
struct CylinderPoint {
  Angle x;
  double y = 0.0;

  static CylinderPoint radians(double x, double y) { return {Angle::from_radians(x), y}; }
  friend bool operator==(const CylinderPoint&, const CylinderPoint&) = default;
};

/// A point of the universal cover R^2; x is in radians and never reduced.
struct LiftPoint {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const LiftPoint&, const LiftPoint&) = default;
};

CylinderPoint project(LiftPoint q);

struct WParams {
  double M = 512.0;

  /// Throws CONFIG_INVALID unless M >= 512.
  void validate() const;
};

struct Block {
  int m = 0;  // T applications
  int n = 0;  // W applications
  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockSchedule {
  std::vector<Block> blocks;
  WParams params;

  void validate() const;
  std::size_t depth() const { return blocks.size(); }
  /// Schedule restricted to its first k blocks.
  BlockSchedule prefix(std::size_t k) const;
  /// Canonical text form, e.g. "M=512;1,1;3,1".
  std::string canonical() const;
  /// 16 hex digits of FNV-1a over canonical().
  std::string hash() const;
  std::uint64_t total_T(std::size_t k) const;
};

enum class MapId { T, S, Sigma, W };

std::string to_string(MapId m);

// Cylinder maps.
CylinderPoint apply_T(CylinderPoint p);
CylinderPoint apply_s(CylinderPoint p, const WParams& params);
CylinderPoint apply_sigma(CylinderPoint p);
CylinderPoint apply_W(CylinderPoint p, const WParams& params);
CylinderPoint apply_W_inverse(CylinderPoint p, const WParams& params);
CylinderPoint apply(MapId m, CylinderPoint p, const WParams& params);

// Lifted maps on the cover (no modular arithmetic).
LiftPoint lift_forward_step(MapId m, LiftPoint q, const WParams& params);
LiftPoint lift_inverse_step(MapId m, LiftPoint q, const WParams& params);

/// (f_k o ... o f_1)(p), where f_i = W^{n_i} o T^{m_i}.
CylinderPoint block_forward(CylinderPoint p, const BlockSchedule& sched, std::size_t k);
/// Same composition using the lifted maps.
LiftPoint block_forward_lift(LiftPoint q, const BlockSchedule& sched, std::size_t k);

/// The lifted inverse steps whose composition is (f_k o ... o f_1)^{-1},
/// listed in the order they are applied to a point: W^{-1} steps of block k
/// first, then its T^{-1} steps, then block k-1, down to block 1.
std::vector<MapId> inverse_steps(const BlockSchedule& sched, std::size_t k);

LiftPoint apply_inverse_steps(std::span<const MapId> steps, LiftPoint q, const WParams& params);

}  // namespace crooked
