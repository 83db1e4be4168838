#pragma once

#include <cstddef>
#include <vector>

#include "crooked/curve.hpp"
#include "crooked/maps.hpp"

namespace crooked {

/// Half-height of the reference annulus A = S^1 x [-2, 2].
inline constexpr double kAnnulusHalfHeight = 2.0;

/// True iff |y| of block_forward(p, sched, k) is at most 2 + slack.
/// k = 0 tests A itself.
bool membership(CylinderPoint p, const BlockSchedule& sched, std::size_t k, double slack = 0.0);

/// Boundary and core curves of the depth-k annulus (f_k o ... o f_1)^{-1}(A).
struct AnnulusLevel {
  std::size_t depth = 0;
  std::vector<MapId> steps;
  LiftedCurve upper;  // preimage of y = +2
  LiftedCurve lower;  // preimage of y = -2
  LiftedCurve core;   // preimage of y = 0
};

struct AnnulusChain {
  BlockSchedule schedule;
  std::vector<AnnulusLevel> levels;  // levels[k] is depth k, k = 0 .. depth

  const AnnulusLevel& level(std::size_t k) const { return levels.at(k); }
  std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
};

/// Preimage of the horizontal line y = base_y under the depth-k composition.
LiftedCurve trace_curve(const BlockSchedule& sched, std::size_t k, double base_y, const RefineOptions& opts = {});

AnnulusLevel trace_level(const BlockSchedule& sched, std::size_t k, const RefineOptions& opts = {});

/// Curves for every depth 0..k. Throws UNRESOLVED_CURVE from refinement.
AnnulusChain trace_chain(const BlockSchedule& sched, std::size_t k, const RefineOptions& opts = {});

/// Decomposition of the depth-k annulus into N cyclically adjacent rectangles.
///
/// Cuts sit at equal arc length along one closed loop of the core, starting
/// at the core point with parameter 0. Each fiber is the preimage of a
/// vertical segment {u} x [-2, 2] of A, so fibers never cross and every
/// annulus point has a well defined base parameter u: the x coordinate of
/// its lifted forward image. Rectangle j on the cover holds the points whose
/// u lies in [cut_params[j], cut_params[j + 1]], extended periodically with
/// index shift N per loop.
struct RectanglePartition {
  int N = 0;
  std::size_t depth = 0;
  BlockSchedule schedule;
  std::vector<MapId> steps;
  double loop_param = kTwoPi;
  double loop_length = 0.0;
  std::vector<double> cut_params;
  std::vector<double> cut_arclength;
  std::vector<std::vector<LiftPoint>> fibers;  // fibers[j] from lower (y=-2) to upper (y=+2)
  LiftedCurve core, upper, lower;
  // One closed loop of each boundary, sorted by base parameter.
  std::vector<double> upper_u, lower_u;
  std::vector<LiftPoint> upper_pts, lower_pts;
  std::size_t fiber_samples = 33;

  /// Sampled fiber over base parameter u, from y = -2 to y = +2.
  std::vector<LiftPoint> fiber_at(double u) const;

  /// Lift-level index of the rectangle containing base parameter u.
  long index_of_param(double u) const;
  /// Base parameter of a cover point of the annulus (lifted forward image x).
  double base_param(LiftPoint p) const;
  long index_of_point(LiftPoint p) const { return index_of_param(base_param(p)); }

  /// Closed boundary polygon of rectangle j (j in 0..N-1) on the cover.
  std::vector<LiftPoint> boundary(int j) const;
  /// Boundary samples of rectangle j, decimated to at most max_samples.
  std::vector<LiftPoint> boundary_samples(int j, std::size_t max_samples = 4096) const;
};

/// Throws CONFIG_INVALID for N < 4 and SELF_INTERSECTING_FIBERS when two
/// sampled fibers cross.
RectanglePartition partition(const AnnulusChain& chain, std::size_t k, int N, std::size_t fiber_samples = 33);
RectanglePartition partition(const AnnulusLevel& level, const BlockSchedule& sched, int N,
                             std::size_t fiber_samples = 33);

/// Max over rectangles of the largest pairwise cylinder distance between
/// boundary samples.
double max_rect_diameter(const RectanglePartition& part);

/// Distance on the cylinder: Euclidean after the best deck shift.
double cylinder_distance(LiftPoint a, LiftPoint b);

/// Max over vertices of |upper(u) - lower(u)|: how wide the strip gets.
double strip_width(const AnnulusLevel& level);

}  // namespace crooked
