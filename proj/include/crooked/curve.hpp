#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crooked/maps.hpp"

namespace crooked {

/// Exact generator of a traced curve: the horizontal line y = base_y,
/// parameterized by its x coordinate u, pushed through lifted inverse steps.
struct CurveSource {
  double base_y = 0.0;
  std::vector<MapId> steps;
  WParams params;

  LiftPoint evaluate(double u) const;
  /// Same steps applied to an arbitrary base point (used for fibers).
  LiftPoint evaluate(double u, double y) const;
};

/// One period of a periodic polyline on the universal cover.
///
/// Vertex i sits at parameter params[i]; the parameters cover
/// [params.front(), params.front() + period). The continuation satisfies
/// c(u + period) = c(u) + (holonomy, 0).
struct LiftedCurve {
  std::vector<double> params;
  std::vector<LiftPoint> vertices;
  double period = kTwoPi;
  double holonomy = kTwoPi;
  std::optional<CurveSource> source;

  std::size_t size() const { return vertices.size(); }
  /// Point at an arbitrary parameter: exact when a source is attached,
  /// otherwise linear interpolation with periodic continuation.
  LiftPoint evaluate(double u) const;
  /// Number of periods making up one closed curve on the cylinder.
  std::size_t periods_per_loop() const;
  /// Parameter span of one closed curve on the cylinder.
  double loop_param() const { return period * static_cast<double>(periods_per_loop()); }
  /// Vertex i of the periodic continuation (i may exceed size()).
  LiftPoint vertex(std::size_t i) const;
  double param(std::size_t i) const;
};

struct RefineOptions {
  double tol = 1e-3;             // max segment length in cover units
  double max_turn = 0.2;         // max turning angle between segments, radians
  std::size_t budget = 10'000'000;  // vertex budget per curve
};

/// The horizontal circle y = c as a lifted curve with holonomy 2*pi.
LiftedCurve horizontal_line(double y, const WParams& params = {}, std::size_t samples = 64);

/// Lifted preimage of c under map m, refined so that adjacent vertices are
/// closer than opts.tol and consecutive segments turn by at most
/// opts.max_turn. Throws UNRESOLVED_CURVE past the vertex budget.
LiftedCurve pullback_curve(const LiftedCurve& c, MapId m, const WParams& params,
                           const RefineOptions& opts = {});

}  // namespace crooked
