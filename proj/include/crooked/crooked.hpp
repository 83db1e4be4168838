#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crooked/annuli.hpp"
#include "crooked/curve.hpp"

namespace crooked {

/// Lift-level rectangle indices visited by a curve, repeats collapsed and
/// consecutive entries differing by exactly one.
struct Itinerary {
  std::vector<long> indices;
  int modulus = 0;

  std::size_t size() const { return indices.size(); }
};

struct WiggleQuery {
  long j0 = 0;
  long j1 = 0;
  bool valid() const { return j1 > j0 + 2; }
};

/// Collapses repeats and fills jumps with the skipped indices.
Itinerary make_itinerary(const std::vector<long>& raw, int modulus);

/// Itinerary of `periods` periods of the curve (closing vertex included).
/// Throws AMBIGUOUS_CROSSING when a vertex sits on a cut and its neighbours
/// are not on either side of that cut.
Itinerary itinerary(const LiftedCurve& curve, const RectanglePartition& part, std::size_t periods = 1);

/// Itinerary of one closed loop of the curve.
Itinerary loop_itinerary(const LiftedCurve& curve, const RectanglePartition& part);

/// Loop itinerary of the preimage, under the partition's depth-k map, of a
/// curve drawn in A itself. Equivalent to tracing that preimage and calling
/// loop_itinerary, without the cost of the extra pullbacks.
Itinerary base_loop_itinerary(const LiftedCurve& image, const RectanglePartition& part);

bool has_wiggle(const Itinerary& it, WiggleQuery q);
bool has_wiggle(const std::vector<long>& indices, WiggleQuery q);

/// Every (j0, j1) with j1 > j0 + 2, both occurring, has a wiggle.
bool is_crooked(const Itinerary& it);
bool is_crooked(const std::vector<long>& indices);

/// Crookedness of a closed loop through an N-rectangle circular partition:
/// every stretch of the periodic itinerary whose index range fits inside a
/// proper linear subchain (range <= N - 2) is crooked. `loop` runs from e_0
/// to e_Q = e_0 + N.
bool is_crooked_loop(const Itinerary& loop, int N);

struct Reversal {
  double param;
  LiftPoint point;
};

/// Points where the x component of the traversal direction changes sign,
/// over one period. Located at vertices, then refined to the zero of dx/du
/// when the curve carries its exact source.
std::vector<Reversal> reversal_locations(const LiftedCurve& curve);
/// Reversal count over one closed loop of the cylinder.
std::size_t reversals_per_loop(const LiftedCurve& curve);

struct DepthVerdict {
  std::size_t depth = 0;  // the verdict is for depth + 1 inside depth
  int N = 0;
  Block block;
  bool crooked = false;
  std::size_t itinerary_length = 0;
  std::size_t candidates_tried = 0;
  double min_cut_spacing = 0.0;  // arc length between adjacent cuts of the depth partition
  double strip_width = 0.0;      // width of the depth + 1 strip
  double thinness_margin = 0.0;  // min_cut_spacing / strip_width
  double max_rect_diameter = 0.0;
};

struct SearchOptions {
  std::size_t budget = 200;        // candidate blocks evaluated in total
  int max_block_size = 10;         // largest m + n tried
  RefineOptions refine{1e-3, 0.2, 10'000'000};
};

struct SearchReport {
  BlockSchedule schedule;
  std::vector<DepthVerdict> verdicts;
  std::vector<double> diameters;  // max_rect_diameter of the depth-i partition, i < target
  std::size_t evaluated = 0;
};

/// Greedy depth-by-depth search; candidates in increasing m + n, then m.
/// Throws SEARCH_EXHAUSTED when the budget runs out first.
SearchReport find_crooked_blocks(std::size_t target_depth, const std::vector<int>& N_sequence,
                                 const WParams& params, const SearchOptions& opts = {});

/// Re-checks each verdict of a schedule from scratch.
std::vector<bool> verify_schedule(const BlockSchedule& sched, const std::vector<int>& N_sequence,
                                  const RefineOptions& refine = {});

/// Strip width of the depth-k annulus from exact evaluation at `samples`
/// base parameters over one loop.
double sampled_strip_width(const BlockSchedule& sched, std::size_t k, std::size_t samples = 20000);

}  // namespace crooked
