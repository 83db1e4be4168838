#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial twin with the same
// contract; tests hold them equal and the benchmark compares their speed.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "crooked/maps.hpp"
#include "crooked/symbolic.hpp"

namespace crooked {

struct RasterBox {
  double x0 = 0.0, x1 = kTwoPi;
  double y0 = -4.0, y1 = 4.0;
};

/// Membership bits at cell centers; row 0 is the bottom row (y near y0).
struct Raster {
  RasterBox box;
  std::size_t cols = 0, rows = 0;
  std::vector<std::uint8_t> bits;

  bool at(std::size_t col, std::size_t row) const { return bits[row * cols + col] != 0; }
  std::size_t count() const;
  double fraction() const { return bits.empty() ? 0.0 : static_cast<double>(count()) / static_cast<double>(bits.size()); }
  LiftPoint center(std::size_t col, std::size_t row) const;
};

Raster rasterize(const BlockSchedule& sched, std::size_t k, const RasterBox& box, std::size_t cols, std::size_t rows);

/// Grid over S^1 x [-2, 2] x (I_1 u I_2): x at 2*pi*i/nx, y evenly from -2
/// to 2 inclusive, z split evenly between I_1 and I_2 with endpoints.
struct EscapeGrid {
  std::size_t nx = 50, ny = 50, nz = 40;

  std::size_t size() const { return nx * ny * nz; }
  SkewState state(std::size_t i) const;
};

struct EscapeRecord {
  SkewState state;
  EscapeResult result;
};

std::vector<EscapeRecord> escape_census(const EscapeGrid& grid, const WParams& params, std::size_t maxiter);

/// Largest cylinder distance between two of the points.
double max_pairwise_distance(std::span<const LiftPoint> pts);

/// True when every (a, b) pair of the periodic sequence (period q, index
/// shift per period = seq[q] - seq[0]) whose connecting stretch has range at
/// most max_range satisfies the forward wiggle condition. seq holds 2q + 1
/// entries.
bool windows_wiggle_forward(std::span<const long> seq, std::size_t q, long max_range);

namespace kernels {

Raster rasterize(const BlockSchedule& sched, std::size_t k, const RasterBox& box, std::size_t cols, std::size_t rows);
Raster rasterize_serial(const BlockSchedule& sched, std::size_t k, const RasterBox& box, std::size_t cols,
                        std::size_t rows);

std::vector<EscapeRecord> escape_census(const EscapeGrid& grid, const WParams& params, std::size_t maxiter);
std::vector<EscapeRecord> escape_census_serial(const EscapeGrid& grid, const WParams& params, std::size_t maxiter);

double max_pairwise_distance(std::span<const LiftPoint> pts);
double max_pairwise_distance_serial(std::span<const LiftPoint> pts);

bool windows_wiggle_forward(std::span<const long> seq, std::size_t q, long max_range);
bool windows_wiggle_forward_serial(std::span<const long> seq, std::size_t q, long max_range);

/// Thread cap from CROOKED_THREADS, applied to the OpenMP runtime.
void apply_thread_cap_from_env();

}  // namespace kernels
}  // namespace crooked
