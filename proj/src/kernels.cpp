#include "crooked/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "crooked/annuli.hpp"

namespace crooked {

std::size_t Raster::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

LiftPoint Raster::center(std::size_t col, std::size_t row) const {
  return {box.x0 + (static_cast<double>(col) + 0.5) * (box.x1 - box.x0) / static_cast<double>(cols),
          box.y0 + (static_cast<double>(row) + 0.5) * (box.y1 - box.y0) / static_cast<double>(rows)};
}

SkewState EscapeGrid::state(std::size_t i) const {
  const std::size_t iz = i % nz;
  const std::size_t iy = (i / nz) % ny;
  const std::size_t ix = i / (nz * ny);
  const double x = 2.0 * static_cast<double>(ix) / static_cast<double>(nx);  // units of pi
  const double y = ny > 1 ? -2.0 + 4.0 * static_cast<double>(iy) / static_cast<double>(ny - 1) : 0.0;
  const std::size_t n1 = (nz + 1) / 2, n2 = nz - n1;
  double z;
  if (iz < n1) {
    z = n1 > 1 ? kI1Lo + (kI1Hi - kI1Lo) * static_cast<double>(iz) / static_cast<double>(n1 - 1) : kI1Lo;
  } else {
    const std::size_t j = iz - n1;
    z = n2 > 1 ? kI2Lo + (kI2Hi - kI2Lo) * static_cast<double>(j) / static_cast<double>(n2 - 1) : kI2Lo;
  }
  return {Angle::from_pi_units(x), y, Angle::from_pi_units(z)};
}

Raster rasterize(const BlockSchedule& sched, std::size_t k, const RasterBox& box, std::size_t cols,
                 std::size_t rows) {
  return kernels::rasterize(sched, k, box, cols, rows);
}

std::vector<EscapeRecord> escape_census(const EscapeGrid& grid, const WParams& params, std::size_t maxiter) {
  return kernels::escape_census(grid, params, maxiter);
}

double max_pairwise_distance(std::span<const LiftPoint> pts) { return kernels::max_pairwise_distance(pts); }

bool windows_wiggle_forward(std::span<const long> seq, std::size_t q, long max_range) {
  return kernels::windows_wiggle_forward(seq, q, max_range);
}

namespace kernels {

namespace {

Raster make_raster(const RasterBox& box, std::size_t cols, std::size_t rows) {
  Raster r;
  r.box = box;
  r.cols = cols;
  r.rows = rows;
  r.bits.assign(cols * rows, 0);
  return r;
}

bool wiggle_from(std::span<const long> seq, std::size_t a, long max_range,
                 std::vector<std::size_t>& first_pos) {
  const long j0 = seq[a];
  long lo = j0, hi = j0;
  long last_p1 = -1;
  first_pos.assign(1, a);
  const std::size_t end = seq.size() - 1;
  for (std::size_t b = a + 1; b <= end; ++b) {
    const long v = seq[b];
    lo = std::min(lo, v);
    if (v > hi) {
      hi = v;
      first_pos.push_back(b);  // first_pos[v - j0]
      if (hi - lo > max_range) break;
      if (v >= j0 + 3 && !(last_p1 > static_cast<long>(first_pos[static_cast<std::size_t>(v - 1 - j0)]))) {
        return false;
      }
    } else if (hi - lo > max_range) {
      break;
    }
    if (v == j0 + 1) last_p1 = static_cast<long>(b);
  }
  return true;
}

}  // namespace

Raster rasterize(const BlockSchedule& sched, std::size_t k, const RasterBox& box, std::size_t cols,
                 std::size_t rows) {
  Raster r = make_raster(box, cols, rows);
  const auto n = static_cast<std::ptrdiff_t>(cols * rows);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const LiftPoint c = r.center(idx % cols, idx / cols);
    r.bits[idx] = membership(project(c), sched, k) ? 1 : 0;
  }
  return r;
}

Raster rasterize_serial(const BlockSchedule& sched, std::size_t k, const RasterBox& box, std::size_t cols,
                        std::size_t rows) {
  Raster r = make_raster(box, cols, rows);
  for (std::size_t row = 0; row < rows; ++row) {
    for (std::size_t col = 0; col < cols; ++col) {
      r.bits[row * cols + col] = membership(project(r.center(col, row)), sched, k) ? 1 : 0;
    }
  }
  return r;
}

std::vector<EscapeRecord> escape_census(const EscapeGrid& grid, const WParams& params, std::size_t maxiter) {
  std::vector<EscapeRecord> out(grid.size());
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const SkewState s = grid.state(static_cast<std::size_t>(i));
    out[static_cast<std::size_t>(i)] = {s, escape_time(s, params, maxiter)};
  }
  return out;
}

std::vector<EscapeRecord> escape_census_serial(const EscapeGrid& grid, const WParams& params,
                                               std::size_t maxiter) {
  std::vector<EscapeRecord> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const SkewState s = grid.state(i);
    out.push_back({s, escape_time(s, params, maxiter)});
  }
  return out;
}

double max_pairwise_distance(std::span<const LiftPoint> pts) {
  double best = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
#pragma omp parallel for reduction(max : best) schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = i + 1; j < n; ++j) {
      best = std::max(best, cylinder_distance(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]));
    }
  }
  return best;
}

double max_pairwise_distance_serial(std::span<const LiftPoint> pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, cylinder_distance(pts[i], pts[j]));
  return best;
}

bool windows_wiggle_forward(std::span<const long> seq, std::size_t q, long max_range) {
  int ok = 1;
  const auto n = static_cast<std::ptrdiff_t>(std::min(q, seq.size()));
#pragma omp parallel reduction(min : ok)
  {
    std::vector<std::size_t> first_pos;
#pragma omp for schedule(dynamic, 32)
    for (std::ptrdiff_t a = 0; a < n; ++a) {
      if (ok && !wiggle_from(seq, static_cast<std::size_t>(a), max_range, first_pos)) ok = 0;
    }
  }
  return ok != 0;
}

bool windows_wiggle_forward_serial(std::span<const long> seq, std::size_t q, long max_range) {
  std::vector<std::size_t> first_pos;
  for (std::size_t a = 0; a < q && a < seq.size(); ++a) {
    if (!wiggle_from(seq, a, max_range, first_pos)) return false;
  }
  return true;
}

void apply_thread_cap_from_env() {
  if (const char* env = std::getenv("CROOKED_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(std::min(n, omp_get_max_threads()));
  }
}

}  // namespace kernels
}  // namespace crooked
