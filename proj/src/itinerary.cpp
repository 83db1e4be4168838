#include <algorithm>
#include <cmath>
#include <limits>

#include "crooked/crooked.hpp"
#include "crooked/error.hpp"
#include "crooked/kernels.hpp"

namespace crooked {

Itinerary make_itinerary(const std::vector<long>& raw, int modulus) {
  Itinerary it;
  it.modulus = modulus;
  for (long v : raw) {
    if (it.indices.empty()) {
      it.indices.push_back(v);
      continue;
    }
    while (it.indices.back() != v) it.indices.push_back(it.indices.back() + (v > it.indices.back() ? 1 : -1));
  }
  return it;
}

namespace {

double cut_position(const RectanglePartition& part, long lift_index) {
  const long N = part.N;
  const long k = (lift_index >= 0) ? lift_index / N : -((-lift_index + N - 1) / N);
  const long r = lift_index - k * N;
  return static_cast<double>(k) * part.loop_param + part.cut_params[static_cast<std::size_t>(r)];
}

Itinerary from_params(const std::vector<double>& us, const RectanglePartition& part) {
  std::vector<long> raw(us.size());
  for (std::size_t i = 0; i < us.size(); ++i) raw[i] = part.index_of_param(us[i]);
  const double tol = 1e-12 * part.loop_param;
  for (std::size_t i = 0; i < us.size(); ++i) {
    const long j = raw[i];
    long side = 0;
    if (std::abs(us[i] - cut_position(part, j)) < tol) side = j;           // cut between j-1 and j
    else if (std::abs(us[i] - cut_position(part, j + 1)) < tol) side = j + 1;  // cut between j and j+1
    else continue;
    for (std::size_t nb : {i - 1, i + 1}) {
      if (nb >= us.size()) continue;  // wraps for i == 0
      if (raw[nb] != side - 1 && raw[nb] != side) {
        throw Error(ErrorCode::AmbiguousCrossing,
                    "vertex on cut " + std::to_string(side) + " has a neighbour in rectangle " +
                        std::to_string(raw[nb]));
      }
    }
  }
  return make_itinerary(raw, part.N);
}

}  // namespace

Itinerary itinerary(const LiftedCurve& curve, const RectanglePartition& part, std::size_t periods) {
  const std::size_t n = curve.size() * periods + 1;
  std::vector<double> us(n);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) us[i] = part.base_param(curve.vertex(i));
  return from_params(us, part);
}

Itinerary loop_itinerary(const LiftedCurve& curve, const RectanglePartition& part) {
  return itinerary(curve, part, curve.periods_per_loop());
}

Itinerary base_loop_itinerary(const LiftedCurve& image, const RectanglePartition& part) {
  const auto periods = static_cast<std::size_t>(std::max(1.0, std::round(part.loop_param / image.holonomy)));
  const std::size_t n = image.size() * periods + 1;
  std::vector<double> us(n);
  for (std::size_t i = 0; i < n; ++i) us[i] = image.vertex(i).x;
  return from_params(us, part);
}

namespace {

bool wiggle_one_direction(const std::vector<long>& s, WiggleQuery q) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[a] != q.j0) continue;
    bool found_c = false, found_cd = false;
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[b] == q.j1) {
        if (!found_cd) return false;
        break;
      }
      if (s[b] == q.j1 - 1) found_c = true;
      if (s[b] == q.j0 + 1 && found_c) found_cd = true;
    }
  }
  return true;
}

}  // namespace

bool has_wiggle(const std::vector<long>& indices, WiggleQuery q) {
  if (!q.valid()) throw Error(ErrorCode::ConfigInvalid, "wiggle queries need j1 > j0 + 2");
  std::vector<long> rev(indices.rbegin(), indices.rend());
  return wiggle_one_direction(indices, q) && wiggle_one_direction(rev, q);
}

bool has_wiggle(const Itinerary& it, WiggleQuery q) { return has_wiggle(it.indices, q); }

bool is_crooked(const std::vector<long>& indices) {
  if (indices.empty()) return true;
  const long unbounded = std::numeric_limits<long>::max() / 4;
  std::vector<long> rev(indices.rbegin(), indices.rend());
  return windows_wiggle_forward(indices, indices.size(), unbounded) &&
         windows_wiggle_forward(rev, rev.size(), unbounded);
}

bool is_crooked(const Itinerary& it) { return is_crooked(it.indices); }

bool is_crooked_loop(const Itinerary& loop, int N) {
  const auto& e = loop.indices;
  if (e.size() < 2 || e.back() != e.front() + N) {
    throw Error(ErrorCode::ConfigInvalid, "loop itinerary must advance by exactly N");
  }
  const std::size_t Q = e.size() - 1;
  std::vector<long> ext(2 * Q + 1);
  for (std::size_t t = 0; t <= 2 * Q; ++t) ext[t] = e[t % Q] + N * static_cast<long>(t / Q);
  std::vector<long> rev(ext.rbegin(), ext.rend());
  return windows_wiggle_forward(ext, Q, N - 2) && windows_wiggle_forward(rev, Q, N - 2);
}

namespace {

// Turning vertex i, moved to the zero of dx/du between its neighbours when
// the curve can be evaluated exactly.
Reversal refine_reversal(const LiftedCurve& curve, std::size_t i) {
  const std::size_t n = curve.size();
  Reversal r{curve.params[i], curve.vertices[i]};
  if (!curve.source) return r;
  const CurveSource& src = *curve.source;
  double lo = i == 0 ? curve.params[n - 1] - curve.period : curve.params[i - 1];
  double hi = curve.param(i + 1);
  const double h = 1e-6;
  auto slope = [&](double u) { return src.evaluate(u + h).x - src.evaluate(u - h).x; };
  const bool rising = slope(lo) > 0;
  if (rising == (slope(hi) > 0)) return r;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    ((slope(mid) > 0) == rising ? lo : hi) = mid;
  }
  double u = 0.5 * (lo + hi);
  const double p0 = curve.params.front();
  if (u < p0) u += curve.period;
  if (u >= p0 + curve.period) u -= curve.period;
  return {u, src.evaluate(u)};
}

}  // namespace

std::vector<Reversal> reversal_locations(const LiftedCurve& curve) {
  std::vector<Reversal> out;
  const std::size_t n = curve.size();
  if (n < 3) throw Error(ErrorCode::ConfigInvalid, "reversal detection needs at least 3 vertices");
  std::vector<int> sign(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = curve.vertex(i + 1).x - curve.vertex(i).x;
    sign[i] = (dx > 0) - (dx < 0);
  }
  // Start after some nonzero step so the cyclic scan sees each change once.
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (sign[i] != 0) {
      start = i;
      break;
    }
  if (start == n) return out;
  int last = sign[start];
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t i = (start + k) % n;
    if (sign[i] == 0) continue;
    if (sign[i] != last) out.push_back(refine_reversal(curve, i));
    last = sign[i];
  }
  std::sort(out.begin(), out.end(), [](const Reversal& a, const Reversal& b) { return a.param < b.param; });
  return out;
}

std::size_t reversals_per_loop(const LiftedCurve& curve) {
  return reversal_locations(curve).size() * curve.periods_per_loop();
}

}  // namespace crooked
