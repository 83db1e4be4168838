#pragma once

#include <cmath>
#include <numbers>

namespace crooked {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A point of S^1 stored as a multiple of pi, reduced into [0, 2).
///
/// Dyadic multiples of pi (0, pi/2, pi, 3pi/2, ...) stay exact under the
/// doubling, tripling and shear maps, so orbits of the fixed points and
/// periodic points of T, W and g do not drift.
class Angle {
 public:
  constexpr Angle() = default;

  static Angle from_pi_units(double t) { return Angle(reduce(t)); }
  static Angle from_radians(double r) { return Angle(reduce(r / kPi)); }

  double pi_units() const { return t_; }
  double radians() const { return t_ * kPi; }

  friend bool operator==(Angle, Angle) = default;

  /// Reduce t into [0, 2).
  static double reduce(double t) {
    double r = std::fmod(t, 2.0);
    if (r < 0.0) r += 2.0;
    if (r >= 2.0) r = 0.0;
    return r;
  }

 private:
  explicit Angle(double t) : t_(t) {}
  double t_ = 0.0;
};

/// sin(pi * t), exact at multiples of 1/2.
inline double sin_pi(double t) {
  double r = std::fmod(t, 2.0);
  if (r < 0.0) r += 2.0;
  // sin(pi r) on [0, 2): fold onto [-1/2, 1/2].
  double sign = 1.0;
  if (r >= 1.0) {
    r -= 1.0;
    sign = -1.0;
  }
  if (r > 0.5) r = 1.0 - r;
  if (r == 0.0) return 0.0;
  if (r == 0.5) return sign;
  return sign * std::sin(kPi * r);
}

/// Signed shortest difference a - b on the circle of circumference 2*pi.
inline double circle_delta(double a, double b) {
  double d = std::remainder(a - b, kTwoPi);
  return d;
}

}  // namespace crooked
