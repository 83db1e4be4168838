#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crooked/angle.hpp"
#include "crooked/maps.hpp"

namespace crooked {

/// Exact rational multiple of pi.
using PiRational = boost::multiprecision::cpp_rational;

/// Finite word over {1, 2}; symbol k means "in I_k".
struct CodePrefix {
  std::vector<std::uint8_t> symbols;

  std::size_t size() const { return symbols.size(); }
  bool empty() const { return symbols.empty(); }
  std::string str() const;
  /// Parses a string over "12"; throws CONFIG_INVALID otherwise.
  static CodePrefix parse(std::string_view s);
  friend bool operator==(const CodePrefix&, const CodePrefix&) = default;
};

// I_1 = [0, pi/2], I_2 = [pi, 3pi/2], in units of pi.
inline constexpr double kI1Lo = 0.0, kI1Hi = 0.5, kI2Lo = 1.0, kI2Hi = 1.5;

/// 1 or 2 for points of I_1 or I_2 (closed), 0 otherwise.
int symbol_of(Angle z);
int symbol_of(const PiRational& z_pi);

Angle apply_g(Angle z);

struct GItinerary {
  CodePrefix code;                       // symbols seen before escaping
  std::optional<std::size_t> escaped_at;  // first t with g^t(z) outside I_1 u I_2

  bool escaped() const { return escaped_at.has_value(); }
};

GItinerary g_itinerary(Angle z, std::size_t n);
/// Same, iterating in exact rational arithmetic (z in units of pi).
GItinerary g_itinerary(const PiRational& z_pi, std::size_t n);

/// Closed interval of points whose first len(prefix) symbols are prefix.
struct SymbolInterval {
  PiRational lo, hi;  // units of pi

  PiRational width() const { return hi - lo; }
  PiRational midpoint() const { return (lo + hi) / 2; }
  double lo_radians() const;
  double hi_radians() const;
};

SymbolInterval code_to_interval(const CodePrefix& prefix);

/// "0", "pi", "pi/6", "3pi/2", ...
std::string format_pi(const PiRational& r);

/// Exact check that g maps each of I_1, I_2 injectively over I_1 u I_2.
struct CoveringReport {
  bool g_I1_covers = false;
  bool g_I2_covers = false;
  bool injective_I1 = false;
  bool injective_I2 = false;

  bool ok() const { return g_I1_covers && g_I2_covers && injective_I1 && injective_I2; }
};

CoveringReport base_map_covering();

struct SkewState {
  Angle x;
  double y = 0.0;
  Angle z;
  friend bool operator==(const SkewState&, const SkewState&) = default;
};

/// (T(x,y), g(z)) for z in I_1, (W(x,y), g(z)) for z in I_2;
/// throws OUTSIDE_DOMAIN elsewhere.
SkewState apply_F(const SkewState& s, const WParams& params);

struct EscapeResult {
  bool never = false;      // stayed inside for steps 0..maxiter
  std::size_t step = 0;    // escape step, or maxiter when never
};

/// First t <= maxiter with |y_t| > 2 or z_t outside I_1 u I_2.
EscapeResult escape_time(const SkewState& s, const WParams& params, std::size_t maxiter);

/// Run-length grouping of 1-runs (T) and following 2-runs (W) into blocks.
BlockSchedule schedule_from_code(const CodePrefix& prefix, const WParams& params = {});

/// Word containing every {1,2}-word of length <= L (a de Bruijn sequence).
CodePrefix transitivity_witness(std::size_t L);

/// Depth-L cylinders visited by the orbit of the witness interval midpoint,
/// computed exactly. Returns a bitmask indexed by the word read as binary.
std::vector<bool> witness_cylinders_visited(const CodePrefix& witness, std::size_t L);

}  // namespace crooked
