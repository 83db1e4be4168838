#include "crooked/symbolic.hpp"

#include <cmath>
#include <functional>

#include "crooked/annuli.hpp"
#include "crooked/error.hpp"

namespace crooked {

std::string CodePrefix::str() const {
  std::string s;
  s.reserve(symbols.size());
  for (auto c : symbols) s.push_back(static_cast<char>('0' + c));
  return s;
}

CodePrefix CodePrefix::parse(std::string_view s) {
  CodePrefix p;
  for (char c : s) {
    if (c != '1' && c != '2') throw Error(ErrorCode::ConfigInvalid, "codes are strings over \"12\"");
    p.symbols.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return p;
}

int symbol_of(Angle z) {
  const double t = z.pi_units();
  if (t >= kI1Lo && t <= kI1Hi) return 1;
  if (t >= kI2Lo && t <= kI2Hi) return 2;
  return 0;
}

int symbol_of(const PiRational& z) {
  if (z >= 0 && z <= PiRational(1, 2)) return 1;
  if (z >= 1 && z <= PiRational(3, 2)) return 2;
  return 0;
}

Angle apply_g(Angle z) { return Angle::from_pi_units(3.0 * z.pi_units()); }

namespace {

PiRational reduce_two(const PiRational& r) {
  using boost::multiprecision::cpp_int;
  const PiRational half = r / 2;
  cpp_int q = numerator(half) / denominator(half);
  if (numerator(half) < 0 && q * denominator(half) != numerator(half)) q -= 1;
  return r - PiRational(q) * 2;
}

PiRational g_exact(const PiRational& z) { return reduce_two(z * 3); }

}  // namespace

GItinerary g_itinerary(Angle z, std::size_t n) {
  GItinerary out;
  for (std::size_t t = 0; t < n; ++t) {
    const int s = symbol_of(z);
    if (s == 0) {
      out.escaped_at = t;
      return out;
    }
    out.code.symbols.push_back(static_cast<std::uint8_t>(s));
    z = apply_g(z);
  }
  return out;
}

GItinerary g_itinerary(const PiRational& z_pi, std::size_t n) {
  GItinerary out;
  PiRational z = reduce_two(z_pi);
  for (std::size_t t = 0; t < n; ++t) {
    const int s = symbol_of(z);
    if (s == 0) {
      out.escaped_at = t;
      return out;
    }
    out.code.symbols.push_back(static_cast<std::uint8_t>(s));
    z = g_exact(z);
  }
  return out;
}

double SymbolInterval::lo_radians() const { return static_cast<double>(lo) * kPi; }
double SymbolInterval::hi_radians() const { return static_cast<double>(hi) * kPi; }

SymbolInterval code_to_interval(const CodePrefix& prefix) {
  if (prefix.empty()) throw Error(ErrorCode::ConfigInvalid, "code prefix must be nonempty");
  auto base = [](std::uint8_t s) {
    return s == 1 ? SymbolInterval{PiRational(0), PiRational(1, 2)}
                  : SymbolInterval{PiRational(1), PiRational(3, 2)};
  };
  SymbolInterval J = base(prefix.symbols.back());
  for (std::size_t i = prefix.size() - 1; i-- > 0;) {
    // Inverse branch of z -> 3z mod 2 landing in I_{prefix[i]}.
    PiRational shift = 0;
    if (prefix.symbols[i] == 2) shift = (J.lo >= 1) ? 2 : 4;
    J = {(J.lo + shift) / 3, (J.hi + shift) / 3};
  }
  return J;
}

std::string format_pi(const PiRational& r) {
  if (r == 0) return "0";
  const auto num = numerator(r);
  const auto den = denominator(r);
  std::string s;
  if (num == -1) s = "-";
  else if (num != 1) s = num.str();
  s += "pi";
  if (den != 1) s += "/" + den.str();
  return s;
}

CoveringReport base_map_covering() {
  // g on [a, b] is z -> 3z; its image is the arc [3a, 3b]. The arc covers a
  // target interval when some 2k-translate of the target fits inside it.
  struct Iv {
    PiRational lo, hi;
  };
  const Iv I1{0, PiRational(1, 2)}, I2{1, PiRational(3, 2)};
  auto covers = [](const Iv& src, const Iv& target) {
    const PiRational a = src.lo * 3, b = src.hi * 3;
    for (int k = -2; k <= 4; ++k) {
      if (target.lo + 2 * k >= a && target.hi + 2 * k <= b) return true;
    }
    return false;
  };
  auto injective = [](const Iv& src) { return (src.hi - src.lo) * 3 < 2; };
  CoveringReport r;
  r.g_I1_covers = covers(I1, I1) && covers(I1, I2);
  r.g_I2_covers = covers(I2, I1) && covers(I2, I2);
  r.injective_I1 = injective(I1);
  r.injective_I2 = injective(I2);
  return r;
}

SkewState apply_F(const SkewState& s, const WParams& params) {
  const CylinderPoint p{s.x, s.y};
  CylinderPoint q;
  switch (symbol_of(s.z)) {
    case 1: q = apply_T(p); break;
    case 2: q = apply_W(p, params); break;
    default:
      throw Error(ErrorCode::OutsideDomain, "z = " + std::to_string(s.z.radians()) + " is outside I1 u I2");
  }
  return {q.x, q.y, apply_g(s.z)};
}

EscapeResult escape_time(const SkewState& start, const WParams& params, std::size_t maxiter) {
  SkewState s = start;
  for (std::size_t t = 0;; ++t) {
    if (!(std::abs(s.y) <= kAnnulusHalfHeight) || symbol_of(s.z) == 0) return {false, t};
    if (t == maxiter) return {true, maxiter};
    s = apply_F(s, params);
  }
}

BlockSchedule schedule_from_code(const CodePrefix& prefix, const WParams& params) {
  if (prefix.empty()) throw Error(ErrorCode::ConfigInvalid, "code prefix must be nonempty");
  BlockSchedule sched;
  sched.params = params;
  std::size_t i = 0;
  while (i < prefix.size()) {
    Block b;
    while (i < prefix.size() && prefix.symbols[i] == 1) ++b.m, ++i;
    while (i < prefix.size() && prefix.symbols[i] == 2) ++b.n, ++i;
    sched.blocks.push_back(b);
  }
  return sched;
}

CodePrefix transitivity_witness(std::size_t L) {
  if (L == 0) throw Error(ErrorCode::ConfigInvalid, "witness length must be >= 1");
  // Lyndon words of length dividing L, concatenated in lexicographic order.
  std::vector<std::uint8_t> a(L + 1, 0), seq;
  std::function<void(std::size_t, std::size_t)> db = [&](std::size_t t, std::size_t p) {
    if (t > L) {
      if (L % p == 0) seq.insert(seq.end(), a.begin() + 1, a.begin() + static_cast<std::ptrdiff_t>(p) + 1);
      return;
    }
    a[t] = a[t - p];
    db(t + 1, p);
    for (std::uint8_t j = static_cast<std::uint8_t>(a[t - p] + 1); j < 2; ++j) {
      a[t] = j;
      db(t + 1, t);
    }
  };
  db(1, 1);
  const std::vector<std::uint8_t> head(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(L - 1));
  seq.insert(seq.end(), head.begin(), head.end());
  CodePrefix w;
  for (auto s : seq) w.symbols.push_back(static_cast<std::uint8_t>(s + 1));
  return w;
}

std::vector<bool> witness_cylinders_visited(const CodePrefix& witness, std::size_t L) {
  std::vector<bool> seen(std::size_t{1} << L, false);
  if (witness.size() < L) return seen;
  PiRational z = code_to_interval(witness).midpoint();
  for (std::size_t t = 0; t + L <= witness.size(); ++t) {
    const GItinerary it = g_itinerary(z, L);
    if (!it.escaped()) {
      std::size_t idx = 0;
      for (auto s : it.code.symbols) idx = (idx << 1) | static_cast<std::size_t>(s - 1);
      seen[idx] = true;
    }
    z = g_exact(z);
  }
  return seen;
}

}  // namespace crooked
