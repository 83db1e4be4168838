#include <cmath>
#include <set>

#include "doctest.h"

#include "crooked/error.hpp"
#include "crooked/symbolic.hpp"

using namespace crooked;

namespace {

const WParams kW{};

// Test-side exact arithmetic: multiples of pi, reduced into [0, 2).
PiRational red(PiRational r) {
  while (r >= 2) r -= 2;
  while (r < 0) r += 2;
  return r;
}

int sym(const PiRational& z) {
  if (z >= 0 && z <= PiRational(1, 2)) return 1;
  if (z >= 1 && z <= PiRational(3, 2)) return 2;
  return 0;
}

CodePrefix code_of_index(std::size_t idx, std::size_t d) {
  CodePrefix c;
  for (std::size_t i = 0; i < d; ++i) c.symbols.push_back(static_cast<std::uint8_t>(1 + ((idx >> (d - 1 - i)) & 1)));
  return c;
}

}  // namespace

TEST_CASE("g examples") {
  CHECK(apply_g(Angle::from_pi_units(0)).pi_units() == 0.0);
  CHECK(apply_g(Angle::from_pi_units(1)).pi_units() == 1.0);
  CHECK(apply_g(Angle::from_pi_units(0.25)).pi_units() == 0.75);
}

TEST_CASE("g itinerary examples") {
  CHECK(g_itinerary(Angle::from_pi_units(0), 5).code.str() == "11111");
  CHECK(g_itinerary(Angle::from_pi_units(1), 5).code.str() == "22222");
  const auto h = g_itinerary(Angle::from_pi_units(0.5), 4);
  CHECK(h.code.str() == "1212");
  CHECK_FALSE(h.escaped());
  const auto e = g_itinerary(Angle::from_pi_units(0.75), 4);
  CHECK(e.escaped());
  CHECK(*e.escaped_at == 0);
}

TEST_CASE("code to interval examples") {
  auto iv = code_to_interval(CodePrefix::parse("1"));
  CHECK(iv.lo == 0);
  CHECK(iv.hi == PiRational(1, 2));
  iv = code_to_interval(CodePrefix::parse("2"));
  CHECK(iv.lo == 1);
  CHECK(iv.hi == PiRational(3, 2));
  iv = code_to_interval(CodePrefix::parse("11"));
  CHECK(iv.lo == 0);
  CHECK(iv.hi == PiRational(1, 6));
  CHECK(format_pi(iv.hi) == "pi/6");
  // (1,2,1,2,...) shrinks onto pi/2.
  std::string code;
  for (int i = 0; i < 20; ++i) code += (i % 2 == 0) ? '1' : '2';
  const auto lim = code_to_interval(CodePrefix::parse(code));
  CHECK(lim.lo <= PiRational(1, 2));
  CHECK(lim.hi >= PiRational(1, 2));
  CHECK(std::abs(static_cast<double>(lim.midpoint()) - 0.5) < 1e-8);
  CHECK_THROWS_AS(CodePrefix::parse("13"), Error);
}

TEST_CASE("round trip and widths through depth 12") {
  for (std::size_t d = 1; d <= 12; ++d) {
    const PiRational width = PiRational(1, 2) / boost::multiprecision::pow(boost::multiprecision::cpp_int(3), static_cast<unsigned>(d - 1));
    for (std::size_t idx = 0; idx < (std::size_t{1} << d); ++idx) {
      const auto code = code_of_index(idx, d);
      const auto iv = code_to_interval(code);
      CHECK(iv.width() == width);
      const auto it = g_itinerary(iv.midpoint(), d);
      CHECK_FALSE(it.escaped());
      CHECK(it.code == code);
    }
  }
}

TEST_CASE("covering holds exactly") {
  const auto r = base_map_covering();
  CHECK(r.g_I1_covers);
  CHECK(r.g_I2_covers);
  CHECK(r.injective_I1);
  CHECK(r.injective_I2);
  // Independent endpoint check: g maps I_k onto the arc starting at 3 lo of
  // length 3 * 1/2 < 2 (so injective); each target lies inside that arc.
  auto arc_holds = [](const PiRational& start, const PiRational& len, const PiRational& a, const PiRational& b) {
    return red(a - start) + (b - a) <= len;
  };
  for (const PiRational lo : {PiRational(0), PiRational(1)}) {
    const PiRational start = red(3 * lo), len = 3 * PiRational(1, 2);
    CHECK(len < 2);
    CHECK(arc_holds(start, len, 0, PiRational(1, 2)));
    CHECK(arc_holds(start, len, 1, PiRational(3, 2)));
  }
}

TEST_CASE("skew product examples") {
  const SkewState o{Angle::from_pi_units(0), 0, Angle::from_pi_units(0)};
  CHECK(apply_F(o, kW) == o);
  const SkewState p0{Angle::from_pi_units(0.5), 1, Angle::from_pi_units(1)};
  CHECK(apply_F(p0, kW) == p0);
  try {
    (void)apply_F({Angle::from_pi_units(0), 0, Angle::from_pi_units(0.75)}, kW);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutsideDomain);
  }
}

TEST_CASE("escape time examples") {
  auto r = escape_time({Angle::from_pi_units(0), 3, Angle::from_pi_units(0)}, kW, 100);
  CHECK_FALSE(r.never);
  CHECK(r.step == 0);
  r = escape_time({Angle::from_pi_units(0.5), 1, Angle::from_pi_units(1)}, kW, 10000);
  CHECK(r.never);
  r = escape_time({Angle::from_pi_units(0.5), 1, Angle::from_pi_units(0)}, kW, 100);
  CHECK_FALSE(r.never);
  CHECK(r.step == 1);
}

TEST_CASE("schedule from code") {
  auto s = schedule_from_code(CodePrefix::parse("112122"));
  CHECK(s.blocks == std::vector<Block>{{2, 1}, {1, 2}});
  CHECK(schedule_from_code(CodePrefix::parse("111")).blocks == std::vector<Block>{{3, 0}});
  CHECK(schedule_from_code(CodePrefix::parse("2")).blocks == std::vector<Block>{{0, 1}});
  CHECK(schedule_from_code(CodePrefix::parse("2211")).blocks == std::vector<Block>{{0, 2}, {2, 0}});
}

TEST_CASE("slices follow the coded map sequence") {
  for (const char* code : {"112122", "2121", "1222", "21112"}) {
    const auto c = CodePrefix::parse(code);
    const auto iv = code_to_interval(c);
    const auto sched = schedule_from_code(c, kW);
    const Angle z = Angle::from_pi_units(static_cast<double>(iv.midpoint()));
    SkewState s{Angle::from_pi_units(0.3), 0.001, z};
    CylinderPoint p{s.x, s.y};
    for (std::size_t t = 0; t < c.size(); ++t) {
      s = apply_F(s, kW);
      p = c.symbols[t] == 1 ? apply_T(p) : apply_W(p, kW);
    }
    CHECK(s.x == p.x);
    CHECK(s.y == p.y);
    const CylinderPoint q = block_forward({Angle::from_pi_units(0.3), 0.001}, sched, sched.depth());
    CHECK(std::abs(circle_delta(q.x.radians(), p.x.radians())) < 1e-9);
    CHECK(std::abs(q.y - p.y) < 1e-9 * std::max(1.0, std::abs(p.y)));
  }
}

TEST_CASE("surviving points are exactly the depth-d intervals") {
  const std::size_t d = 4;
  std::vector<SymbolInterval> ivs;
  for (std::size_t idx = 0; idx < 16; ++idx) ivs.push_back(code_to_interval(code_of_index(idx, d)));
  const int den = 3 * 3 * 3 * 3 * 8 * 5;
  for (int k = 0; k < 2 * den; ++k) {
    const PiRational z(k, den);
    bool in_union = false;
    for (const auto& iv : ivs) in_union = in_union || (z >= iv.lo && z <= iv.hi);
    CHECK(g_itinerary(z, d).escaped() == !in_union);
  }
}

TEST_CASE("transitivity witnesses") {
  const auto w1 = transitivity_witness(1);
  CHECK(w1.size() == 2);
  const auto w2 = transitivity_witness(2);
  CHECK(w2.size() <= 5);
  for (const char* word : {"1", "2", "11", "12", "21", "22"}) CHECK(w2.str().find(word) != std::string::npos);
  for (std::size_t L = 1; L <= 6; ++L) {
    const auto w = transitivity_witness(L);
    std::set<std::string> words;
    for (std::size_t len = 1; len <= L; ++len)
      for (std::size_t i = 0; i + len <= w.size(); ++i) words.insert(w.str().substr(i, len));
    CHECK(words.size() == (std::size_t{2} << L) - 2);
  }
  // Midpoint orbit of the L = 2 witness, iterated exactly on the test side.
  PiRational z = code_to_interval(w2).midpoint();
  std::set<std::string> hit;
  for (std::size_t t = 0; t + 2 <= w2.size(); ++t) {
    const PiRational z1 = red(3 * z);
    hit.insert(std::string(1, char('0' + sym(z))) + char('0' + sym(z1)));
    z = z1;
  }
  CHECK(hit == std::set<std::string>{"11", "12", "21", "22"});
}
