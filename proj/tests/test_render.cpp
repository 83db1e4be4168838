#include <random>
#include <regex>
#include <string>

#include "doctest.h"

#include "crooked/error.hpp"
#include "crooked/render.hpp"

using namespace crooked;
using namespace crooked::render;

namespace {

std::size_t count_of(const std::string& doc, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = doc.find(needle); p != std::string::npos; p = doc.find(needle, p + 1)) ++n;
  return n;
}

std::vector<double> first_xs(const std::string& doc) {
  std::vector<double> out;
  const std::regex re("points=\"([-0-9.]+),");
  for (auto it = std::sregex_iterator(doc.begin(), doc.end(), re); it != std::sregex_iterator(); ++it)
    out.push_back(std::stod((*it)[1]));
  return out;
}

}  // namespace

TEST_CASE("one constant curve gives one polyline per unroll copy") {
  FigureSpec spec;
  spec.viewport = {0, 3 * kTwoPi, -1, 1};
  spec.layers.push_back({"line", {}, CurveLayer{horizontal_line(0.0)}});
  CHECK(count_of(render_figure(spec), "<polyline") == 1);

  spec.unroll = 3;
  const auto doc = render_figure(spec);
  CHECK(count_of(doc, "<polyline") == 3);
  const auto xs = first_xs(doc);
  REQUIRE(xs.size() == 3);
  const double step = 1200.0 / 3;  // holonomy 2 pi on a 6 pi wide viewport
  CHECK(xs[1] - xs[0] == doctest::Approx(step).epsilon(1e-4));
  CHECK(xs[2] - xs[1] == doctest::Approx(step).epsilon(1e-4));
}

TEST_CASE("raster cells") {
  Raster r;
  r.cols = r.rows = 10;
  r.bits.assign(100, 0);
  std::mt19937_64 rng(3);
  std::size_t set = 0;
  while (set < 50) {
    auto& b = r.bits[rng() % 100];
    if (!b) {
      b = 1;
      ++set;
    }
  }
  FigureSpec spec;
  spec.layers.push_back({"cells", {}, RasterLayer{r}});
  CHECK(count_of(render_figure(spec), "class=\"cell\"") == r.count());
}

TEST_CASE("itinerary step plot and partition fibers") {
  FigureSpec spec;
  spec.layers.push_back({"it", {}, ItineraryLayer{make_itinerary({0, 1, 2, 1, 2, 3}, 4)}});
  spec.layers.push_back({"fib", {}, PartitionLayer{{{{0, -2}, {0, 2}}, {{1, -2}, {1, 2}}}, kTwoPi}});
  spec.unroll = 2;
  CHECK(count_of(render_figure(spec), "<polyline") == 1 + 2 * 2);
}

TEST_CASE("empty layers and bad specs are rejected") {
  FigureSpec spec;
  spec.layers.push_back({"nothing", {}, CurveLayer{}});
  try {
    (void)render_figure(spec);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyLayer);
  }
  FigureSpec bad;
  bad.viewport = {1, 1, 0, 1};
  CHECK_THROWS_AS(render_figure(bad), Error);
  FigureSpec zero;
  zero.unroll = 0;
  CHECK_THROWS_AS(render_figure(zero), Error);
}

TEST_CASE("rendering is deterministic and leaves inputs alone") {
  FigureSpec spec;
  const auto core = pullback_curve(horizontal_line(0.0), MapId::W, {});
  spec.layers.push_back({"core", {}, CurveLayer{core}});
  const FigureSpec copy = spec;
  const auto a = render_figure(spec);
  CHECK(a == render_figure(spec));
  const auto& c = std::get<CurveLayer>(spec.layers[0].data).curve;
  CHECK(c.vertices == std::get<CurveLayer>(copy.layers[0].data).curve.vertices);
  // A later layer does not change the bytes of the shared one.
  spec.layers.push_back({"line", {}, CurveLayer{horizontal_line(1.0)}});
  const auto b = render_figure(spec);
  const auto layer = a.substr(a.find("<g id=\"core\""), a.find("</g>") - a.find("<g id=\"core\""));
  CHECK(b.find(layer) != std::string::npos);
}

TEST_CASE("viewport transform round trip") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> U(-50, 50);
  for (bool eq : {false, true}) {
    const Transform tf({-3, 40, -0.01, 0.02}, 1200, 600, eq);
    for (int i = 0; i < 1000; ++i) {
      const LiftPoint p{U(rng), U(rng) * 1e-3};
      const LiftPoint q = tf.from_canvas(tf.to_canvas(p));
      CHECK(std::abs(q.x - p.x) <= 1e-9);
      CHECK(std::abs(q.y - p.y) <= 1e-9);
    }
  }
  const Transform tf({0, 1, 0, 1}, 1200, 600, false);
  CHECK(tf.to_canvas({0, 0}).y == doctest::Approx(600));
  CHECK(tf.to_canvas({1, 1}).x == doctest::Approx(1200));
}

TEST_CASE("figure filenames carry hash and depth") {
  const BlockSchedule s{{{0, 1}, {4, 3}}, {}};
  CHECK(figure_filename("curves", s.hash(), 2) == "curves_" + s.hash() + "_d2.svg");
}
