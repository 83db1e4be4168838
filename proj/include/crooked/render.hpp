#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "crooked/annuli.hpp"
#include "crooked/crooked.hpp"
#include "crooked/curve.hpp"
#include "crooked/kernels.hpp"

namespace crooked::render {

struct Viewport {
  double x0 = 0.0, x1 = kTwoPi;
  double y0 = -4.0, y1 = 4.0;
  bool empty() const { return !(x1 > x0) || !(y1 > y0); }
};

struct Style {
  std::string stroke = "#1f3a93";
  std::string fill = "none";
  double width = 1.0;
};

struct CurveLayer {
  LiftedCurve curve;
};

struct RasterLayer {
  Raster raster;
};

/// Fiber polylines; copies are shifted by `shift` in x per unroll.
struct PartitionLayer {
  std::vector<std::vector<LiftPoint>> fibers;
  double shift = kTwoPi;
};

/// Step plot of rectangle index against position, stretched over the viewport.
struct ItineraryLayer {
  Itinerary itinerary;
};

struct Layer {
  std::string name;
  Style style;
  std::variant<CurveLayer, RasterLayer, PartitionLayer, ItineraryLayer> data;
};

struct FigureSpec {
  std::vector<Layer> layers;
  Viewport viewport;
  std::size_t unroll = 1;
  double width = 1200.0;
  double height = 600.0;
  bool equal_aspect = false;
};

/// Affine map from viewport coordinates to canvas pixels (y pointing down).
class Transform {
 public:
  Transform(const Viewport& vp, double width, double height, bool equal_aspect);
  LiftPoint to_canvas(LiftPoint p) const;
  LiftPoint from_canvas(LiftPoint q) const;

 private:
  double sx_, sy_, ox_, oy_;
};

/// Throws CONFIG_INVALID for an empty viewport or unroll 0, EMPTY_LAYER for a
/// layer without data.
std::string render_figure(const FigureSpec& spec);

/// "<stem>_<hash>_d<depth>.svg"
std::string figure_filename(const std::string& stem, const std::string& schedule_hash, std::size_t depth);

}  // namespace crooked::render
