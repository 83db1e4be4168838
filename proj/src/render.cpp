#include "crooked/render.hpp"

#include <algorithm>
#include <cstdio>

#include "crooked/error.hpp"

namespace crooked::render {

Transform::Transform(const Viewport& vp, double width, double height, bool equal_aspect) {
  sx_ = width / (vp.x1 - vp.x0);
  sy_ = height / (vp.y1 - vp.y0);
  double padx = 0.0, pady = 0.0;
  if (equal_aspect) {
    const double s = std::min(sx_, sy_);
    padx = 0.5 * (width - s * (vp.x1 - vp.x0));
    pady = 0.5 * (height - s * (vp.y1 - vp.y0));
    sx_ = sy_ = s;
  }
  ox_ = padx - sx_ * vp.x0;
  oy_ = pady + sy_ * vp.y1;
}

LiftPoint Transform::to_canvas(LiftPoint p) const { return {ox_ + sx_ * p.x, oy_ - sy_ * p.y}; }

LiftPoint Transform::from_canvas(LiftPoint q) const { return {(q.x - ox_) / sx_, (oy_ - q.y) / sy_}; }

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string stroke_attrs(const Style& s) {
  return "fill=\"" + s.fill + "\" stroke=\"" + s.stroke + "\" stroke-width=\"" + num(s.width) + "\"";
}

void polyline(std::string& out, const Transform& tf, const std::vector<LiftPoint>& pts, double dx,
              const Style& style) {
  out += "<polyline ";
  out += stroke_attrs(style);
  out += " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const LiftPoint c = tf.to_canvas({pts[i].x + dx, pts[i].y});
    if (i) out += ' ';
    out += num(c.x) + ',' + num(c.y);
  }
  out += "\"/>\n";
}

[[noreturn]] void empty(const std::string& name) {
  throw Error(ErrorCode::EmptyLayer, "layer '" + name + "' has no data");
}

void draw(std::string& out, const Transform& tf, const FigureSpec& spec, const Layer& layer, const CurveLayer& l) {
  const LiftedCurve& c = l.curve;
  if (c.size() == 0) empty(layer.name);
  std::vector<LiftPoint> pts;
  pts.reserve(c.size() + 1);
  for (std::size_t i = 0; i <= c.size(); ++i) pts.push_back(c.vertex(i));
  for (std::size_t k = 0; k < spec.unroll; ++k) polyline(out, tf, pts, static_cast<double>(k) * c.holonomy, layer.style);
}

void draw(std::string& out, const Transform& tf, const FigureSpec&, const Layer& layer, const RasterLayer& l) {
  const Raster& r = l.raster;
  if (r.bits.empty()) empty(layer.name);
  const double dx = (r.box.x1 - r.box.x0) / static_cast<double>(r.cols);
  const double dy = (r.box.y1 - r.box.y0) / static_cast<double>(r.rows);
  const std::string fill = layer.style.fill == "none" ? layer.style.stroke : layer.style.fill;
  for (std::size_t row = 0; row < r.rows; ++row) {
    for (std::size_t col = 0; col < r.cols; ++col) {
      if (!r.at(col, row)) continue;
      const double x = r.box.x0 + dx * static_cast<double>(col);
      const double y = r.box.y0 + dy * static_cast<double>(row + 1);
      const LiftPoint a = tf.to_canvas({x, y});
      const LiftPoint b = tf.to_canvas({x + dx, y - dy});
      out += "<rect class=\"cell\" x=\"" + num(a.x) + "\" y=\"" + num(a.y) + "\" width=\"" + num(b.x - a.x) +
             "\" height=\"" + num(b.y - a.y) + "\" fill=\"" + fill + "\"/>\n";
    }
  }
}

void draw(std::string& out, const Transform& tf, const FigureSpec& spec, const Layer& layer, const PartitionLayer& l) {
  if (l.fibers.empty()) empty(layer.name);
  for (std::size_t k = 0; k < spec.unroll; ++k)
    for (const auto& f : l.fibers) {
      if (f.empty()) empty(layer.name);
      polyline(out, tf, f, static_cast<double>(k) * l.shift, layer.style);
    }
}

void draw(std::string& out, const Transform& tf, const FigureSpec& spec, const Layer& layer, const ItineraryLayer& l) {
  const auto& idx = l.itinerary.indices;
  if (idx.empty()) empty(layer.name);
  const auto [lo, hi] = std::minmax_element(idx.begin(), idx.end());
  const Viewport& vp = spec.viewport;
  const double n = static_cast<double>(idx.size());
  const double span = static_cast<double>(*hi - *lo + 1);
  auto X = [&](double i) { return vp.x0 + (vp.x1 - vp.x0) * i / n; };
  auto Y = [&](long j) { return vp.y0 + (vp.y1 - vp.y0) * (static_cast<double>(j - *lo) + 0.5) / span; };
  std::vector<LiftPoint> pts;
  pts.reserve(2 * idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    pts.push_back({X(static_cast<double>(i)), Y(idx[i])});
    pts.push_back({X(static_cast<double>(i + 1)), Y(idx[i])});
  }
  polyline(out, tf, pts, 0.0, layer.style);
}

}  // namespace

std::string render_figure(const FigureSpec& spec) {
  if (spec.viewport.empty()) throw Error(ErrorCode::ConfigInvalid, "figure viewport is empty");
  if (spec.unroll < 1) throw Error(ErrorCode::ConfigInvalid, "figure unroll must be >= 1");
  if (!(spec.width > 0) || !(spec.height > 0)) throw Error(ErrorCode::ConfigInvalid, "figure canvas is empty");
  const Transform tf(spec.viewport, spec.width, spec.height, spec.equal_aspect);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(spec.width) + "\" height=\"" + num(spec.height) +
         "\" viewBox=\"0 0 " + num(spec.width) + ' ' + num(spec.height) + "\">\n";
  for (const Layer& layer : spec.layers) {
    out += "<g id=\"" + layer.name + "\">\n";
    std::visit([&](const auto& l) { draw(out, tf, spec, layer, l); }, layer.data);
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string figure_filename(const std::string& stem, const std::string& schedule_hash, std::size_t depth) {
  return stem + "_" + schedule_hash + "_d" + std::to_string(depth) + ".svg";
}

}  // namespace crooked::render
