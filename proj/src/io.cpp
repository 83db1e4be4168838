#include "crooked/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "crooked/error.hpp"

namespace crooked::io {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::Io, "cannot open " + tmp.string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw Error(ErrorCode::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::Io, "rename to " + path.string() + " failed: " + ec.message());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(const BlockSchedule& s) {
  json blocks = json::array();
  for (const Block& b : s.blocks) blocks.push_back({b.m, b.n});
  return {{"M", s.params.M}, {"blocks", blocks}, {"canonical", s.canonical()}, {"hash", s.hash()}};
}

BlockSchedule schedule_from_json(const json& j) {
  try {
    BlockSchedule s;
    s.params.M = j.value("M", 512.0);
    for (const auto& b : j.at("blocks")) s.blocks.push_back({b.at(0).get<int>(), b.at(1).get<int>()});
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigInvalid, std::string("bad schedule record: ") + e.what());
  }
}

std::string curve_csv(const LiftedCurve& c, std::string_view label, std::size_t depth, std::string_view schedule_hash,
                      const json& config) {
  std::string out;
  out += "# curve " + std::string(label) + "\n";
  out += "# holonomy " + fmt(c.holonomy) + "\n";
  out += "# period " + fmt(c.period) + "\n";
  out += "# depth " + std::to_string(depth) + "\n";
  out += "# schedule " + std::string(schedule_hash) + "\n";
  out += "# config " + config.dump() + "\n";
  out += "param,x,y\n";
  for (std::size_t i = 0; i < c.size(); ++i)
    out += fmt(c.params[i]) + ',' + fmt(c.vertices[i].x) + ',' + fmt(c.vertices[i].y) + '\n';
  return out;
}

LiftedCurve parse_curve_csv(std::string_view text) {
  LiftedCurve c;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream h(line.substr(1));
      std::string key;
      h >> key;
      if (key == "holonomy") h >> c.holonomy;
      if (key == "period") h >> c.period;
      continue;
    }
    if (!header) {
      if (line != "param,x,y") throw Error(ErrorCode::Io, "curve CSV lacks the param,x,y header");
      header = true;
      continue;
    }
    double u, x, y;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &u, &x, &y) != 3) throw Error(ErrorCode::Io, "bad curve row: " + line);
    c.params.push_back(u);
    c.vertices.push_back({x, y});
  }
  return c;
}

std::string raster_pgm(const Raster& r) {
  std::string out = "P2\n" + std::to_string(r.cols) + ' ' + std::to_string(r.rows) + "\n255\n";
  for (std::size_t row = r.rows; row-- > 0;) {
    for (std::size_t col = 0; col < r.cols; ++col) {
      if (col) out += ' ';
      out += r.at(col, row) ? "0" : "255";
    }
    out += '\n';
  }
  return out;
}

json raster_sidecar(const Raster& r, const BlockSchedule& s, std::size_t depth, const json& config) {
  return {{"box", {r.box.x0, r.box.x1, r.box.y0, r.box.y1}},
          {"cols", r.cols},
          {"rows", r.rows},
          {"depth", depth},
          {"schedule", to_json(s)},
          {"set_cells", r.count()},
          {"fraction", r.fraction()},
          {"config", config}};
}

json to_json(const Itinerary& it) { return {{"modulus", it.modulus}, {"indices", it.indices}}; }

json to_json(const DepthVerdict& v) {
  return {{"depth", v.depth},
          {"N", v.N},
          {"block", {v.block.m, v.block.n}},
          {"crooked", v.crooked},
          {"itinerary_length", v.itinerary_length},
          {"candidates_tried", v.candidates_tried},
          {"min_cut_spacing", v.min_cut_spacing},
          {"strip_width", v.strip_width},
          {"thinness_margin", v.thinness_margin},
          {"max_rect_diameter", v.max_rect_diameter}};
}

json to_json(const SearchReport& r, const std::vector<int>& N_sequence, const json& config) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return {{"schedule", to_json(r.schedule)},
          {"N_sequence", N_sequence},
          {"verdicts", verdicts},
          {"diameters", r.diameters},
          {"evaluated", r.evaluated},
          {"config", config}};
}

std::string escape_csv(const std::vector<EscapeRecord>& records, const json& config) {
  std::string out = "# config " + config.dump() + "\nx,y,z,escape_step\n";
  for (const auto& rec : records) {
    out += fmt(rec.state.x.radians()) + ',' + fmt(rec.state.y) + ',' + fmt(rec.state.z.radians()) + ',' +
           (rec.result.never ? "NEVER" : std::to_string(rec.result.step)) + '\n';
  }
  return out;
}

}  // namespace crooked::io
