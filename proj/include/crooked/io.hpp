#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "crooked/crooked.hpp"
#include "crooked/curve.hpp"
#include "crooked/kernels.hpp"
#include "crooked/symbolic.hpp"

namespace crooked::io {

using nlohmann::json;

/// %.17g
std::string fmt(double v);

/// Writes to a sibling temporary file, then renames it over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

/// Two-space indented JSON with a trailing newline.
std::string dump(const json& j);

json to_json(const BlockSchedule& s);
BlockSchedule schedule_from_json(const json& j);

/// Header comments (label, holonomy, period, depth, schedule hash, config),
/// then "param,x,y" rows, one per vertex of one period.
std::string curve_csv(const LiftedCurve& c, std::string_view label, std::size_t depth, std::string_view schedule_hash,
                      const json& config);
/// Reads back the vertices, period and holonomy.
LiftedCurve parse_curve_csv(std::string_view text);

/// Plain PGM (P2), top row first; set cells are black.
std::string raster_pgm(const Raster& r);
json raster_sidecar(const Raster& r, const BlockSchedule& s, std::size_t depth, const json& config);

json to_json(const Itinerary& it);
json to_json(const DepthVerdict& v);
json to_json(const SearchReport& r, const std::vector<int>& N_sequence, const json& config);

/// "x,y,z,escape_step" rows in radians; escape_step is NEVER for survivors.
std::string escape_csv(const std::vector<EscapeRecord>& records, const json& config);

}  // namespace crooked::io
