// Command-line driver: trace, raster, crooked, search, symbolic, figure.
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crooked/annuli.hpp"
#include "crooked/crooked.hpp"
#include "crooked/error.hpp"
#include "crooked/io.hpp"
#include "crooked/kernels.hpp"
#include "crooked/render.hpp"
#include "crooked/symbolic.hpp"

namespace fs = std::filesystem;
using crooked::Error;
using crooked::ErrorCode;
using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::ConfigInvalid, msg); }

std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t");
  const auto b = s.find_last_not_of(" \t");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

double parse_number(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) invalid("not a number: '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    invalid("not a number: '" + s + "'");
  }
}

/// "0.5pi", "pi", "-pi/2"... give multiples of pi; plain numbers are radians.
/// Returns the value in units of pi.
double parse_angle_pi(const json& v) {
  if (v.is_number()) return v.get<double>() / crooked::kPi;
  if (!v.is_string()) invalid("angle must be a number or a string like 0.5pi");
  std::string s = trim(v.get<std::string>());
  const auto p = s.find("pi");
  if (p == std::string::npos) return parse_number(s) / crooked::kPi;
  std::string coef = s.substr(0, p);
  std::string rest = s.substr(p + 2);
  double c = coef.empty() ? 1.0 : coef == "-" ? -1.0 : parse_number(coef);
  if (!rest.empty()) {
    if (rest[0] != '/') invalid("bad angle '" + s + "'");
    c /= parse_number(rest.substr(1));
  }
  return c;
}

double parse_coord(const json& v) { return parse_angle_pi(v) * crooked::kPi; }

std::vector<crooked::Block> parse_blocks(const json& v) {
  std::vector<crooked::Block> out;
  if (v.is_string()) {
    const std::string s = trim(v.get<std::string>());
    if (s.empty()) invalid("empty block schedule");
    for (const auto& part : split(s, ';')) {
      const auto mn = split(part, ',');
      if (mn.size() != 2) invalid("block '" + part + "' is not m,n");
      out.push_back({static_cast<int>(parse_number(mn[0])), static_cast<int>(parse_number(mn[1]))});
    }
  } else if (v.is_array()) {
    for (const auto& b : v) {
      if (!b.is_array() || b.size() != 2) invalid("block entries must be [m, n] pairs");
      out.push_back({b[0].get<int>(), b[1].get<int>()});
    }
    if (out.empty()) invalid("empty block schedule");
  } else {
    invalid("blocks must be a string like \"0,1;4,3\" or an array of pairs");
  }
  return out;
}

std::vector<int> parse_int_list(const json& v) {
  std::vector<int> out;
  if (v.is_number_integer()) {
    out.push_back(v.get<int>());
  } else if (v.is_string()) {
    for (const auto& s : split(v.get<std::string>(), ',')) out.push_back(static_cast<int>(parse_number(s)));
  } else if (v.is_array()) {
    for (const auto& x : v) out.push_back(x.get<int>());
  } else {
    invalid("expected an integer list");
  }
  return out;
}

/// Resolved configuration: defaults, then config file, then flags.
struct Config {
  json values;

  bool has(const std::string& k) const { return values.contains(k) && !values[k].is_null(); }
  const json& at(const std::string& k) const {
    if (!has(k)) invalid("missing required setting '" + k + "'");
    return values[k];
  }
  double num(const std::string& k) const {
    const json& v = at(k);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_number(v.get<std::string>());
    invalid("setting '" + k + "' must be a number");
  }
  std::size_t count(const std::string& k, std::size_t lo = 0) const {
    const double v = num(k);
    if (!(v >= static_cast<double>(lo)) || v != static_cast<double>(static_cast<long long>(v)))
      invalid("setting '" + k + "' must be an integer >= " + std::to_string(lo));
    return static_cast<std::size_t>(v);
  }
  std::string str(const std::string& k) const {
    const json& v = at(k);
    if (!v.is_string()) invalid("setting '" + k + "' must be a string");
    return v.get<std::string>();
  }

  crooked::WParams params() const {
    crooked::WParams p{num("M")};
    p.validate();
    return p;
  }
  crooked::BlockSchedule schedule() const {
    crooked::BlockSchedule s{parse_blocks(at("blocks")), params()};
    s.validate();
    return s;
  }
  std::vector<int> N() const { return parse_int_list(at("N")); }
  crooked::RefineOptions refine() const {
    crooked::RefineOptions r{num("tol"), num("max_turn"), count("vertex_budget", 1)};
    if (!(r.tol > 0) || !(r.max_turn > 0)) invalid("tol and max_turn must be positive");
    return r;
  }
  crooked::RasterBox box() const {
    const json& v = at("box");
    json arr = v;
    if (v.is_string()) {
      arr = json::array();
      for (const auto& s : split(v.get<std::string>(), ',')) arr.push_back(s);
    }
    if (!arr.is_array() || arr.size() != 4) invalid("box must hold x0,x1,y0,y1");
    crooked::RasterBox b{parse_coord(arr[0]), parse_coord(arr[1]), parse_coord(arr[2]), parse_coord(arr[3])};
    if (!(b.x1 > b.x0) || !(b.y1 > b.y0)) invalid("box is empty");
    return b;
  }
  fs::path out_dir() const { return fs::path(str("out")); }
  fs::path output(const std::string& fallback) const {
    if (has("output")) return fs::path(str("output"));
    return out_dir() / fallback;
  }
  std::size_t depth_or(std::size_t fallback) const { return has("depth") ? count("depth") : fallback; }
};

json defaults() {
  return {{"M", 512.0},         {"tol", 1e-3},     {"max_turn", 0.2}, {"vertex_budget", 10'000'000},
          {"budget", 200},      {"max_block", 10}, {"out", "out"},    {"cols", 400},
          {"rows", 400},        {"box", json::array({0.0, "2pi", -4.0, 4.0})},
          {"maxiter", 1000},    {"nx", 50},        {"ny", 50},        {"nz", 40},
          {"n", 40},            {"L", 6},          {"unroll", 1},     {"width", 1200},
          {"height", 600},      {"kind", "curves"}, {"equal_aspect", false}};
}

/// Flag values captured as text; typed when merged into the config.
struct Flags {
  std::map<std::string, std::string> text;
  std::map<std::string, CLI::Option*> opts;

  void add(CLI::App* app, const std::string& name, const std::string& key, const std::string& help) {
    opts[key] = app->add_option(name, text[key], help);
  }
  void merge_into(json& cfg) const {
    for (const auto& [key, opt] : opts) {
      if (opt->count() == 0) continue;
      const std::string& s = text.at(key);
      if (key == "blocks" || key == "N" || key == "box" || key == "z" || key == "out" || key == "output" ||
          key == "kind" || key == "code" || key == "from" || key == "viewport") {
        cfg[key] = s;
      } else if (key == "equal_aspect") {
        cfg[key] = s == "1" || s == "true";
      } else {
        cfg[key] = parse_number(s);
      }
    }
  }
};

void write(const fs::path& p, const std::string& content) {
  crooked::io::write_atomic(p, content);
  std::cout << p.string() << "\n";
}

// --- subcommands -----------------------------------------------------------

int cmd_trace(const Config& c) {
  const auto sched = c.schedule();
  const std::size_t depth = c.depth_or(sched.depth());
  if (depth > sched.depth()) invalid("depth exceeds the schedule length");
  const auto chain = crooked::trace_chain(sched, depth, c.refine());
  const std::string hash = sched.hash();
  for (std::size_t k = 0; k <= depth; ++k) {
    const auto& lv = chain.level(k);
    const std::string stem = "trace_" + hash + "_d" + std::to_string(k) + "_";
    write(c.out_dir() / (stem + "upper.csv"), crooked::io::curve_csv(lv.upper, "upper", k, hash, c.values));
    write(c.out_dir() / (stem + "lower.csv"), crooked::io::curve_csv(lv.lower, "lower", k, hash, c.values));
    write(c.out_dir() / (stem + "core.csv"), crooked::io::curve_csv(lv.core, "core", k, hash, c.values));
  }
  return 0;
}

int cmd_raster(const Config& c) {
  const auto sched = c.schedule();
  const std::size_t depth = c.depth_or(sched.depth());
  if (depth > sched.depth()) invalid("depth exceeds the schedule length");
  const auto r = crooked::rasterize(sched, depth, c.box(), c.count("cols", 1), c.count("rows", 1));
  const std::string stem = "raster_" + sched.hash() + "_d" + std::to_string(depth);
  write(c.out_dir() / (stem + ".pgm"), crooked::io::raster_pgm(r));
  write(c.out_dir() / (stem + ".json"), crooked::io::dump(crooked::io::raster_sidecar(r, sched, depth, c.values)));
  return 0;
}

int cmd_crooked(Config c) {
  if (c.has("from")) {
    const json w = json::parse(crooked::io::read_file(c.str("from")), nullptr, false);
    if (w.is_discarded() || !w.contains("schedule")) invalid("'" + c.str("from") + "' is not a search witness");
    const auto s = crooked::io::schedule_from_json(w["schedule"]);
    if (!c.has("blocks")) c.values["blocks"] = crooked::io::to_json(s)["blocks"];
    if (!c.has("N")) c.values["N"] = w.at("N_sequence");
    c.values["M"] = s.params.M;
  }
  const auto sched = c.schedule();
  const auto N = c.N();
  if (N.size() < sched.depth()) invalid("need one N per block");
  const auto refine = c.refine();
  json levels = json::array();
  bool all = true;
  for (std::size_t i = 0; i < sched.depth(); ++i) {
    const auto level = crooked::trace_level(sched, i, refine);
    const auto part = crooked::partition(level, sched, N[i]);
    const crooked::BlockSchedule single{{sched.blocks[i]}, sched.params};
    const auto image = crooked::trace_curve(single, 1, 0.0, refine);
    const auto it = crooked::base_loop_itinerary(image, part);
    const bool ok = crooked::is_crooked_loop(it, N[i]);
    all = all && ok;
    levels.push_back({{"depth", i},
                      {"N", N[i]},
                      {"block", {sched.blocks[i].m, sched.blocks[i].n}},
                      {"crooked", ok},
                      {"max_rect_diameter", crooked::max_rect_diameter(part)},
                      {"itinerary", crooked::io::to_json(it)}});
  }
  const json report = {{"schedule", crooked::io::to_json(sched)}, {"all_crooked", all}, {"levels", levels},
                       {"config", c.values}};
  write(c.output("crooked_" + sched.hash() + ".json"), crooked::io::dump(report));
  return 0;
}

int cmd_search(const Config& c) {
  const std::size_t depth = c.count("depth", 1);
  const auto N = c.N();
  crooked::SearchOptions opts;
  opts.budget = c.count("budget");
  opts.max_block_size = static_cast<int>(c.count("max_block", 1));
  opts.refine = c.refine();
  const auto report = crooked::find_crooked_blocks(depth, N, c.params(), opts);
  write(c.output("search_d" + std::to_string(depth) + ".json"),
        crooked::io::dump(crooked::io::to_json(report, N, c.values)));
  return 0;
}

int cmd_symbolic(const std::string& action, const Config& c) {
  using namespace crooked;
  if (action == "code-to-interval") {
    const auto code = CodePrefix::parse(c.str("code"));
    if (code.empty()) invalid("code must be nonempty");
    const auto iv = code_to_interval(code);
    std::printf("[%s, %s]\n", format_pi(iv.lo).c_str(), format_pi(iv.hi).c_str());
    std::printf("radians [%s, %s]\n", io::fmt(iv.lo_radians()).c_str(), io::fmt(iv.hi_radians()).c_str());
    return 0;
  }
  if (action == "itinerary") {
    const Angle z = Angle::from_pi_units(parse_angle_pi(c.at("z")));
    const auto it = g_itinerary(z, c.count("n"));
    std::printf("%s\n", it.code.str().c_str());
    if (it.escaped()) std::printf("escaped at %zu\n", *it.escaped_at);
    return 0;
  }
  if (action == "covering") {
    const auto r = base_map_covering();
    std::printf("g(I1) covers: %d\ng(I2) covers: %d\ninjective on I1: %d\ninjective on I2: %d\n", r.g_I1_covers,
                r.g_I2_covers, r.injective_I1, r.injective_I2);
    return r.ok() ? 0 : 1;
  }
  if (action == "witness") {
    const std::size_t L = c.count("L", 1);
    const auto w = transitivity_witness(L);
    const auto seen = witness_cylinders_visited(w, L);
    std::size_t n = 0;
    for (bool b : seen) n += b;
    std::printf("%s\ncylinders visited %zu of %zu\n", w.str().c_str(), n, seen.size());
    return 0;
  }
  if (action == "escape") {
    const EscapeGrid grid{c.count("nx", 1), c.count("ny", 2), c.count("nz", 2)};
    const auto recs = escape_census(grid, c.params(), c.count("maxiter"));
    write(c.output("escape_census.csv"), io::escape_csv(recs, c.values));
    return 0;
  }
  invalid("unknown symbolic action '" + action + "'");
}

int cmd_figure(const Config& c) {
  using namespace crooked;
  const auto sched = c.schedule();
  const std::size_t depth = c.depth_or(sched.depth());
  if (depth > sched.depth()) invalid("depth exceeds the schedule length");
  const std::string kind = c.str("kind");
  render::FigureSpec spec;
  spec.unroll = c.count("unroll", 1);
  spec.width = c.num("width");
  spec.height = c.num("height");
  spec.equal_aspect = c.values.value("equal_aspect", false);
  const RasterBox vb = c.has("viewport") ? Config{{{"box", c.values["viewport"]}}}.box() : c.box();
  spec.viewport = {vb.x0, vb.x1, vb.y0, vb.y1};
  const auto refine = c.refine();
  auto pick_N = [&](std::size_t k) {
    const auto N = c.N();
    if (N.empty()) invalid("N list is empty");
    return k < N.size() ? N[k] : N.back();
  };
  if (kind == "curves" || kind == "partition") {
    const auto lv = trace_level(sched, depth, refine);
    spec.layers.push_back({"upper", {"#b03a2e", "none", 1.0}, render::CurveLayer{lv.upper}});
    spec.layers.push_back({"lower", {"#1f618d", "none", 1.0}, render::CurveLayer{lv.lower}});
    spec.layers.push_back({"core", {"#7f8c8d", "none", 0.5}, render::CurveLayer{lv.core}});
    if (kind == "partition") {
      const auto part = partition(lv, sched, pick_N(depth));
      spec.layers.push_back({"fibers", {"#117a65", "none", 0.8}, render::PartitionLayer{part.fibers, kTwoPi}});
    }
  } else if (kind == "raster") {
    Raster r = rasterize(sched, depth, c.box(), c.count("cols", 1), c.count("rows", 1));
    spec.layers.push_back({"raster", {"#000000", "#000000", 0.0}, render::RasterLayer{std::move(r)}});
  } else if (kind == "itinerary") {
    if (depth < 1) invalid("itinerary figures need depth >= 1");
    const auto lv = trace_level(sched, depth - 1, refine);
    const auto part = partition(lv, sched, pick_N(depth - 1));
    const BlockSchedule single{{sched.blocks[depth - 1]}, sched.params};
    const auto it = base_loop_itinerary(trace_curve(single, 1, 0.0, refine), part);
    spec.layers.push_back({"itinerary", {"#000000", "none", 1.0}, render::ItineraryLayer{it}});
  } else {
    invalid("unknown figure kind '" + kind + "'");
  }
  write(c.output(render::figure_filename(kind, sched.hash(), depth)), render::render_figure(spec));
  return 0;
}

int fail(ErrorCode code, const std::string& msg) {
  const json rec = {{"error", std::string(crooked::to_string(code))},
                    {"exit_code", crooked::exit_code(code)},
                    {"message", msg}};
  std::cerr << rec.dump() << "\n";
  return crooked::exit_code(code);
}

}  // namespace

int main(int argc, char** argv) {
  crooked::kernels::apply_thread_cap_from_env();
  CLI::App app{"Crooked annuli: tracing, crookedness search, symbolic dynamics, figures"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; flags override it");

  std::map<std::string, Flags> flags;
  auto common = [&](CLI::App* sub, Flags& f) {
    f.add(sub, "--M", "M", "shear parameter (>= 512)");
    f.add(sub, "--out", "out", "output directory");
    f.add(sub, "--output", "output", "output file");
    f.add(sub, "--tol", "tol", "max segment length of traced curves");
    f.add(sub, "--max-turn", "max_turn", "max turning angle between segments");
    f.add(sub, "--vertex-budget", "vertex_budget", "max vertices per traced curve");
  };
  auto* trace = app.add_subcommand("trace", "write boundary and core curves of each depth as CSV");
  auto* raster = app.add_subcommand("raster", "rasterize the depth-k annulus (PGM + JSON)");
  auto* crook = app.add_subcommand("crooked", "check crookedness of a schedule (JSON report)");
  auto* search = app.add_subcommand("search", "greedy search for crooked blocks (JSON witness)");
  auto* symbolic = app.add_subcommand("symbolic", "symbolic dynamics of the base map");
  auto* figure = app.add_subcommand("figure", "render an SVG figure");
  for (auto* sub : {trace, raster, crook, search, symbolic, figure}) common(sub, flags[sub->get_name()]);

  for (auto* sub : {trace, raster, crook, figure}) {
    flags[sub->get_name()].add(sub, "--blocks", "blocks", "schedule, e.g. \"0,1;4,3\"");
    flags[sub->get_name()].add(sub, "--depth", "depth", "depth (defaults to the schedule length)");
  }
  for (auto* sub : {crook, search, figure}) flags[sub->get_name()].add(sub, "--N", "N", "rectangle counts, e.g. 4,6");
  for (auto* sub : {raster, figure}) {
    flags[sub->get_name()].add(sub, "--box", "box", "x0,x1,y0,y1; angles may be written as 2pi");
    flags[sub->get_name()].add(sub, "--cols", "cols", "raster columns");
    flags[sub->get_name()].add(sub, "--rows", "rows", "raster rows");
  }
  flags["crooked"].add(crook, "--from", "from", "search witness JSON to re-check");
  flags["search"].add(search, "--depth", "depth", "target depth");
  flags["search"].add(search, "--budget", "budget", "candidate blocks evaluated in total");
  flags["search"].add(search, "--max-block", "max_block", "largest m + n tried");
  std::string action;
  symbolic->add_option("action", action, "code-to-interval | itinerary | covering | witness | escape")->required();
  {
    Flags& f = flags["symbolic"];
    f.opts["code"] = symbolic->add_option("code", f.text["code"], "code over {1,2} for code-to-interval");
    f.add(symbolic, "--z", "z", "starting angle, e.g. 0.5pi");
    f.add(symbolic, "--n", "n", "itinerary length");
    f.add(symbolic, "--L", "L", "witness word length");
    f.add(symbolic, "--maxiter", "maxiter", "escape-time iteration cap");
    f.add(symbolic, "--nx", "nx", "escape grid size in x");
    f.add(symbolic, "--ny", "ny", "escape grid size in y");
    f.add(symbolic, "--nz", "nz", "escape grid size in z");
  }
  {
    Flags& f = flags["figure"];
    f.add(figure, "--kind", "kind", "curves | partition | raster | itinerary");
    f.add(figure, "--unroll", "unroll", "deck translates drawn per curve");
    f.add(figure, "--viewport", "viewport", "x0,x1,y0,y1");
    f.add(figure, "--width", "width", "canvas width");
    f.add(figure, "--height", "height", "canvas height");
    f.add(figure, "--equal-aspect", "equal_aspect", "1 to keep the aspect ratio");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(ErrorCode::ConfigInvalid, e.what());
  }

  try {
    Config cfg{defaults()};
    if (!config_path.empty()) {
      const json file = json::parse(crooked::io::read_file(config_path), nullptr, false);
      if (file.is_discarded() || !file.is_object()) invalid("config file is not a JSON object");
      for (const auto& [k, v] : file.items()) cfg.values[k] = v;
    }
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    flags[name].merge_into(cfg.values);
    cfg.values["command"] = name;
    if (name == "trace") return cmd_trace(cfg);
    if (name == "raster") return cmd_raster(cfg);
    if (name == "crooked") return cmd_crooked(cfg);
    if (name == "search") return cmd_search(cfg);
    if (name == "symbolic") {
      cfg.values["action"] = action;
      return cmd_symbolic(action, cfg);
    }
    return cmd_figure(cfg);
  } catch (const Error& e) {
    return fail(e.code(), e.what());
  } catch (const json::exception& e) {
    return fail(ErrorCode::ConfigInvalid, e.what());
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "INTERNAL"}, {"exit_code", 1}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}
