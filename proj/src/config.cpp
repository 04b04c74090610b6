#include "vvilab/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "vvilab/catalog.hpp"
#include "vvilab/errors.hpp"

namespace vvilab {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double to_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(key + ": not a number: '" + text + "'");
  }
  return value;
}

template <class Int>
Int to_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  Int value{};
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(key + ": not an integer: '" + text + "'");
  }
  return value;
}

// Wraps library parse errors so every bad value surfaces as ConfigError.
template <class F>
auto parsed(const std::string& key, F&& parse) {
  try {
    return parse();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"instance", [](RunConfig& c, const std::string& v) { c.instance = v; }},
      {"id", [](RunConfig& c, const std::string& v) { c.id = v; }},
      {"manifold",
       [](RunConfig& c, const std::string& v) {
         c.manifold = parsed("manifold", [&] { return parse_manifold_id(v); });
       }},
      {"bounds", [](RunConfig& c, const std::string& v) { c.bounds = v; }},
      {"grid",
       [](RunConfig& c, const std::string& v) { c.grid_n = to_int<int>("grid", v); }},
      {"spacing",
       [](RunConfig& c, const std::string& v) {
         c.spacing = parsed("spacing", [&] { return parse_spacing(v); });
       }},
      {"extra-random",
       [](RunConfig& c, const std::string& v) {
         c.extra_random = to_int<int>("extra-random", v);
       }},
      {"objective", [](RunConfig& c, const std::string& v) { c.objective = v; }},
      {"bifunction",
       [](RunConfig& c, const std::string& v) { c.bifunction = v; }},
      {"mode",
       [](RunConfig& c, const std::string& v) {
         c.mode = parsed("mode", [&] { return parse_geodesic_mode(v); });
       }},
      {"tol", [](RunConfig& c, const std::string& v) { c.tol = to_double("tol", v); }},
      {"seed",
       [](RunConfig& c, const std::string& v) {
         c.seed = to_int<std::uint64_t>("seed", v);
       }},
      {"dini-t0",
       [](RunConfig& c, const std::string& v) {
         c.sched.t0 = to_double("dini-t0", v);
       }},
      {"dini-ratio",
       [](RunConfig& c, const std::string& v) {
         c.sched.ratio = to_double("dini-ratio", v);
       }},
      {"dini-steps",
       [](RunConfig& c, const std::string& v) {
         c.sched.steps = to_int<int>("dini-steps", v);
       }},
      {"hconvex-form",
       [](RunConfig& c, const std::string& v) {
         c.hconvex_form =
             parsed("hconvex-form", [&] { return parse_hconvex_form(v); });
       }},
      {"problem", [](RunConfig& c, const std::string& v) { c.problem = v; }},
      {"theorem", [](RunConfig& c, const std::string& v) { c.theorem = v; }},
      {"property", [](RunConfig& c, const std::string& v) { c.property = v; }},
      {"point", [](RunConfig& c, const std::string& v) { c.point = v; }},
      {"replay", [](RunConfig& c, const std::string& v) { c.replay = v; }},
      {"format",
       [](RunConfig& c, const std::string& v) {
         if (v != "text" && v != "json" && v != "csv") {
           throw ConfigError("format: expected text, json or csv, got '" + v +
                             "'");
         }
         c.format = v;
       }},
      {"out", [](RunConfig& c, const std::string& v) { c.out = v; }},
  };
  return table;
}

std::pair<double, double> parse_interval(const std::string& text) {
  const auto sep = text.find_first_of(":,");
  if (sep == std::string::npos) {
    throw ConfigError("bounds: expected lo:hi, got '" + text + "'");
  }
  return {to_double("bounds", text.substr(0, sep)),
          to_double("bounds", text.substr(sep + 1))};
}

}  // namespace

std::string normalize_key(std::string key) {
  key = trim(key);
  for (char& ch : key) {
    ch = ch == '_' ? '-' : static_cast<char>(std::tolower(
                               static_cast<unsigned char>(ch)));
  }
  if (key == "grid-n") key = "grid";
  return key;
}

KeyValues parse_key_values(std::istream& in, const std::string& source) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(source + ":" + std::to_string(lineno) +
                        ": expected key = value");
    }
    const std::string key = normalize_key(line.substr(0, eq));
    if (!setters().contains(key)) {
      throw ConfigError(source + ":" + std::to_string(lineno) +
                        ": unknown key '" + key + "'");
    }
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

KeyValues read_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  return parse_key_values(in, path);
}

void RunConfig::apply(const KeyValues& kv) {
  for (const auto& [raw, value] : kv) {
    const std::string key = normalize_key(raw);
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError("unknown key '" + key + "'");
    it->second(*this, value);
  }
}

std::vector<std::pair<double, double>> parse_bounds(const std::string& text,
                                                    std::size_t dim) {
  std::vector<std::pair<double, double>> box;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (!trim(part).empty()) box.push_back(parse_interval(trim(part)));
  }
  if (box.size() == 1 && dim > 1) box.assign(dim, box.front());
  if (box.size() != dim) {
    throw ConfigError("bounds: expected " + std::to_string(dim) +
                      " interval(s), got " + std::to_string(box.size()));
  }
  return box;
}

std::vector<double> parse_coords(const std::string& text) {
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) coords.push_back(to_double("point", part));
  if (coords.empty()) throw ConfigError("point: no coordinates");
  return coords;
}

ProblemInstance build_instance(const RunConfig& cfg) {
  ProblemInstance inst;
  if (!cfg.instance.empty()) {
    inst = find_instance(cfg.instance);
  } else {
    if (!cfg.manifold || cfg.bounds.empty()) {
      throw ConfigError(
          "no instance: give a catalog id or manifold and bounds");
    }
    inst.id = cfg.id.empty() ? "inline" : cfg.id;
    inst.manifold = *cfg.manifold;
    inst.feasible.manifold = *cfg.manifold;
    inst.description = "inline definition";
  }
  if (!cfg.id.empty()) inst.id = cfg.id;
  if (cfg.manifold && !(*cfg.manifold == inst.manifold)) {
    throw ConfigError("manifold '" + to_string(*cfg.manifold) +
                      "' conflicts with instance '" + inst.id + "' on " +
                      to_string(inst.manifold));
  }
  if (!cfg.bounds.empty()) {
    inst.feasible.box = parse_bounds(cfg.bounds, inst.manifold.dim);
  }
  if (cfg.grid_n) inst.feasible.grid_n = *cfg.grid_n;
  if (cfg.spacing) inst.feasible.spacing = *cfg.spacing;
  if (cfg.extra_random) inst.feasible.extra_random = *cfg.extra_random;
  if (!cfg.objective.empty()) inst.objective = cfg.objective;
  if (!cfg.bifunction.empty()) inst.bifunction = cfg.bifunction;
  if (cfg.mode) inst.mode = *cfg.mode;
  inst.feasible.seed = cfg.seed;
  inst.validate();
  return inst;
}

CheckContext make_context(const RunConfig& cfg, const ResolvedInstance& inst) {
  if (!(cfg.tol >= 0.0)) throw ConfigError("tol must be >= 0");
  cfg.sched.validate();
  CheckContext ctx(inst.manifold);
  ctx.tol = cfg.tol;
  ctx.sched = cfg.sched;
  ctx.hconvex_form = cfg.hconvex_form;
  ctx.seed = cfg.seed;
  return ctx;
}

}  // namespace vvilab
