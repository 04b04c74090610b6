#include "vvilab/report.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "vvilab/errors.hpp"

namespace vvilab {

json number_json(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) throw DomainError("NaN in report");
  return x > 0 ? "inf" : "-inf";
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j == "inf") return std::numeric_limits<double>::infinity();
  if (j == "-inf") return -std::numeric_limits<double>::infinity();
  throw ConfigError("expected a number, got " + j.dump());
}

namespace {

json vec_json(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number_json(x));
  return out;
}

std::vector<double> vec_from_json(const json& j) {
  std::vector<double> v;
  for (const auto& x : j) v.push_back(number_from_json(x));
  return v;
}

json points_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

Provenance parse_provenance(const std::string& s) {
  for (Provenance p :
       {Provenance::paper, Provenance::derived, Provenance::trivial}) {
    if (to_string(p) == s) return p;
  }
  throw ConfigError("unknown provenance: " + s);
}

}  // namespace

json to_json(const Point& p) {
  return {{"manifold", to_string(p.manifold)}, {"coords", vec_json(p.coords)}};
}

Point point_from_json(const json& j) {
  return {parse_manifold_id(j.at("manifold").get<std::string>()),
          vec_from_json(j.at("coords"))};
}

json to_json(const Witness& w) {
  json points = json::object();
  for (const auto& [k, p] : w.points) points[k] = to_json(p);
  json params = json::object();
  for (const auto& [k, x] : w.params) params[k] = number_json(x);
  json values = json::object();
  for (const auto& [k, v] : w.values) values[k] = vec_json(v);
  return {{"property", w.property},   {"points", points},
          {"params", params},         {"values", values},
          {"margin", number_json(w.margin)},
          {"threshold", number_json(w.threshold)},
          {"inclusive", w.inclusive}};
}

Witness witness_from_json(const json& j) {
  Witness w;
  w.property = j.at("property").get<std::string>();
  for (const auto& [k, p] : j.at("points").items()) {
    w.points[k] = point_from_json(p);
  }
  for (const auto& [k, x] : j.at("params").items()) {
    w.params[k] = number_from_json(x);
  }
  for (const auto& [k, v] : j.at("values").items()) {
    w.values[k] = vec_from_json(v);
  }
  w.margin = number_from_json(j.at("margin"));
  w.threshold = number_from_json(j.at("threshold"));
  w.inclusive = j.at("inclusive").get<bool>();
  return w;
}

json to_json(const CheckOutcome& o) {
  json out = {{"property", o.property},
              {"verdict", to_string(o.verdict)},
              {"samples_checked", o.samples_checked},
              {"notes", o.notes}};
  out["witness"] = o.witness ? to_json(*o.witness) : json(nullptr);
  return out;
}

json to_json(const SolutionSet& s) {
  json excluded = json::array();
  for (const auto& e : s.excluded) {
    excluded.push_back({{"point", to_json(e.point)},
                        {"by", to_json(e.by)},
                        {"value", vec_json(e.value)}});
  }
  return {{"problem", to_string(s.problem)}, {"tol", s.tol},
          {"grid_size", s.grid_size},        {"solutions", points_json(s.points)},
          {"marginal", points_json(s.marginal)},
          {"excluded", excluded},            {"notes", s.notes}};
}

json to_json(const InclusionCheck& c) {
  return {{"claim", c.claim},
          {"verdict", to_string(c.verdict)},
          {"witness", c.witness ? to_json(*c.witness) : json(nullptr)},
          {"detail", c.detail},
          {"explained_by_grid", c.explained_by_grid}};
}

json to_json(const TheoremReport& r) {
  json hyps = json::array();
  for (const auto& h : r.hypotheses) {
    hyps.push_back({{"property", h.property}, {"outcome", to_json(h.outcome)}});
  }
  json aux = json::array();
  for (const auto& c : r.auxiliary) aux.push_back(to_json(c));
  json sols = json::object();
  for (const auto& [k, s] : r.solutions) sols[k] = to_json(s);
  return {{"id", r.theorem_id},
          {"hypotheses", hyps},
          {"hypotheses_hold", r.hypotheses_hold()},
          {"covered_by_theorem", r.covered_by_theorem()},
          {"theorem_violated", r.theorem_violated()},
          {"inclusion", to_json(r.inclusion)},
          {"auxiliary", aux},
          {"solutions", sols},
          {"notes", r.notes}};
}

json to_json(const ProblemInstance& inst) {
  json box = json::array();
  for (const auto& [lo, hi] : inst.feasible.box) {
    box.push_back({number_json(lo), number_json(hi)});
  }
  return {{"id", inst.id},
          {"manifold", to_string(inst.manifold)},
          {"mode", to_string(inst.mode)},
          {"box", box},
          {"grid_n", inst.feasible.grid_n},
          {"spacing", to_string(inst.feasible.spacing)},
          {"extra_random", inst.feasible.extra_random},
          {"seed", inst.feasible.seed},
          {"objective", inst.objective},
          {"bifunction", inst.bifunction},
          {"provenance", to_string(inst.provenance)},
          {"description", inst.description}};
}

ProblemInstance instance_from_json(const json& j) {
  ProblemInstance inst;
  inst.id = j.at("id").get<std::string>();
  inst.manifold = parse_manifold_id(j.at("manifold").get<std::string>());
  inst.mode = parse_geodesic_mode(j.at("mode").get<std::string>());
  inst.feasible.manifold = inst.manifold;
  for (const auto& b : j.at("box")) {
    inst.feasible.box.emplace_back(number_from_json(b.at(0)),
                                   number_from_json(b.at(1)));
  }
  inst.feasible.grid_n = j.at("grid_n").get<int>();
  inst.feasible.spacing = parse_spacing(j.at("spacing").get<std::string>());
  inst.feasible.extra_random = j.at("extra_random").get<int>();
  inst.feasible.seed = j.at("seed").get<std::uint64_t>();
  inst.objective = j.at("objective").get<std::string>();
  inst.bifunction = j.at("bifunction").get<std::string>();
  inst.provenance = parse_provenance(j.at("provenance").get<std::string>());
  inst.description = j.at("description").get<std::string>();
  inst.validate();
  return inst;
}

json to_json(const CatalogEntry& e) {
  return {{"id", e.id},
          {"kind", e.kind},
          {"provenance", to_string(e.provenance)},
          {"description", e.description}};
}

json config_json(const RunConfig& cfg, GeodesicMode mode) {
  return {{"tol", cfg.tol},
          {"seed", cfg.seed},
          {"dini",
           {{"t0", cfg.sched.t0},
            {"ratio", cfg.sched.ratio},
            {"steps", cfg.sched.steps}}},
          {"mode", to_string(mode)},
          {"hconvex_form", to_string(cfg.hconvex_form)}};
}

json envelope(const std::string& command) {
  return {{"schema", kSchemaVersion},
          {"tool_version", kToolVersion},
          {"command", command}};
}

std::string dump_without_runtime(json report) {
  report.erase("runtime_ms");
  return report.dump(2);
}

namespace {

std::string num_text(const json& x) {
  if (x.is_string()) return x.get<std::string>();
  std::ostringstream out;
  out << std::setprecision(10) << x.get<double>();
  return out.str();
}

std::string coords_text(const json& point) {
  std::string s = "(";
  bool first = true;
  for (const auto& x : point.at("coords")) {
    if (!first) s += ", ";
    s += num_text(x);
    first = false;
  }
  return s + ")";
}

std::string vec_text(const json& v) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : v) {
    if (!first) s += ", ";
    s += num_text(x);
    first = false;
  }
  return s + "]";
}

void witness_text(std::ostream& out, const json& w, const std::string& indent) {
  out << indent << "witness:\n";
  for (const auto& [k, p] : w.at("points").items()) {
    out << indent << "  " << k << " = " << coords_text(p) << '\n';
  }
  for (const auto& [k, x] : w.at("params").items()) {
    out << indent << "  " << k << " = " << num_text(x) << '\n';
  }
  for (const auto& [k, v] : w.at("values").items()) {
    out << indent << "  " << k << " = " << vec_text(v) << '\n';
  }
  out << indent << "  margin " << num_text(w.at("margin"))
      << (w.at("inclusive").get<bool>() ? " >= " : " > ")
      << num_text(w.at("threshold")) << '\n';
}

void outcome_text(std::ostream& out, const json& o, const std::string& indent) {
  out << indent << o.at("property").get<std::string>() << ": "
      << o.at("verdict").get<std::string>() << " ("
      << o.at("samples_checked").get<std::size_t>() << " tuples)\n";
  for (const auto& n : o.at("notes")) {
    out << indent << "  note: " << n.get<std::string>() << '\n';
  }
  if (!o.at("witness").is_null()) witness_text(out, o.at("witness"), indent + "  ");
}

void header_text(std::ostream& out, const json& r) {
  out << "vvilab " << r.at("tool_version").get<std::string>() << "  "
      << r.at("command").get<std::string>() << '\n';
  if (r.contains("instance")) {
    const json& i = r.at("instance");
    out << "instance " << i.at("id").get<std::string>() << " on "
        << i.at("manifold").get<std::string>() << ", grid_n "
        << i.at("grid_n") << " (" << i.at("spacing").get<std::string>()
        << ")\n";
  }
  if (r.contains("config")) {
    const json& c = r.at("config");
    out << "tol " << num_text(c.at("tol")) << ", seed " << c.at("seed")
        << ", mode " << c.at("mode").get<std::string>() << ", dini t0 "
        << num_text(c.at("dini").at("t0")) << " ratio "
        << num_text(c.at("dini").at("ratio")) << " steps "
        << c.at("dini").at("steps") << ", h-convex form "
        << c.at("hconvex_form").get<std::string>() << '\n';
  }
}

void solution_text(std::ostream& out, const json& s, const std::string& indent) {
  out << indent << s.at("problem").get<std::string>() << ": "
      << s.at("solutions").size() << " of " << s.at("grid_size")
      << " grid points\n";
  for (const auto& p : s.at("solutions")) {
    out << indent << "  " << coords_text(p) << '\n';
  }
  if (!s.at("marginal").empty()) {
    out << indent << "  marginal:";
    for (const auto& p : s.at("marginal")) out << ' ' << coords_text(p);
    out << '\n';
  }
  for (const auto& n : s.at("notes")) {
    out << indent << "  note: " << n.get<std::string>() << '\n';
  }
}

void inclusion_text(std::ostream& out, const json& c, const std::string& indent) {
  out << indent << c.at("claim").get<std::string>() << ": "
      << c.at("verdict").get<std::string>();
  if (!c.at("detail").get<std::string>().empty()) {
    out << " (" << c.at("detail").get<std::string>() << ')';
  }
  out << '\n';
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

std::string coords_csv(const json& point) {
  std::string s;
  for (const auto& x : point.at("coords")) {
    if (!s.empty()) s += ' ';
    s += num_text(x);
  }
  return s;
}

}  // namespace

std::string render_text(const json& r) {
  std::ostringstream out;
  header_text(out, r);
  const std::string cmd = r.at("command").get<std::string>();
  if (cmd == "catalog") {
    for (const auto& e : r.at("entries")) {
      out << "  " << std::left << std::setw(34) << e.at("id").get<std::string>()
          << std::setw(11) << e.at("kind").get<std::string>() << std::setw(10)
          << ("[" + e.at("provenance").get<std::string>() + "]")
          << e.at("description").get<std::string>() << '\n';
    }
  } else if (cmd == "check") {
    if (r.contains("point")) {
      out << "at p = " << coords_text(r.at("point")) << ", |W| = "
          << r.at("w_size") << '\n';
      outcome_text(out, r.at("hypothesis"), "  ");
    }
    outcome_text(out, r.at("outcome"), "  ");
  } else if (cmd == "solve") {
    solution_text(out, r, "  ");
  } else if (cmd == "verify") {
    const json& t = r.at("theorem");
    out << "theorem " << t.at("id").get<std::string>() << '\n';
    out << "  hypotheses:\n";
    for (const auto& h : t.at("hypotheses")) {
      outcome_text(out, h.at("outcome"), "    ");
    }
    out << "  claim"
        << (t.at("covered_by_theorem").get<bool>()
                ? ""
                : " (not covered by theorem: hypotheses fail)")
        << ":\n";
    if (t.at("theorem_violated").get<bool>()) {
      out << "    THEOREM VIOLATION on the grid\n";
    }
    inclusion_text(out, t.at("inclusion"), "    ");
    if (!t.at("auxiliary").empty()) {
      out << "  auxiliary:\n";
      for (const auto& c : t.at("auxiliary")) inclusion_text(out, c, "    ");
    }
    for (const auto& [k, s] : t.at("solutions").items()) {
      solution_text(out, s, "  ");
    }
    for (const auto& n : t.at("notes")) {
      out << "  note: " << n.get<std::string>() << '\n';
    }
  } else if (cmd == "replay") {
    out << "replay of " << r.at("property").get<std::string>()
        << ": " << r.at("verdict").get<std::string>()
        << (r.at("reproduced").get<bool>() ? ", reproduced"
                                           : ", NOT reproduced")
        << '\n';
    if (!r.at("replayed").is_null()) witness_text(out, r.at("replayed"), "  ");
  }
  out << "runtime " << r.value("runtime_ms", 0.0) << " ms\n";
  return out.str();
}

std::string render_csv(const json& r) {
  std::ostringstream out;
  const std::string cmd = r.at("command").get<std::string>();
  if (cmd == "catalog") {
    out << "id,kind,provenance,description\n";
    for (const auto& e : r.at("entries")) {
      out << csv_field(e.at("id")) << ',' << csv_field(e.at("kind")) << ','
          << csv_field(e.at("provenance")) << ','
          << csv_field(e.at("description")) << '\n';
    }
  } else if (cmd == "check") {
    out << "property,verdict,samples_checked,margin,threshold\n";
    const json& o = r.at("outcome");
    out << csv_field(o.at("property")) << ',' << o.at("verdict").get<std::string>()
        << ',' << o.at("samples_checked") << ',';
    if (!o.at("witness").is_null()) {
      out << num_text(o.at("witness").at("margin")) << ','
          << num_text(o.at("witness").at("threshold"));
    } else {
      out << ',';
    }
    out << '\n';
  } else if (cmd == "solve") {
    out << "coords,status\n";
    for (const auto& p : r.at("solutions")) {
      bool marginal = false;
      for (const auto& m : r.at("marginal")) marginal |= (m == p);
      out << coords_csv(p) << ',' << (marginal ? "marginal" : "solution")
          << '\n';
    }
    for (const auto& e : r.at("excluded")) {
      out << coords_csv(e.at("point")) << ",excluded\n";
    }
  } else if (cmd == "verify") {
    out << "kind,name,verdict\n";
    const json& t = r.at("theorem");
    for (const auto& h : t.at("hypotheses")) {
      out << "hypothesis," << csv_field(h.at("property")) << ','
          << h.at("outcome").at("verdict").get<std::string>() << '\n';
    }
    out << "claim," << csv_field(t.at("inclusion").at("claim")) << ','
        << t.at("inclusion").at("verdict").get<std::string>() << '\n';
    for (const auto& c : t.at("auxiliary")) {
      out << "auxiliary," << csv_field(c.at("claim")) << ','
          << c.at("verdict").get<std::string>() << '\n';
    }
  } else if (cmd == "replay") {
    out << "property,verdict,reproduced\n"
        << csv_field(r.at("property")) << ','
        << r.at("verdict").get<std::string>() << ','
        << (r.at("reproduced").get<bool>() ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace vvilab
