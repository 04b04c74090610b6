#include "vvilab/runner.hpp"

#include <chrono>
#include <fstream>

#include "vvilab/errors.hpp"

namespace vvilab {

namespace {

struct Prepared {
  ResolvedInstance inst;
  CheckContext ctx;
};

Prepared prepare(const RunConfig& cfg) {
  ResolvedInstance inst = resolve(build_instance(cfg), cfg.sched);
  CheckContext ctx = make_context(cfg, inst);
  return {std::move(inst), std::move(ctx)};
}

json base_report(const std::string& command, const RunConfig& cfg,
                 const ResolvedInstance& inst) {
  json r = envelope(command);
  r["instance"] = to_json(inst.spec);
  r["config"] = config_json(cfg, inst.spec.mode);
  return r;
}

RunResult cmd_catalog(const RunConfig& cfg) {
  json r = envelope("catalog");
  r["config"] = config_json(cfg, cfg.mode.value_or(GeodesicMode::paper));
  r["entries"] = json::array();
  for (const auto& e : catalog_listing()) r["entries"].push_back(to_json(e));
  return {r, kExitHolds};
}

RunResult cmd_check(const RunConfig& cfg) {
  if (cfg.property.empty()) throw ConfigError("check needs --property");
  Prepared run = prepare(cfg);
  json r = base_report("check", cfg, run.inst);
  if (cfg.property == "w-set-convex") {
    if (cfg.point.empty()) throw ConfigError("w-set-convex needs --point");
    const Point p = run.inst.manifold.point(parse_coords(cfg.point));
    const WSetOutcome w = check_w_set_convex(run.inst, p, run.ctx);
    r["property"] = "w-set-convex";
    r["point"] = to_json(p);
    r["w_size"] = w.w_size;
    r["hypothesis"] = to_json(w.hypothesis);
    r["outcome"] = to_json(w.conclusion);
    return {r, w.conclusion.holds() ? kExitHolds : kExitViolation};
  }
  const Property prop = parse_property(cfg.property);
  const CheckOutcome o = run_check(prop, run.ctx, run.inst.spec.feasible,
                                   run.inst.phi(), run.inst.h());
  r["property"] = to_string(prop);
  r["outcome"] = to_json(o);
  return {r, o.holds() ? kExitHolds : kExitViolation};
}

RunResult cmd_solve(const RunConfig& cfg) {
  Prepared run = prepare(cfg);
  const Problem problem = parse_problem(cfg.problem);
  const SolutionSet s = solve(run.inst, problem, cfg.tol);
  json r = base_report("solve", cfg, run.inst);
  r.update(to_json(s));
  const DomainSampler& f = run.inst.spec.feasible;
  json box = json::array();
  for (const auto& [lo, hi] : f.box) box.push_back({lo, hi});
  r["grid"] = {{"size", s.grid_size},
               {"grid_n", f.grid_n},
               {"spacing", to_string(f.spacing)},
               {"box", box}};
  return {r, kExitHolds};
}

RunResult cmd_verify(const RunConfig& cfg) {
  if (cfg.theorem.empty()) throw ConfigError("verify needs --theorem");
  Prepared run = prepare(cfg);
  const TheoremReport t = verify_theorem(cfg.theorem, run.inst, run.ctx);
  json r = base_report("verify", cfg, run.inst);
  r["theorem"] = to_json(t);
  return {r, t.inclusion.verdict == InclusionVerdict::confirmed_on_grid
                 ? kExitHolds
                 : kExitViolation};
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read report '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("'" + path + "' is not JSON: " + e.what());
  }
}

// The recorded run settings, not the current flags, drive a replay.
RunResult cmd_replay(const RunConfig& cfg) {
  if (cfg.replay.empty()) throw ConfigError("replay needs a report file");
  const json src = read_json(cfg.replay);
  try {
    if (src.value("schema", "") != kSchemaVersion) {
      throw ConfigError("'" + cfg.replay + "' is not a " +
                        std::string(kSchemaVersion) + " report");
    }
    const json* wj = nullptr;
    if (src.contains("outcome") && src.at("outcome").contains("witness") &&
        !src.at("outcome").at("witness").is_null()) {
      wj = &src.at("outcome").at("witness");
    } else if (src.contains("witness") && !src.at("witness").is_null()) {
      wj = &src.at("witness");
    }
    const bool rerun = !wj && src.contains("outcome") &&
                       src.contains("property");
    if (!wj && !rerun) {
      throw ConfigError("'" + cfg.replay + "' holds no witness or check");
    }

    RunConfig rc;
    const json& c = src.at("config");
    rc.tol = c.at("tol").get<double>();
    rc.seed = c.at("seed").get<std::uint64_t>();
    rc.sched.t0 = c.at("dini").at("t0").get<double>();
    rc.sched.ratio = c.at("dini").at("ratio").get<double>();
    rc.sched.steps = c.at("dini").at("steps").get<int>();
    rc.hconvex_form = parse_hconvex_form(c.at("hconvex_form").get<std::string>());
    ResolvedInstance inst =
        resolve(instance_from_json(src.at("instance")), rc.sched);
    const CheckContext ctx = make_context(rc, inst);

    std::optional<Witness> original;
    std::optional<Witness> again;
    bool reproduced = false;
    if (wj) {
      original = witness_from_json(*wj);
      if (original->property == "w-set-convex") {
        again = check_w_set_convex(inst, original->points.at("p"), ctx)
                    .conclusion.witness;
      } else {
        again = replay_witness(*original, ctx, inst.phi(), inst.h());
      }
      reproduced = again && *again == *original;
    } else {
      // No witness: re-run the recorded check and compare verdicts.
      const std::string prop = src.at("property").get<std::string>();
      if (prop == "w-set-convex") {
        again = check_w_set_convex(inst, point_from_json(src.at("point")), ctx)
                    .conclusion.witness;
      } else {
        again = run_check(parse_property(prop), ctx, inst.spec.feasible,
                          inst.phi(), inst.h())
                    .witness;
      }
      reproduced = src.at("outcome").at("verdict").get<std::string>() ==
                   to_string(again ? Verdict::counterexample
                                   : Verdict::holds_on_samples);
    }

    json r = envelope("replay");
    r["instance"] = src.at("instance");
    r["config"] = c;
    r["source"] = cfg.replay;
    r["property"] = original ? original->property
                             : src.at("property").get<std::string>();
    r["witness"] = original ? to_json(*original) : json(nullptr);
    r["replayed"] = again ? to_json(*again) : json(nullptr);
    r["verdict"] = to_string(again ? Verdict::counterexample
                                   : Verdict::holds_on_samples);
    r["reproduced"] = reproduced;
    return {r, !reproduced ? kExitError
                           : (again ? kExitViolation : kExitHolds)};
  } catch (const json::exception& e) {
    throw ConfigError("malformed report '" + cfg.replay + "': " + e.what());
  }
}

}  // namespace

RunResult run_command(const std::string& command, const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  if (command == "catalog") {
    result = cmd_catalog(cfg);
  } else if (command == "check") {
    result = cfg.replay.empty() ? cmd_check(cfg) : cmd_replay(cfg);
  } else if (command == "solve") {
    result = cmd_solve(cfg);
  } else if (command == "verify") {
    result = cmd_verify(cfg);
  } else if (command == "replay") {
    result = cmd_replay(cfg);
  } else {
    throw ConfigError("unknown command '" + command + "'");
  }
  const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - start;
  result.report["runtime_ms"] = elapsed.count();
  return result;
}

std::string format_report(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format == "csv") return render_csv(report);
  if (format == "text") return render_text(report);
  throw ConfigError("unknown format '" + format + "'");
}

}  // namespace vvilab
