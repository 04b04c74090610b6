#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "vvilab/errors.hpp"
#include "vvilab/runner.hpp"

namespace {

using vvilab::KeyValues;

// An `instance` value naming a file pulls that file's settings in beneath
// the settings that referenced it.
KeyValues expand_instance_file(KeyValues kv) {
  const auto it = kv.find("instance");
  if (it == kv.end() || !std::filesystem::is_regular_file(it->second)) {
    return kv;
  }
  KeyValues merged = vvilab::read_key_values(it->second);
  kv.erase("instance");
  for (auto& [k, v] : kv) merged[k] = v;
  return merged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vector variational inequality laboratory on Hadamard manifolds",
               "vvilab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vvilab::kToolVersion));

  std::string config_file;
  std::map<std::string, std::string> flags;
  const auto flag = [&](const std::string& name, const std::string& help) {
    return app.add_option_function<std::string>(
        "--" + name,
        [&flags, name](const std::string& v) { flags[name] = v; }, help);
  };

  app.add_option("--config", config_file, "key = value run configuration file")
      ->check(CLI::ExistingFile);
  flag("instance", "catalog instance id or instance config file");
  flag("manifold", "inline instance manifold, e.g. positive_orthant(1)");
  flag("bounds", "feasible box, lo:hi or lo:hi;lo:hi per axis");
  flag("grid", "grid points per axis (>= 2)");
  flag("spacing", "grid spacing: linear or log");
  flag("extra-random", "seeded random samples added to the grid");
  flag("objective", "objective id");
  flag("bifunction", "bifunction id");
  flag("mode", "geodesic parameterization: paper or constant-speed");
  flag("tol", "zero band of the cone order (default 1e-9)");
  flag("seed", "random seed (default 42)");
  flag("dini-t0", "first step of the Dini schedule (default 1e-2)");
  flag("dini-ratio", "ratio of the Dini schedule (default 0.5)");
  flag("dini-steps", "steps of the Dini schedule (default 20)");
  flag("hconvex-form", "h-convexity form: componentwise or cone");
  flag("format", "output format: text, json or csv");
  flag("out", "write the report to this file");

  auto* catalog = app.add_subcommand("catalog", "list built-in instances");
  auto* check = app.add_subcommand("check", "check one property on an instance");
  auto* solve = app.add_subcommand("solve", "solve a problem on the grid");
  auto* verify = app.add_subcommand("verify", "verify a theorem on an instance");
  auto* replay = app.add_subcommand("replay", "replay a witness from a report");
  for (auto* sub : {catalog, check, solve, verify, replay}) sub->fallthrough();

  check->add_option_function<std::string>(
      "--property", [&](const std::string& v) { flags["property"] = v; },
      "property token, or w-set-convex");
  check->add_option_function<std::string>(
      "--point", [&](const std::string& v) { flags["point"] = v; },
      "chart coordinates for w-set-convex, comma separated");
  check->add_option_function<std::string>(
      "--replay", [&](const std::string& v) { flags["replay"] = v; },
      "replay the witness stored in a JSON report");
  solve->add_option_function<std::string>(
      "--problem", [&](const std::string& v) { flags["problem"] = v; },
      "nvvip, mnvvip, nvop-eff or nvop-weak");
  verify->add_option_function<std::string>(
      "--theorem", [&](const std::string& v) { flags["theorem"] = v; },
      "theorem id");
  replay->add_option_function<std::string>(
      "report", [&](const std::string& v) { flags["replay"] = v; },
      "JSON report holding a witness")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : vvilab::kExitError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  vvilab::RunConfig cfg;
  try {
    KeyValues file_kv;
    if (!config_file.empty()) {
      file_kv = expand_instance_file(vvilab::read_key_values(config_file));
    }
    cfg.apply(file_kv);
    cfg.apply(expand_instance_file(flags));

    const vvilab::RunResult result = vvilab::run_command(command, cfg);
    const std::string text = vvilab::format_report(result.report, cfg.format);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out);
      if (!out) throw vvilab::ConfigError("cannot write '" + cfg.out + "'");
      out << text;
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "vvilab: " << e.what() << '\n';
    return vvilab::kExitError;
  }
}
