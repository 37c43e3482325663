// Command-line front end: surface / walls / delta / flips / verify.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wallcross/report.hpp"
#include "wallcross/verify.hpp"

using namespace wallcross;
using nlohmann::json;

namespace {

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  in >> j;
  return j;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ConfigError("cannot open output file '" + out_path + "'");
  out << text;
}

int run_verify(const VerifyOptions& opts) {
  bool all_pass = true;
  for (const auto& crit : run_all_criteria(opts)) {
    std::cout << "== criterion " << crit.number << ": " << crit.name << "  ["
              << crit.seconds << " s]\n";
    for (const auto& c : crit.checks) {
      std::cout << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
      if (!c.pass) std::cout << "       " << c.detail << "\n";
    }
    all_pass = all_pass && crit.pass;
  }
  std::cout << (all_pass ? "all identity checks passed\n"
                         : "some identity checks FAILED\n");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wall/chamber and transition-term calculator for rank-two "
               "moduli on rational surfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_path, format;
  bool km = false;
  Int oracle_radius = 0;
  std::uint64_t seed = 0;

  app.add_option("--config", config_path, "JSON job configuration file");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "json | csv | md");
  app.add_flag("--km-normalization", km,
               "rescale degree-e terms by 2^e (Kotschick-Morgan mu-map)");
  app.add_option("--oracle-radius", oracle_radius,
                 "cross-check wall enumeration against the box oracle");
  app.add_option("--seed", seed, "seed for the randomized checks in `verify`");

  auto* sc_surface = app.add_subcommand("surface", "echo surface invariants");
  auto* sc_walls = app.add_subcommand("walls", "enumerate walls on the segment");
  auto* sc_delta = app.add_subcommand("delta", "transition term across the segment");
  auto* sc_flips = app.add_subcommand("flips", "flip schedule and critical values");
  auto* sc_verify = app.add_subcommand("verify", "run the full identity suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sc_verify->parsed()) {
      VerifyOptions opts;
      if (seed) opts.seed = seed;
      if (oracle_radius) opts.oracle_radius = oracle_radius;
      return run_verify(opts);
    }

    if (config_path.empty()) throw ConfigError("--config is required");
    json jcfg = load_config(config_path);

    if (sc_surface->parsed()) {
      LatticePtr lat = surface_from_json(jcfg.contains("surface") ? jcfg["surface"] : jcfg);
      emit(dump_json(surface_report(lat)), out_path);
      return 0;
    }

    JobConfig cfg = job_from_json(jcfg);
    if (km) cfg.km_normalization = true;
    if (!format.empty()) cfg.format = format;

    if (sc_walls->parsed()) {
      WallType wt = cfg.wall_type();
      auto result = enumerate_walls(cfg.divisor(cfg.L_minus), cfg.divisor(cfg.L_plus), wt);
      if (oracle_radius > 0) {
        std::set<std::vector<Int>> a, b;
        for (const auto& w : result.walls)
          for (const auto& cls : w.classes)
            a.insert(std::vector<Int>(cls.zeta.coords.data(),
                                      cls.zeta.coords.data() + cls.zeta.coords.size()));
        for (const auto& v :
             oracle_enumerate_box(cfg.divisor(cfg.L_minus), cfg.divisor(cfg.L_plus), wt,
                                  oracle_radius))
          b.insert(std::vector<Int>(v.data(), v.data() + v.size()));
        if (a != b) {
          std::cerr << "box oracle disagreement (radius " << oracle_radius << ")\n";
          return 2;
        }
      }
      emit(dump_json(walls_report(cfg, result)), out_path);
      return 0;
    }

    if (sc_delta->parsed()) {
      WallType wt = cfg.wall_type();
      auto report = donaldson_difference(cfg.divisor(cfg.L_minus), cfg.divisor(cfg.L_plus),
                                         wt, cfg.divisor(cfg.alpha), cfg.insert_point);
      if (cfg.format == "csv")
        emit(transition_report_csv(cfg, report), out_path);
      else if (cfg.format == "md")
        emit(transition_report_markdown(cfg, report), out_path);
      else
        emit(dump_json(transition_report_json(cfg, report)), out_path);
      return 0;
    }

    if (sc_flips->parsed()) {
      if (cfg.format == "md")
        emit(flips_report_markdown(cfg), out_path);
      else
        emit(dump_json(flips_report(cfg)), out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
