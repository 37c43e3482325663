#pragma once

#include <string>

#include <json.hpp>

#include "wallcross/flips.hpp"
#include "wallcross/transition.hpp"

namespace wallcross {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Surface descriptor: {"preset": "...", "params": {...}} or
/// {"gram": [[...]], "K": [...], "ample": [...]}.
LatticePtr surface_from_json(const nlohmann::json& j);

/// A batch job: surface, type (Delta, c), polarization segment, insertion.
struct JobConfig {
  LatticePtr surface;
  IVec delta;
  Int c = 0;
  IVec L_minus, L_plus;
  IVec alpha;
  bool insert_point = false;
  bool km_normalization = false;
  std::string format = "json";  // json | csv | md

  WallType wall_type() const;
  DivisorClass divisor(const IVec& v) const;
};

JobConfig job_from_json(const nlohmann::json& j);

nlohmann::json surface_report(const LatticePtr& lat);
nlohmann::json walls_report(const JobConfig& cfg, const WallSearchResult& result);
nlohmann::json transition_report_json(const JobConfig& cfg, const TransitionReport& report);
nlohmann::json flips_report(const JobConfig& cfg);

std::string transition_report_csv(const JobConfig& cfg, const TransitionReport& report);
std::string transition_report_markdown(const JobConfig& cfg, const TransitionReport& report);
std::string flips_report_markdown(const JobConfig& cfg);

/// Deterministic rendering: sorted keys, canonical "p/q" rationals.
std::string dump_json(const nlohmann::json& j);

}  // namespace wallcross
