#include "wallcross/report.hpp"

#include <sstream>

namespace wallcross {

using nlohmann::json;

namespace {

IVec vec_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + " must be an integer array");
  IVec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw ConfigError(std::string(what) + " must be integral");
    v(static_cast<Eigen::Index>(i)) = j[i].get<Int>();
  }
  return v;
}

json vec_to_json(const IVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json rational_to_json(const Rational& q) { return to_string(q); }

json poly_to_json(const WallCrossingPolynomial& p, bool km, Int k_squared) {
  json out;
  out["kind"] = (p.kind == TransitionKind::MuPower) ? "mu_power" : "mu_nu";
  out["sign"] = p.sign;
  out["scale"] = to_string(p.scale);
  json coeffs = json::array();
  Rational km_factor = km ? pow_rational(rat(2), p.alpha_exponent()) : rat(1);
  for (const auto& g : p.gammas()) {
    PairingPoly num =
        g.substitute(Sym::KK, rat(k_squared)).substitute(Sym::CHI, rat(1)) * km_factor;
    coeffs.push_back(num.to_string());
  }
  out["coeffs"] = coeffs;
  return out;
}

}  // namespace

LatticePtr surface_from_json(const json& j) {
  if (j.contains("preset")) {
    const std::string preset = j.at("preset").get<std::string>();
    const json params = j.value("params", json::object());
    if (preset == "P2") return SurfaceLattice::projective_plane();
    if (preset == "Fe") return SurfaceLattice::hirzebruch(params.value("e", 0));
    if (preset == "BlnP2") return SurfaceLattice::blowup_plane(params.value("n", 1));
    // convenience aliases: "F0", "F1", ..., "Bl1P2", "Bl2P2", ...
    if (preset.size() >= 2 && preset[0] == 'F' && isdigit(preset[1]))
      return SurfaceLattice::hirzebruch(std::stoi(preset.substr(1)));
    if (preset.rfind("Bl", 0) == 0 && preset.size() > 4 &&
        preset.substr(preset.size() - 2) == "P2")
      return SurfaceLattice::blowup_plane(std::stoi(preset.substr(2, preset.size() - 4)));
    throw ConfigError("unknown preset '" + preset + "'");
  }
  if (j.contains("gram")) {
    const json& gj = j.at("gram");
    const int n = static_cast<int>(gj.size());
    IMat g(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(gj[i].size()) != n) throw ConfigError("gram must be square");
      for (int k = 0; k < n; ++k) g(i, k) = gj[i][k].get<Int>();
    }
    IVec K = vec_from_json(j.at("K"), "K");
    IVec ample = vec_from_json(j.at("ample"), "ample");
    return SurfaceLattice::custom(g, K, ample, j.value("name", "custom"));
  }
  throw ConfigError("surface descriptor needs 'preset' or 'gram'");
}

WallType JobConfig::wall_type() const {
  return WallType(DivisorClass(surface, delta), c);
}

DivisorClass JobConfig::divisor(const IVec& v) const { return DivisorClass(surface, v); }

JobConfig job_from_json(const json& j) {
  JobConfig cfg;
  cfg.surface = surface_from_json(j.at("surface"));
  cfg.delta = vec_from_json(j.at("delta"), "delta");
  cfg.c = j.at("c").get<Int>();
  if (j.contains("L_minus")) cfg.L_minus = vec_from_json(j.at("L_minus"), "L_minus");
  if (j.contains("L_plus")) cfg.L_plus = vec_from_json(j.at("L_plus"), "L_plus");
  if (j.contains("alpha")) cfg.alpha = vec_from_json(j.at("alpha"), "alpha");
  cfg.insert_point = j.value("insert_point", false);
  const std::string norm = j.value("normalization", "paper");
  if (norm == "km") cfg.km_normalization = true;
  else if (norm != "paper") throw ConfigError("normalization must be 'paper' or 'km'");
  cfg.format = j.value("output", "json");
  const int r = cfg.surface->rank();
  for (const IVec* v : {&cfg.delta, &cfg.L_minus, &cfg.L_plus, &cfg.alpha})
    if (v->size() != 0 && v->size() != r)
      throw ConfigError("vector length does not match surface rank");
  return cfg;
}

json surface_report(const LatticePtr& lat) {
  json out;
  out["name"] = lat->name();
  out["rank"] = lat->rank();
  out["signature"] = json::array({1, lat->rank() - 1});
  json gram = json::array();
  for (int i = 0; i < lat->rank(); ++i) {
    json row = json::array();
    for (int k = 0; k < lat->rank(); ++k) row.push_back(lat->gram()(i, k));
    gram.push_back(row);
  }
  out["gram"] = gram;
  out["K"] = vec_to_json(lat->canonical());
  out["K2"] = lat->canonical_square();
  out["chi"] = lat->euler_char_structure_sheaf();
  out["reference_ample"] = vec_to_json(lat->reference_ample());
  out["anticanonical_effective_guaranteed"] = lat->anticanonical_effective_guaranteed();
  return out;
}

json walls_report(const JobConfig& cfg, const WallSearchResult& result) {
  WallType wt = cfg.wall_type();
  json out;
  out["surface"] = cfg.surface->name();
  out["delta"] = vec_to_json(cfg.delta);
  out["c"] = cfg.c;
  out["p"] = wt.p();
  out["d"] = wt.d();
  out["L_minus"] = vec_to_json(cfg.L_minus);
  out["L_plus"] = vec_to_json(cfg.L_plus);
  json walls = json::array();
  for (const Wall& w : result.walls) {
    json jw;
    jw["primitive"] = vec_to_json(w.primitive);
    jw["t"] = rational_to_json(w.t);
    jw["coincident_crossing"] = w.coincident_crossing;
    // the smallest integral type-(Delta,c) class on the wall carries the data
    const WallClassData& first = w.classes.front();
    jw["zeta"] = vec_to_json(first.zeta.coords);
    jw["ell"] = first.ell;
    jw["h_plus"] = first.h_plus;
    jw["h_minus"] = first.h_minus;
    jw["N_plus"] = first.n_plus;
    jw["N_minus"] = first.n_minus;
    jw["degenerate"] = first.degenerate;
    json cls = json::array();
    for (const auto& c : w.classes) cls.push_back(vec_to_json(c.zeta.coords));
    jw["classes_on_wall"] = cls;
    walls.push_back(jw);
  }
  out["walls"] = walls;
  out["warnings"] = result.warnings;
  return out;
}

json transition_report_json(const JobConfig& cfg, const TransitionReport& report) {
  json out;
  out["surface"] = cfg.surface->name();
  out["delta"] = vec_to_json(cfg.delta);
  out["c"] = cfg.c;
  out["alpha"] = vec_to_json(cfg.alpha);
  out["insert_point"] = cfg.insert_point;
  out["normalization"] = cfg.km_normalization ? "km" : "paper";
  json walls = json::array();
  Rational total(0);
  for (const auto& wc : report.walls) {
    json jw;
    jw["zeta"] = vec_to_json(wc.wall.classes.front().zeta.coords);
    jw["t"] = rational_to_json(wc.wall.t);
    jw["sign"] = wc.delta_sign;
    json polys = json::array();
    for (const auto& p : wc.class_polys)
      polys.push_back(
          poly_to_json(p, cfg.km_normalization, cfg.surface->canonical_square()));
    jw["terms"] = polys;
    // flatten the first class's coefficients for the simple single-class case
    jw["coeffs"] = polys.empty() ? json::array() : polys[0]["coeffs"];
    Rational v = wc.value;
    if (cfg.km_normalization && !wc.class_polys.empty())
      v *= pow_rational(rat(2), wc.class_polys.front().alpha_exponent());
    v.canonicalize();
    jw["value"] = rational_to_json(v);
    total += v;
    total.canonicalize();
    walls.push_back(jw);
  }
  out["walls"] = walls;
  out["total"] = rational_to_json(total);
  out["warnings"] = report.warnings;
  return out;
}

json flips_report(const JobConfig& cfg) {
  WallType wt = cfg.wall_type();
  WallSearchResult search =
      enumerate_walls(cfg.divisor(cfg.L_minus), cfg.divisor(cfg.L_plus), wt);
  json out;
  out["surface"] = cfg.surface->name();
  out["delta"] = vec_to_json(cfg.delta);
  out["c"] = cfg.c;
  json walls = json::array();
  for (const Wall& w : search.walls) {
    json jw;
    jw["primitive"] = vec_to_json(w.primitive);
    jw["t"] = rational_to_json(w.t);
    json stages_all = json::array();
    json crit_all = json::array();
    // zeta multiples on this wall, r_i relative to the first class
    std::vector<ZetaMultiple> multiples;
    const IVec& base = w.classes.front().zeta.coords;
    Int base_mult = 0;
    for (Eigen::Index i = 0; i < base.size(); ++i)
      if (w.primitive(i) != 0) { base_mult = base(i) / w.primitive(i); break; }
    for (const auto& cls : w.classes) {
      Int m = 0;
      for (Eigen::Index i = 0; i < base.size(); ++i)
        if (w.primitive(i) != 0) { m = cls.zeta.coords(i) / w.primitive(i); break; }
      multiples.push_back({make_rational(m, base_mult), cls.ell});
      json stages = json::array();
      for (const FlipStage& st : flip_schedule(cls, wt)) {
        json js;
        js["k"] = st.k;
        js["center_dim"] = st.center_dim;
        js["fiber_dims"] = json::array({st.fiber_plus, st.fiber_minus});
        js["moduli_dim"] = st.moduli_dim;
        js["adds_component"] = st.adds_component;
        js["removes_component"] = st.removes_component;
        stages.push_back(js);
      }
      json jc;
      jc["zeta"] = vec_to_json(cls.zeta.coords);
      jc["stages"] = stages;
      stages_all.push_back(jc);
    }
    for (const CriticalValue& cv : critical_values(multiples)) {
      json jc;
      jc["t"] = rational_to_json(cv.t);
      jc["indices"] = cv.indices;
      crit_all.push_back(jc);
    }
    jw["classes"] = stages_all;
    jw["critical_values"] = crit_all;
    walls.push_back(jw);
  }
  out["walls"] = walls;
  out["warnings"] = search.warnings;
  return out;
}

std::string transition_report_csv(const JobConfig&, const TransitionReport& report) {
  std::ostringstream os;
  os << "zeta,t,ell,h_plus,sign,value\n";
  for (const auto& wc : report.walls) {
    const auto& first = wc.wall.classes.front();
    os << "\"";
    for (Eigen::Index i = 0; i < first.zeta.coords.size(); ++i)
      os << (i ? " " : "") << first.zeta.coords(i);
    os << "\"," << to_string(wc.wall.t) << "," << first.ell << "," << first.h_plus << ","
       << wc.delta_sign << "," << to_string(wc.value) << "\n";
  }
  os << "total,,,,," << to_string(report.total) << "\n";
  return os.str();
}

std::string transition_report_markdown(const JobConfig&, const TransitionReport& report) {
  std::ostringstream os;
  os << "| zeta | t | ell | h(zeta) | sign | value |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& wc : report.walls) {
    const auto& first = wc.wall.classes.front();
    os << "| (";
    for (Eigen::Index i = 0; i < first.zeta.coords.size(); ++i)
      os << (i ? "," : "") << first.zeta.coords(i);
    os << ") | " << to_string(wc.wall.t) << " | " << first.ell << " | " << first.h_plus
       << " | " << wc.delta_sign << " | " << to_string(wc.value) << " |\n";
  }
  os << "\n**total: " << to_string(report.total) << "**\n";
  return os.str();
}

std::string flips_report_markdown(const JobConfig& cfg) {
  json j = flips_report(cfg);
  std::ostringstream os;
  for (const auto& jw : j["walls"]) {
    os << "## wall " << jw["primitive"].dump() << " at t = "
       << jw["t"].get<std::string>() << "\n\n";
    for (const auto& jc : jw["classes"]) {
      os << "zeta = " << jc["zeta"].dump() << "\n\n";
      os << "| k | center dim | fibers | moduli dim | component |\n";
      os << "|---|---|---|---|---|\n";
      for (const auto& st : jc["stages"]) {
        std::string comp = st["adds_component"].get<bool>() ? "added"
                           : st["removes_component"].get<bool>() ? "removed" : "-";
        os << "| " << st["k"] << " | " << st["center_dim"] << " | "
           << st["fiber_dims"].dump() << " | " << st["moduli_dim"] << " | " << comp
           << " |\n";
      }
      os << "\n";
    }
    os << "critical values: ";
    bool first = true;
    for (const auto& cv : jw["critical_values"]) {
      os << (first ? "" : ", ") << cv["t"].get<std::string>();
      first = false;
    }
    os << "\n\n";
  }
  return os.str();
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace wallcross
