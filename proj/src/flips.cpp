#include "wallcross/flips.hpp"

#include <algorithm>
#include <map>

namespace wallcross {

KClassification classify_k_semistable(const ExtensionDatum& datum, Int ell, Int k) {
  if (datum.universal) return KClassification::UniversallySemistableExcluded;
  if (datum.n1 < 0 || datum.n2 < 0 || datum.n1 + datum.n2 != ell)
    throw std::domain_error("extension datum lengths must satisfy n1 + n2 = ell");
  if (datum.direction == ZetaDirection::Plus) {
    // sub-line-bundle from the +zeta side: need ell(Z_2) <= k
    return datum.n2 <= k ? KClassification::Accepted : KClassification::Rejected;
  }
  // -zeta side: need ell(Z_1) >= k + 1
  return datum.n1 >= k + 1 ? KClassification::Accepted : KClassification::Rejected;
}

namespace {

bool critical_at(const ZetaMultiple& zm, const Rational& t) {
  Rational v = (Rational(static_cast<long>(zm.ell)) + zm.r * t) / 2;
  v.canonicalize();
  if (!is_integer(v)) return false;
  return Rational(-1) <= v && v <= Rational(static_cast<long>(zm.ell));
}

}  // namespace

KOfT k_of_t(const Rational& t, const std::vector<ZetaMultiple>& multiples) {
  Critical crit;
  for (size_t i = 0; i < multiples.size(); ++i)
    if (critical_at(multiples[i], t)) crit.indices.push_back(static_cast<int>(i));
  if (!crit.indices.empty()) return crit;
  KVector kv;
  for (const auto& zm : multiples) {
    Rational v = (Rational(static_cast<long>(zm.ell)) + zm.r * t) / 2;
    v.canonicalize();
    kv.k.push_back(floor_rational(v));
  }
  return kv;
}

std::vector<CriticalValue> critical_values(const std::vector<ZetaMultiple>& multiples) {
  std::map<Rational, std::vector<int>> by_t;
  for (size_t i = 0; i < multiples.size(); ++i) {
    const auto& zm = multiples[i];
    if (!(zm.r > 0)) throw std::domain_error("zeta multiples must be positive");
    // (ell + r t)/2 = v integral, -1 <= v <= ell  =>  t = (2v - ell)/r
    for (Int v = -1; v <= zm.ell; ++v) {
      Rational t = (Rational(2) * static_cast<long>(v) - static_cast<long>(zm.ell)) / zm.r;
      t.canonicalize();
      by_t[t].push_back(static_cast<int>(i));
    }
  }
  std::vector<CriticalValue> out;
  for (auto& [t, idx] : by_t) out.push_back({t, std::move(idx)});
  return out;
}

std::vector<FlipStage> flip_schedule(const WallClassData& wcd, const WallType& wt) {
  const Int d = wt.d();
  const Int ell = wcd.ell;
  std::vector<FlipStage> stages;

  const bool degenerate_plus = (wcd.h_plus + ell == 0);
  const bool degenerate_minus = (wcd.h_minus + ell == 0);
  if (degenerate_plus && degenerate_minus)
    throw WallError("inconsistent wall data: both sides degenerate");

  if (degenerate_plus || degenerate_minus) {
    if (ell != 0)
      throw WallError("degenerate wall data with ell > 0 is inconsistent");
    FlipStage st;
    st.k = 0;
    st.center_dim = d;  // E^{0,0} on the other side is a P^{-p-3} component
    st.fiber_plus = wcd.n_plus;
    st.fiber_minus = wcd.n_minus;
    st.moduli_dim = d;
    st.adds_component = degenerate_plus;     // M_+ gains E_{-zeta}^{0,0}
    st.removes_component = degenerate_minus; // M_- loses E_{zeta}^{0,0}
    stages.push_back(st);
    return stages;
  }

  // consistency: N_zeta + N_{-zeta} + 2 ell + 1 = d
  if (wcd.n_plus + wcd.n_minus + 2 * ell + 1 != d)
    throw WallError("inconsistent wall data: dimension identity fails");

  for (Int k = ell; k >= 0; --k) {
    FlipStage st;
    st.k = k;
    st.center_dim = 3 * ell + wcd.h_plus - 1;
    st.fiber_plus = wcd.n_plus;
    st.fiber_minus = wcd.n_minus;
    st.moduli_dim = d;
    stages.push_back(st);
  }
  return stages;
}

}  // namespace wallcross
