#include "wallcross/engine.hpp"

#include <numeric>

namespace wallcross {

namespace {

GradedClass slant_alpha_sum(const SymbolicVariety& v) {
  // [Z_{ell-k}]/alpha + [Z_k]/alpha on H_{ell-k} x H_k ([Z_0]/alpha = 0,
  // [Z_1]/alpha = alpha).
  switch (v.kind()) {
    case VarietyKind::Point: return GradedClass(v);  // zero
    case VarietyKind::Surface: return GradedClass::generator(v, Gen::A);
    case VarietyKind::Hilb2: return GradedClass::generator(v, Gen::SA);
    case VarietyKind::SurfaceSquare:
      return GradedClass::generator(v, Gen::T1A) + GradedClass::generator(v, Gen::T2A);
  }
  throw std::logic_error("unreachable");
}

GradedClass slant_point_sum(const SymbolicVariety& v) {
  // ([Z_{ell-k}] + [Z_k])/x ; [Z_1]/x is the point class, [Z_2]/x is X_x.
  switch (v.kind()) {
    case VarietyKind::Point: return GradedClass(v);  // zero
    case VarietyKind::Surface: return GradedClass::generator(v, Gen::PT);
    case VarietyKind::Hilb2: return GradedClass::generator(v, Gen::XX);
    case VarietyKind::SurfaceSquare:
      return GradedClass::generator(v, Gen::T1PT) + GradedClass::generator(v, Gen::T2PT);
  }
  throw std::logic_error("unreachable");
}

/// Total Chern class of E_zeta^{ell-k,k} (+) (E_{-zeta}^{k,ell-k})^v on
/// H_{ell-k} x H_k. The -zeta bundle lives over H_k x H_{ell-k} and is
/// pulled back through the factor swap.
GradedClass whitney_pair(int ell, int k) {
  BundleClassData plus = chern_of_E(ell - k, k, ZetaSign::Plus);
  BundleClassData minus = chern_of_E(k, ell - k, ZetaSign::Minus);
  minus.total_chern = minus.total_chern.swap_factors();
  return sum_chern(plus, dual_chern(minus)).total_chern;
}

void check_ell_j(int ell, int j, int jmax) {
  if (ell < 0 || ell > 2)
    throw NotImplementedError("S_j/T_j closed data only available for ell <= 2");
  if (j < 0 || j > jmax) throw std::domain_error("j out of range");
}

}  // namespace

PairingPoly compute_S_term(int ell, int k, int j) {
  check_ell_j(ell, j, 2 * ell);
  if (k < 0 || k > ell) throw std::domain_error("k out of range");
  const SymbolicVariety& v = parameter_variety(ell - k, k);
  BundleClassData pair{std::nullopt, whitney_pair(ell, k)};
  GradedClass s = segre_from_chern(pair).component(2 * ell - j);
  GradedClass m = s * slant_alpha_sum(v).pow(j);
  return evaluate_top(v, m.component(v.top_degree()));
}

PairingPoly compute_S_j(int ell, int j, bool negate) {
  check_ell_j(ell, j, 2 * ell);
  PairingPoly total;
  for (int k = 0; k <= ell; ++k) total += compute_S_term(ell, k, j);
  return negate ? total.negate_zeta() : total;
}

PairingPoly compute_T_term(int ell, int k, int j) {
  check_ell_j(ell, j, std::max(2 * ell - 2, 0));
  if (k < 0 || k > ell) throw std::domain_error("k out of range");
  if (2 * ell - 2 - j < 0) return PairingPoly();
  const SymbolicVariety& v = parameter_variety(ell - k, k);
  BundleClassData pair{std::nullopt, whitney_pair(ell, k)};
  GradedClass s = segre_from_chern(pair).component(2 * ell - 2 - j);
  GradedClass m = s * slant_point_sum(v) * slant_alpha_sum(v).pow(j);
  return evaluate_top(v, m.component(v.top_degree()));
}

PairingPoly compute_T_j(int ell, int j, bool negate) {
  check_ell_j(ell, j, std::max(2 * ell - 2, 0));
  PairingPoly total;
  for (int k = 0; k <= ell; ++k) total += compute_T_term(ell, k, j);
  return negate ? total.negate_zeta() : total;
}

PairingPoly slant_oracle(int k, const std::array<int, 3>& multidegree) {
  if (k < 1 || k > 4) throw NotImplementedError("slant oracle supports 1 <= k <= 4");
  const int total = multidegree[0] + multidegree[1] + multidegree[2];
  if (total != 2 * k)
    throw std::domain_error("slant oracle needs total degree 2k");

  // The 2k degree-one factors, as surface symbols in a fixed order.
  std::vector<SurfSym> factors;
  for (int s = 0; s < 3; ++s)
    for (int i = 0; i < multidegree[s]; ++i) factors.push_back(static_cast<SurfSym>(s));

  // Distribute each factor into one of the k slots of X^k; a slot
  // contributes only when it receives exactly two factors (their pairing).
  std::vector<int> slot(factors.size(), 0);
  PairingPoly sum;
  while (true) {
    std::array<int, 4> load{};
    for (size_t i = 0; i < factors.size(); ++i) ++load[slot[i]];
    bool ok = true;
    for (int s = 0; s < k; ++s) ok = ok && load[s] == 2;
    if (ok) {
      PairingPoly term(rat(1));
      for (int s = 0; s < k; ++s) {
        SurfSym a{}, b{};
        int seen = 0;
        for (size_t i = 0; i < factors.size(); ++i) {
          if (slot[i] != s) continue;
          (seen == 0 ? a : b) = factors[i];
          ++seen;
        }
        term *= pair_symbol(a, b);
      }
      sum += term;
    }
    // odometer
    size_t pos = 0;
    while (pos < slot.size() && ++slot[pos] == k) slot[pos++] = 0;
    if (pos == slot.size()) break;
  }
  Rational scale(1);
  for (int i = 2; i <= k; ++i) scale /= i;
  sum *= scale;
  return sum;
}

}  // namespace wallcross
