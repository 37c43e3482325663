#include "wallcross/transition.hpp"

#include <sstream>

namespace wallcross {

namespace {

/// Falling factorial n (n-1) ... (n-k+1); zero when 0 <= n < k.
Rational falling(Int n, Int k) {
  Rational acc(1);
  for (Int i = 0; i < k; ++i) acc *= static_cast<long>(n - i);
  return acc;
}

Rational binom(Int n, Int k) {
  if (k < 0) return Rational(0);
  Rational b = falling(n, k);
  for (Int i = 2; i <= k; ++i) b /= static_cast<long>(i);
  b.canonicalize();
  return b;
}

PairingPoly a_power(int e) {
  // a^e carried as (AZ/2)^e
  if (e < 0) throw TransitionError("negative power of a");
  return PairingPoly::symbol(Sym::AZ, e) * pow_rational(rat(1, 2), e);
}

const PairingPoly kAA = PairingPoly::symbol(Sym::AA);
const PairingPoly kKK = PairingPoly::symbol(Sym::KK);

int parity_sign(Int e) { return (e % 2 == 0) ? 1 : -1; }

void require_small_ell(int ell) {
  if (ell < 0 || ell > 2)
    throw NotImplementedError(
        "closed transition formulas exist only for ell <= 2; use leading_term");
}

}  // namespace

PairingPoly WallCrossingPolynomial::full() const {
  return bracket * (scale * rat(sign));
}

std::vector<PairingPoly> WallCrossingPolynomial::gammas() const {
  const int e = alpha_exponent();
  std::vector<PairingPoly> out;
  PairingPoly residue = bracket;
  for (int i = 0; i <= ell; ++i) {
    const int ae = e - 2 * i;
    if (ae < 0) {
      out.push_back(PairingPoly());
      continue;
    }
    PairingPoly g = bracket.coefficient(Sym::AZ, ae, Sym::AA, i) * pow_rational(rat(2), ae);
    residue -= g * a_power(ae) * PairingPoly::symbol(Sym::AA, i);
    if (g.contains(Sym::AZ) || g.contains(Sym::AA) || g.contains(Sym::AK) ||
        g.contains(Sym::ZK))
      throw TransitionError("basis coefficient contains alpha/zeta.K symbols");
    out.push_back(g);
  }
  if (!residue.is_zero())
    throw TransitionError("transition term is not expressible in the (a, alpha^2) basis: " +
                          residue.to_string());
  return out;
}

Rational WallCrossingPolynomial::evaluate(Int zeta_dot_alpha, Int alpha_sq, Int k_squared,
                                          Int chi) const {
  std::map<Sym, Rational> assign{{Sym::AZ, rat(zeta_dot_alpha)},
                                 {Sym::AA, rat(alpha_sq)},
                                 {Sym::KK, rat(k_squared)},
                                 {Sym::CHI, rat(chi)}};
  return full().evaluate(assign);
}

int orientation_sign(const DivisorClass& delta) {
  const Int e = square(delta) + pair(delta, canonical_class(delta.lattice));
  if (e % 2 != 0)
    throw TransitionError("Delta^2 + Delta.K_X is odd: lattice is not characteristic");
  return parity_sign(e / 2);
}

WallCrossingPolynomial delta_mu_explicit(int d, int ell, int h) {
  require_small_ell(ell);
  if (d < 2 * ell) throw TransitionError("need d >= 2 ell");
  WallCrossingPolynomial w;
  w.d = d;
  w.ell = ell;
  w.kind = TransitionKind::MuPower;
  w.sign = parity_sign(h + ell);
  w.scale = rat(1);
  if (ell == 0) {
    w.bracket = a_power(d);
  } else if (ell == 1) {
    // d(d-1) a^{d-2} alpha^2 + (2 K^2 + 2d + 6) a^d
    PairingPoly g1(falling(d, 2));
    if (!g1.is_zero()) w.bracket += g1 * a_power(d - 2) * kAA;
    w.bracket += (kKK * rat(2) + PairingPoly(rat(2 * d + 6))) * a_power(d);
  } else {
    // degree-two closed form
    PairingPoly g2(falling(d, 4) * rat(1, 2));
    PairingPoly g1 = PairingPoly(binom(d, 2)) * (kKK * rat(4) + PairingPoly(rat(4 * d + 8)));
    PairingPoly g0 = PairingPoly(rat(2 * Int(d) * d + 13 * d + 21)) +
                     kKK * rat(2 * Int(d) + 20) + kKK * kKK * rat(2);
    if (!g2.is_zero()) w.bracket += g2 * a_power(d - 4) * kAA.pow(2);
    if (d >= 2) w.bracket += g1 * a_power(d - 2) * kAA;
    w.bracket += g0 * a_power(d);
  }
  return w;
}

WallCrossingPolynomial delta_nu_explicit(int d, int ell, int h) {
  require_small_ell(ell);
  if (d < 2) throw TransitionError("the point-class insertion needs d >= 2");
  WallCrossingPolynomial w;
  w.d = d;
  w.ell = ell;
  w.kind = TransitionKind::MuNu;
  w.sign = parity_sign(h + ell - 1);
  w.scale = rat(1, 4);
  if (ell == 0) {
    w.bracket = a_power(d - 2);
  } else if (ell == 1) {
    // (d-2)(d-3) a^{d-4} alpha^2 + (2 K^2 + 2d - 18) a^{d-2}
    PairingPoly g1(falling(d - 2, 2));
    if (!g1.is_zero()) w.bracket += g1 * a_power(d - 4) * kAA;
    w.bracket += (kKK * rat(2) + PairingPoly(rat(2 * d - 18))) * a_power(d - 2);
  } else {
    // degree-two closed form, point insertion
    PairingPoly g2(falling(d - 2, 4) * rat(1, 2));
    PairingPoly g1 = PairingPoly(binom(d - 2, 2)) * (kKK * rat(4) + PairingPoly(rat(4 * d - 40)));
    PairingPoly g0 = PairingPoly(rat(2 * Int(d) * d - 35 * d - 99)) +
                     kKK * rat(2 * Int(d) - 28) + kKK * kKK * rat(2);
    if (!g2.is_zero()) w.bracket += g2 * a_power(d - 6) * kAA.pow(2);
    if (!g1.is_zero()) w.bracket += g1 * a_power(d - 4) * kAA;
    w.bracket += g0 * a_power(d - 2);
  }
  return w;
}

namespace {

WallCrossingPolynomial assemble_general(int d, int ell, int h, TransitionKind kind,
                                        const std::vector<PairingPoly>& S,
                                        const std::vector<PairingPoly>* T) {
  require_small_ell(ell);
  if (static_cast<int>(S.size()) != 2 * ell + 1)
    throw TransitionError("S list must have length 2 ell + 1");
  const bool nu = (kind == TransitionKind::MuNu);
  if (!nu && d < 2 * ell) throw TransitionError("need d >= 2 ell");
  if (nu && d < 2) throw TransitionError("the point-class insertion needs d >= 2");

  const Rational zeta_sq = rat(4 * Int(ell) - d - 3);  // zeta^2 = p + 4 ell
  const int e = nu ? d - 2 : d;

  WallCrossingPolynomial w;
  w.d = d;
  w.ell = ell;
  w.kind = kind;
  w.sign = parity_sign(nu ? h + ell - 1 : h + ell);
  w.scale = nu ? rat(1, 4) : rat(1);

  for (int j = 0; j <= 2 * ell; ++j) {
    Rational c = binom(e, j);
    if (c == 0) continue;
    PairingPoly body = S[j];
    if (nu && T && j < static_cast<int>(T->size())) body -= (*T)[j] * rat(4);
    body = body.substitute(Sym::ZZ, zeta_sq);
    if (body.is_zero()) continue;
    w.bracket += PairingPoly(c * rat(parity_sign(j))) * a_power(e - j) * body;
  }

  // The bracket must land in the (a, alpha^2) basis; gammas() enforces it.
  (void)w.gammas();
  return w;
}

}  // namespace

WallCrossingPolynomial delta_mu_general(int d, int ell, int h,
                                        const std::vector<PairingPoly>& S) {
  return assemble_general(d, ell, h, TransitionKind::MuPower, S, nullptr);
}

WallCrossingPolynomial delta_nu_general(int d, int ell, int h,
                                        const std::vector<PairingPoly>& S,
                                        const std::vector<PairingPoly>& T) {
  return assemble_general(d, ell, h, TransitionKind::MuNu, S, &T);
}

WallCrossingPolynomial delta_mu_explicit(const WallType& wt, const WallClassData& wcd) {
  return delta_mu_explicit(static_cast<int>(wt.d()), static_cast<int>(wcd.ell),
                           static_cast<int>(wcd.h_plus));
}
WallCrossingPolynomial delta_nu_explicit(const WallType& wt, const WallClassData& wcd) {
  return delta_nu_explicit(static_cast<int>(wt.d()), static_cast<int>(wcd.ell),
                           static_cast<int>(wcd.h_plus));
}
WallCrossingPolynomial delta_mu_general(const WallType& wt, const WallClassData& wcd,
                                        const std::vector<PairingPoly>& S) {
  return delta_mu_general(static_cast<int>(wt.d()), static_cast<int>(wcd.ell),
                          static_cast<int>(wcd.h_plus), S);
}
WallCrossingPolynomial delta_nu_general(const WallType& wt, const WallClassData& wcd,
                                        const std::vector<PairingPoly>& S,
                                        const std::vector<PairingPoly>& T) {
  return delta_nu_general(static_cast<int>(wt.d()), static_cast<int>(wcd.ell),
                          static_cast<int>(wcd.h_plus), S, T);
}

WallCrossingPolynomial leading_term(int d, int ell, int h) {
  if (d < 2 * ell) throw TransitionError("need d >= 2 ell");
  WallCrossingPolynomial w;
  w.d = d;
  w.ell = ell;
  w.kind = TransitionKind::MuPower;
  w.sign = parity_sign(h + ell);
  w.scale = rat(1);
  Rational c = falling(d, 2 * ell);
  for (Int i = 2; i <= ell; ++i) c /= static_cast<long>(i);
  w.bracket = PairingPoly(c) * a_power(d - 2 * ell) * PairingPoly::symbol(Sym::AA, ell);
  w.truncated_mod_a = d - 2 * ell + 2;
  return w;
}

WallCrossingPolynomial leading_term_nu(int d, int ell, int h) {
  if (d < 2 * ell + 2) throw TransitionError("need d >= 2 ell + 2");
  WallCrossingPolynomial w;
  w.d = d;
  w.ell = ell;
  w.kind = TransitionKind::MuNu;
  w.sign = parity_sign(h + ell - 1);
  w.scale = rat(1, 4);
  Rational c = falling(d - 2, 2 * ell);
  for (Int i = 2; i <= ell; ++i) c /= static_cast<long>(i);
  w.bracket = PairingPoly(c) * a_power(d - 2 - 2 * ell) * PairingPoly::symbol(Sym::AA, ell);
  w.truncated_mod_a = d - 2 * ell;
  return w;
}

WallCrossingPolynomial leading_term(const WallType& wt, const WallClassData& wcd) {
  return leading_term(static_cast<int>(wt.d()), static_cast<int>(wcd.ell),
                      static_cast<int>(wcd.h_plus));
}
WallCrossingPolynomial leading_term_nu(const WallType& wt, const WallClassData& wcd) {
  return leading_term_nu(static_cast<int>(wt.d()), static_cast<int>(wcd.ell),
                         static_cast<int>(wcd.h_plus));
}

PairingPoly reduce_mod_a_power(const PairingPoly& p, int m) {
  PairingPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e[static_cast<int>(Sym::AZ)] >= m) continue;
    out += PairingPoly(c) * [&] {
      PairingPoly mono(rat(1));
      for (int i = 0; i < kNumSyms; ++i)
        if (e[i] > 0) mono *= PairingPoly::symbol(static_cast<Sym>(i), e[i]);
      return mono;
    }();
  }
  return out;
}

TransitionReport donaldson_difference(const DivisorClass& L_minus,
                                      const DivisorClass& L_plus, const WallType& wt,
                                      const DivisorClass& alpha, bool insert_point) {
  if (alpha.lattice != wt.delta.lattice) throw TransitionError("alpha lattice mismatch");
  const Int d = wt.d();
  if (insert_point && d < 2)
    throw TransitionError("point-class insertion needs d >= 2");

  WallSearchResult search = enumerate_walls(L_minus, L_plus, wt);
  TransitionReport report;
  report.warnings = search.warnings;
  report.total = rat(0);

  const int dsign = orientation_sign(wt.delta);
  const Int kk = wt.delta.lattice->canonical_square();
  const Int aa = square(alpha);

  for (const Wall& wall : search.walls) {
    WallContribution contrib;
    contrib.wall = wall;
    contrib.delta_sign = dsign;
    Rational sum(0);
    if (wall.classes.size() > 1) {
      std::ostringstream os;
      os << "MULTI_CLASS_WALL at t = " << to_string(wall.t) << " ("
         << wall.classes.size() << " integral classes summed class-wise)";
      report.warnings.push_back(os.str());
    }
    for (const WallClassData& wcd : wall.classes) {
      std::ostringstream zc;
      zc << "(";
      for (Eigen::Index i = 0; i < wcd.zeta.coords.size(); ++i)
        zc << (i ? "," : "") << wcd.zeta.coords(i);
      zc << ")";
      if (wcd.ell >= 1 && (wcd.h_plus + wcd.ell == 0 || wcd.h_minus + wcd.ell == 0))
        throw TransitionError("degenerate wall class " + zc.str() +
                              " with ell >= 1: no closed formula available");
      if (wcd.ell > 2)
        throw NotImplementedError("wall class " + zc.str() +
                                  " has ell >= 3: only leading_term is available");
      WallCrossingPolynomial poly = insert_point ? delta_nu_explicit(wt, wcd)
                                                 : delta_mu_explicit(wt, wcd);
      const Int az = pair(wcd.zeta, alpha);
      sum += poly.evaluate(az, aa, kk, 1);
      sum.canonicalize();
      contrib.class_polys.push_back(std::move(poly));
    }
    contrib.value = sum * rat(dsign);
    contrib.value.canonicalize();
    report.total += contrib.value;
    report.total.canonicalize();
    report.walls.push_back(std::move(contrib));
  }

  if (!wt.delta.lattice->anticanonical_effective_guaranteed())
    report.warnings.push_back(
        "surface is custom: -K_X effectivity not asserted; formulas assume it");
  return report;
}

}  // namespace wallcross
