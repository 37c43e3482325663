#pragma once

#include <optional>
#include <vector>

#include "wallcross/engine.hpp"
#include "wallcross/flips.hpp"
#include "wallcross/pairing_poly.hpp"
#include "wallcross/walls.hpp"

namespace wallcross {

struct TransitionError : std::runtime_error {
  explicit TransitionError(const std::string& what) : std::runtime_error(what) {}
};

enum class TransitionKind { MuPower, MuNu };

/// A transition term delta = sign * scale * bracket, where the bracket is the
/// printed polynomial sum_i gamma_i a^{e-2i} (alpha^2)^i with e = d (MuPower)
/// or d - 2 (MuNu). Internally a is carried as AZ/2 (AZ = zeta.alpha stays
/// integral); gamma_i may keep KK and CHI symbolic.
struct WallCrossingPolynomial {
  int d = 0;
  int ell = 0;
  TransitionKind kind = TransitionKind::MuPower;
  int sign = 1;                    // (-1)^{h+ell} (mu)  /  (-1)^{h+ell-1} (nu)
  Rational scale = Rational(1);    // 1 (mu)  /  1/4 (nu)
  PairingPoly bracket;             // polynomial in AZ, AA [, KK, CHI]
  std::optional<int> truncated_mod_a;  // leading terms only: valid mod a^m

  int alpha_exponent() const { return kind == TransitionKind::MuPower ? d : d - 2; }

  /// sign * scale * bracket.
  PairingPoly full() const;

  /// Basis coefficients gamma_0 .. gamma_ell of the bracket; throws if the
  /// bracket is not expressible in the (a, alpha^2) basis.
  std::vector<PairingPoly> gammas() const;

  /// Exact evaluation of full() at zeta.alpha, alpha^2 (integers) and
  /// K_X^2, chi(O_X).
  Rational evaluate(Int zeta_dot_alpha, Int alpha_sq, Int k_squared, Int chi = 1) const;
};

/// delta(Delta) = (-1)^{(Delta^2 + Delta.K_X)/2}.
int orientation_sign(const DivisorClass& delta);

// ---- explicit closed forms (tabulated coefficients), ell <= 2 ----
WallCrossingPolynomial delta_mu_explicit(int d, int ell, int h);
WallCrossingPolynomial delta_nu_explicit(int d, int ell, int h);
WallCrossingPolynomial delta_mu_explicit(const WallType& wt, const WallClassData& wcd);
WallCrossingPolynomial delta_nu_explicit(const WallType& wt, const WallClassData& wcd);

// ---- general evaluators fed by engine S_j / T_j ----
WallCrossingPolynomial delta_mu_general(int d, int ell, int h,
                                        const std::vector<PairingPoly>& S);
WallCrossingPolynomial delta_nu_general(int d, int ell, int h,
                                        const std::vector<PairingPoly>& S,
                                        const std::vector<PairingPoly>& T);
WallCrossingPolynomial delta_mu_general(const WallType& wt, const WallClassData& wcd,
                                        const std::vector<PairingPoly>& S);
WallCrossingPolynomial delta_nu_general(const WallType& wt, const WallClassData& wcd,
                                        const std::vector<PairingPoly>& S,
                                        const std::vector<PairingPoly>& T);

// ---- leading terms (any ell), marked with their truncation ----
WallCrossingPolynomial leading_term(int d, int ell, int h);
WallCrossingPolynomial leading_term_nu(int d, int ell, int h);
WallCrossingPolynomial leading_term(const WallType& wt, const WallClassData& wcd);
WallCrossingPolynomial leading_term_nu(const WallType& wt, const WallClassData& wcd);

/// Reduce a polynomial in the basis modulo a^m (drop AZ-exponents >= m).
PairingPoly reduce_mod_a_power(const PairingPoly& p, int m);

struct WallContribution {
  Wall wall;
  int delta_sign = 1;  // delta(Delta)
  std::vector<WallCrossingPolynomial> class_polys;  // one per class on the wall
  Rational value;      // delta(Delta) * sum of class evaluations
};

struct TransitionReport {
  std::vector<WallContribution> walls;
  Rational total;
  std::vector<std::string> warnings;
};

/// D(C_+) - D(C_-) on alpha^d (or alpha^{d-2} x when insert_point), summed
/// over every wall crossed from L_- to L_+. Walls carrying several integral
/// classes are summed class-wise with a MULTI_CLASS_WALL warning.
TransitionReport donaldson_difference(const DivisorClass& L_minus,
                                      const DivisorClass& L_plus, const WallType& wt,
                                      const DivisorClass& alpha, bool insert_point);

}  // namespace wallcross
