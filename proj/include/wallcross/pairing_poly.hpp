#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "wallcross/rational.hpp"

namespace wallcross {

/// Scalar pairing symbols of the intersection calculus.
/// AA = alpha^2, AZ = zeta.alpha, AK = alpha.K_X, ZZ = zeta^2,
/// ZK = zeta.K_X, KK = K_X^2, CHI = chi(O_X).
enum class Sym : int { AA = 0, AZ, AK, ZZ, ZK, KK, CHI };

inline constexpr int kNumSyms = 7;

const char* sym_name(Sym s);

/// Exponent vector of a monomial in the seven pairing symbols.
using SymExp = std::array<std::uint8_t, kNumSyms>;

/// Exact-rational multivariate polynomial in the pairing symbols,
/// kept in canonical sorted form; equality is syntactic.
class PairingPoly {
 public:
  PairingPoly() = default;
  explicit PairingPoly(Rational c);
  explicit PairingPoly(Int c) : PairingPoly(rat(c)) {}

  static PairingPoly symbol(Sym s, int power = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  PairingPoly& operator+=(const PairingPoly& o);
  PairingPoly& operator-=(const PairingPoly& o);
  PairingPoly& operator*=(const PairingPoly& o);
  PairingPoly& operator*=(const Rational& c);

  friend PairingPoly operator+(PairingPoly a, const PairingPoly& b) { return a += b; }
  friend PairingPoly operator-(PairingPoly a, const PairingPoly& b) { return a -= b; }
  friend PairingPoly operator*(PairingPoly a, const PairingPoly& b) { return a *= b; }
  friend PairingPoly operator*(PairingPoly a, const Rational& c) { return a *= c; }
  friend PairingPoly operator*(const Rational& c, PairingPoly a) { return a *= c; }
  PairingPoly operator-() const;

  bool operator==(const PairingPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const PairingPoly& o) const { return !(*this == o); }

  PairingPoly pow(int e) const;

  /// Substitute a symbol by a polynomial (or constant) value.
  PairingPoly substitute(Sym s, const PairingPoly& value) const;
  PairingPoly substitute(Sym s, const Rational& value) const;

  /// zeta -> -zeta: flips the sign of every symbol linear in zeta (AZ, ZK).
  PairingPoly negate_zeta() const;

  bool contains(Sym s) const;
  int degree_in(Sym s) const;

  /// Coefficient (a PairingPoly in the remaining symbols) of s1^e1 * s2^e2.
  PairingPoly coefficient(Sym s1, int e1, Sym s2, int e2) const;
  PairingPoly coefficient(Sym s, int e) const;

  /// Full evaluation; every symbol that occurs must be assigned.
  Rational evaluate(const std::map<Sym, Rational>& assignment) const;

  /// Canonical rendering, e.g. "18*ZZ^2 + 12*KK*ZZ - 105*ZZ + 96*CHI".
  std::string to_string() const;

  const std::map<SymExp, Rational>& terms() const { return terms_; }

 private:
  void add_term(const SymExp& e, const Rational& c);
  std::map<SymExp, Rational> terms_;
};

/// Convenience: the pairing symbol of two degree-one surface classes drawn
/// from {alpha, zeta, K}. Used by the evaluation rule tables.
enum class SurfSym : int { Alpha = 0, Zeta, K };
PairingPoly pair_symbol(SurfSym a, SurfSym b);

}  // namespace wallcross
