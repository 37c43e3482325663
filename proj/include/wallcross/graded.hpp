#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wallcross/pairing_poly.hpp"

namespace wallcross {

struct UnknownMonomialError : std::runtime_error {
  explicit UnknownMonomialError(const std::string& what) : std::runtime_error(what) {}
};

struct NotImplementedError : std::runtime_error {
  explicit NotImplementedError(const std::string& what) : std::runtime_error(what) {}
};

/// Generators of the graded cohomology models. One shared enum; each variety
/// admits a subset (see SymbolicVariety::admits).
enum class Gen : int {
  // on X (the surface itself)
  A = 0,   // alpha
  Z,       // zeta
  K,       // K_X
  PT,      // point class
  // on X x X
  T1A, T1Z, T1K, T1PT,  // tau_1 pullbacks
  T2A, T2Z, T2K, T2PT,  // tau_2 pullbacks
  DIAG,                 // diagonal Delta_0
  JK,                   // j_* K_{Delta_0}
  JK2,                  // j_* (K_{Delta_0}^2)
  // on Hilb^2 X
  SA, SZ, SK,  // slants [Z_2]/alpha, [Z_2]/zeta, [Z_2]/K
  L,           // half the branch divisor of Z_2 -> H_2
  XX,          // X_x = [Z_2]/x
};

inline constexpr int kNumGens = 20;

const char* gen_name(Gen g);
int gen_degree(Gen g);

enum class VarietyKind { Point, Surface, SurfaceSquare, Hilb2 };

/// Parameter variety H_{n1} x H_{n2}: a generator table plus a complete
/// top-monomial evaluation table (evaluate_top_monomial).
class SymbolicVariety {
 public:
  static const SymbolicVariety& point();
  static const SymbolicVariety& surface();          // X              (top 2)
  static const SymbolicVariety& surface_square();   // X x X          (top 4)
  static const SymbolicVariety& hilb2();            // Hilb^2 X       (top 4)

  VarietyKind kind() const { return kind_; }
  const char* name() const { return name_; }
  int top_degree() const { return top_; }
  bool admits(Gen g) const;

 private:
  SymbolicVariety(VarietyKind k, const char* n, int top) : kind_(k), name_(n), top_(top) {}
  VarietyKind kind_;
  const char* name_;
  int top_;
};

/// Monomial in the generators (exponent vector).
using GenExp = std::array<std::uint8_t, kNumGens>;

int monomial_degree(const GenExp& e);
std::string monomial_to_string(const GenExp& e);

/// Formal Q-linear combination of generator monomials with PairingPoly
/// coefficients, truncated above the variety's top degree.
class GradedClass {
 public:
  explicit GradedClass(const SymbolicVariety& v) : variety_(&v) {}

  static GradedClass one(const SymbolicVariety& v);
  static GradedClass generator(const SymbolicVariety& v, Gen g);
  static GradedClass scalar(const SymbolicVariety& v, const PairingPoly& c);

  const SymbolicVariety& variety() const { return *variety_; }
  bool is_zero() const { return terms_.empty(); }

  GradedClass& operator+=(const GradedClass& o);
  GradedClass& operator-=(const GradedClass& o);
  GradedClass& operator*=(const GradedClass& o);
  GradedClass& operator*=(const PairingPoly& c);
  GradedClass& operator*=(const Rational& c);

  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(GradedClass a, const GradedClass& b) { return a *= b; }
  friend GradedClass operator*(GradedClass a, const PairingPoly& c) { return a *= c; }
  friend GradedClass operator*(GradedClass a, const Rational& c) { return a *= c; }
  GradedClass operator-() const;

  bool operator==(const GradedClass& o) const {
    return variety_ == o.variety_ && terms_ == o.terms_;
  }

  GradedClass pow(int e) const;

  /// Homogeneous component of the given degree.
  GradedClass component(int degree) const;
  int max_degree() const;

  /// zeta -> -zeta on generators (Z, T1Z, T2Z, SZ) and coefficients.
  GradedClass negate_zeta() const;

  /// Exchange the two factors of X x X (tau_1 <-> tau_2). Identity elsewhere.
  GradedClass swap_factors() const;

  const std::map<GenExp, PairingPoly>& terms() const { return terms_; }
  void add_term(const GenExp& e, const PairingPoly& c);

  std::string to_string() const;

 private:
  const SymbolicVariety* variety_;
  std::map<GenExp, PairingPoly> terms_;
};

/// Evaluate a homogeneous top-degree class against the variety's rule table.
/// Throws UnknownMonomialError for products outside the table (never silently
/// zero) and std::domain_error if the class is not homogeneous of top degree.
PairingPoly evaluate_top(const SymbolicVariety& v, const GradedClass& g);

/// Single-monomial evaluation (exposed for the rule-table tests).
PairingPoly evaluate_top_monomial(const SymbolicVariety& v, const GenExp& e);

}  // namespace wallcross
