#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wallcross/lattice.hpp"

namespace wallcross {

struct WallError : std::runtime_error {
  explicit WallError(const std::string& what) : std::runtime_error(what) {}
};

/// The discrete type (Delta, c): p = Delta^2 - 4c, d = -p - 3 >= 0.
struct WallType {
  DivisorClass delta;
  Int c = 0;

  WallType() = default;
  WallType(DivisorClass d, Int c2);

  Int p() const { return p_; }
  Int d() const { return -p_ - 3; }
  /// Delta mod 2, componentwise.
  IVec parity() const;

 private:
  Int p_ = 0;
};

/// A wall class zeta with its derived invariants.
struct WallClassData {
  DivisorClass zeta;
  Int ell = 0;      // (zeta^2 - p)/4
  Int h_plus = 0;   // h(zeta)
  Int h_minus = 0;  // h(-zeta)
  Int n_plus = 0;   // N_zeta = h(zeta) + ell - 1
  Int n_minus = 0;  // N_{-zeta}
  std::optional<Rational> crossing_t;
  bool degenerate = false;  // h(zeta) + ell == 0
};

bool is_wall_class(const DivisorClass& zeta, const WallType& wt);
WallClassData wall_class_data(const DivisorClass& zeta, const WallType& wt);

/// True iff z2 is a positive rational multiple of z1.
bool same_wall(const DivisorClass& z1, const DivisorClass& z2);

/// The unique t in (0,1) with zeta . ((1-t) L_- + t L_+) = 0.
Rational crossing_parameter(const DivisorClass& zeta, const DivisorClass& L_minus,
                            const DivisorClass& L_plus);

/// A wall crossed by the segment, as a group of proportional classes.
struct Wall {
  IVec primitive;                     // primitive generator, zeta . L_+ > 0
  Rational t;                         // crossing parameter
  std::vector<WallClassData> classes; // all integral type-(Delta,c) classes
  bool coincident_crossing = false;   // another wall shares this t
};

struct WallSearchResult {
  std::vector<Wall> walls;
  std::vector<std::string> warnings;
};

/// Complete enumeration of the walls of type (Delta, c) crossed by the open
/// segment from L_- to L_+ (adaptive bisection with a positive-definite
/// height form; provably complete). Every class is oriented with
/// zeta . L_+ > 0 and walls are sorted by crossing parameter.
/// Throws WallError when an endpoint is not in the forward cone or lies on a
/// wall of type (Delta, c).
WallSearchResult enumerate_walls(const DivisorClass& L_minus, const DivisorClass& L_plus,
                                 const WallType& wt);

/// Independent completeness oracle: the same filter applied to every integer
/// vector of max-norm <= radius.
std::vector<IVec> oracle_enumerate_box(const DivisorClass& L_minus,
                                       const DivisorClass& L_plus, const WallType& wt,
                                       Int radius);

}  // namespace wallcross
