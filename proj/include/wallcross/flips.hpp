#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "wallcross/walls.hpp"

namespace wallcross {

enum class ZetaDirection { Plus, Minus };

/// A destabilizing extension datum: lengths of the two zero-dimensional
/// subschemes, with n1 + n2 = ell of the ambient wall class. The universal
/// flag marks the 2F == Delta carve-out.
struct ExtensionDatum {
  ZetaDirection direction = ZetaDirection::Plus;
  Int n1 = 0;
  Int n2 = 0;
  bool universal = false;
};

enum class KClassification { Accepted, Rejected, UniversallySemistableExcluded };

/// (L_0, zeta, k)-semistability test for one extension datum:
/// direction +zeta: accepted iff n2 <= k; direction -zeta: accepted iff
/// n1 >= k + 1. Throws if n1 + n2 != ell.
KClassification classify_k_semistable(const ExtensionDatum& datum, Int ell, Int k);

/// k_i(t) = floor((ell_i + r_i t)/2); CRITICAL when some (ell_i + r_i t)/2 is
/// an integer within [-1, ell_i].
struct KVector {
  std::vector<Int> k;
};
struct Critical {
  std::vector<int> indices;  // I(t)
};
using KOfT = std::variant<KVector, Critical>;

struct ZetaMultiple {
  Rational r;  // zeta_i = r_i * zeta_1, positive rational
  Int ell;     // ell_{zeta_i}
};

KOfT k_of_t(const Rational& t, const std::vector<ZetaMultiple>& multiples);

struct CriticalValue {
  Rational t;
  std::vector<int> indices;  // which zeta_i are critical at t
};

/// All zeta-critical values, sorted and deduplicated, each with its index set.
std::vector<CriticalValue> critical_values(const std::vector<ZetaMultiple>& multiples);

/// One stage of the blowup/blowdown flip sequence.
struct FlipStage {
  Int k = 0;
  Int center_dim = 0;   // dim E_zeta^{ell-k,k} = 3 ell + h(zeta) - 1
  Int fiber_plus = 0;   // N_zeta
  Int fiber_minus = 0;  // N_{-zeta}
  Int moduli_dim = 0;   // d
  bool adds_component = false;     // degenerate: E_{-zeta}^{0,0} component of M_+
  bool removes_component = false;  // degenerate on the -zeta side
};

/// The dimension ledger of the flip sequence from M_- to M_+ across one wall:
/// stages k = ell down to 0. Degenerate cases emit a single
/// add/remove-component stage of dimension d.
std::vector<FlipStage> flip_schedule(const WallClassData& wcd, const WallType& wt);

}  // namespace wallcross
