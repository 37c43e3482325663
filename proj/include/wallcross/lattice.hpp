#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wallcross/rational.hpp"

namespace wallcross {

struct LatticeError : std::runtime_error {
  explicit LatticeError(const std::string& what) : std::runtime_error(what) {}
};

/// Integral model of H^2(X;Z) for a rational surface: intersection form of
/// signature (1, rank-1), canonical class, and a reference ample class that
/// fixes the forward component of the positive cone. Immutable.
class SurfaceLattice {
 public:
  static std::shared_ptr<const SurfaceLattice> projective_plane();
  static std::shared_ptr<const SurfaceLattice> hirzebruch(int e);
  static std::shared_ptr<const SurfaceLattice> blowup_plane(int n);
  static std::shared_ptr<const SurfaceLattice> custom(IMat gram, IVec canonical,
                                                      IVec reference_ample,
                                                      std::string name = "custom");

  int rank() const { return static_cast<int>(gram_.rows()); }
  const IMat& gram() const { return gram_; }
  const IVec& canonical() const { return canonical_; }
  const IVec& reference_ample() const { return reference_ample_; }
  const std::string& name() const { return name_; }
  int euler_char_structure_sheaf() const { return 1; }
  Int canonical_square() const;
  bool anticanonical_effective_guaranteed() const { return anticanonical_guaranteed_; }
  const std::vector<IVec>& extremal_curves() const { return extremal_curves_; }

  Int pair(const IVec& x, const IVec& y) const;

 private:
  SurfaceLattice(IMat gram, IVec canonical, IVec ample, std::string name,
                 std::vector<IVec> extremal, bool anticanonical_guaranteed);
  void validate() const;

  IMat gram_;
  IVec canonical_;
  IVec reference_ample_;
  std::string name_;
  std::vector<IVec> extremal_curves_;
  bool anticanonical_guaranteed_;
};

using LatticePtr = std::shared_ptr<const SurfaceLattice>;

/// Integer class in a fixed SurfaceLattice basis.
struct DivisorClass {
  LatticePtr lattice;
  IVec coords;

  DivisorClass() = default;
  DivisorClass(LatticePtr lat, IVec c);
  DivisorClass(LatticePtr lat, std::initializer_list<Int> c);
};

Int pair(const DivisorClass& x, const DivisorClass& y);
inline Int square(const DivisorClass& x) { return pair(x, x); }
DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(Int n, const DivisorClass& a);
bool operator==(const DivisorClass& a, const DivisorClass& b);

DivisorClass canonical_class(const LatticePtr& lat);

/// Open-cone ampleness test: L^2 > 0, forward (L . reference_ample > 0) and,
/// for presets, positive pairing against the stored extremal curve classes.
bool is_ample_candidate(const DivisorClass& L);

/// True iff x lies in the forward component of the positive cone.
bool in_forward_cone(const DivisorClass& x);

/// Signature (n_plus, n_minus, n_zero) of a symmetric integer matrix,
/// computed exactly over the rationals.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Signature signature_of(const IMat& gram);

}  // namespace wallcross
