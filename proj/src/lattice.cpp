#include "wallcross/lattice.hpp"

#include <sstream>

namespace wallcross {

namespace {

IVec make_vec(std::initializer_list<Int> c) {
  IVec v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (Int x : c) v(i++) = x;
  return v;
}

}  // namespace

Signature signature_of(const IMat& gram) {
  const int n = static_cast<int>(gram.rows());
  RMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rat(gram(i, j));

  // Symmetric Gaussian elimination (Lagrange congruence diagonalization);
  // Sylvester's law of inertia gives the signature from the pivot signs.
  Signature sig;
  std::vector<int> alive(n);
  for (int i = 0; i < n; ++i) alive[i] = i;

  while (!alive.empty()) {
    int piv = -1;
    for (int idx : alive)
      if (m(idx, idx) != 0) { piv = idx; break; }
    if (piv < 0) {
      // all diagonal entries vanish; find an off-diagonal hyperbolic pair
      int a = -1, b = -1;
      for (size_t s = 0; s < alive.size() && a < 0; ++s)
        for (size_t t = s + 1; t < alive.size() && a < 0; ++t)
          if (m(alive[s], alive[t]) != 0) { a = alive[s]; b = alive[t]; }
      if (a < 0) {
        sig.zero += static_cast<int>(alive.size());
        break;
      }
      // row/col operation e_a += e_b creates a nonzero diagonal entry
      for (int idx : alive) m(a, idx) += m(b, idx);
      for (int idx : alive) m(idx, a) += m(idx, b);
      continue;
    }
    Rational d = m(piv, piv);
    for (int idx : alive) {
      if (idx == piv) continue;
      Rational f = m(piv, idx) / d;
      if (f == 0) continue;
      for (int jdx : alive) m(idx, jdx) -= f * m(piv, jdx);
      for (int jdx : alive) m(jdx, idx) -= f * m(jdx, piv);
    }
    (d > 0 ? sig.positive : sig.negative)++;
    alive.erase(std::find(alive.begin(), alive.end(), piv));
  }
  return sig;
}

SurfaceLattice::SurfaceLattice(IMat gram, IVec canonical, IVec ample, std::string name,
                               std::vector<IVec> extremal, bool anticanonical_guaranteed)
    : gram_(std::move(gram)),
      canonical_(std::move(canonical)),
      reference_ample_(std::move(ample)),
      name_(std::move(name)),
      extremal_curves_(std::move(extremal)),
      anticanonical_guaranteed_(anticanonical_guaranteed) {
  validate();
}

void SurfaceLattice::validate() const {
  const int n = rank();
  if (n < 1) throw LatticeError("rank must be positive");
  if (gram_.cols() != n || canonical_.size() != n || reference_ample_.size() != n)
    throw LatticeError("dimension mismatch in lattice data");
  if (gram_ != gram_.transpose().eval()) throw LatticeError("gram matrix not symmetric");

  Signature sig = signature_of(gram_);
  if (sig.positive != 1 || sig.negative != n - 1 || sig.zero != 0) {
    std::ostringstream os;
    os << "gram matrix has signature (" << sig.positive << "," << sig.negative
       << "," << sig.zero << "), need (1," << (n - 1) << ",0)";
    throw LatticeError(os.str());
  }

  // K characteristic: e.e == e.K (mod 2) for every basis vector e.
  IVec gk = gram_ * canonical_;
  for (int i = 0; i < n; ++i) {
    Int diff = gram_(i, i) - gk(i);
    if (diff % 2 != 0) throw LatticeError("canonical class is not characteristic");
  }

  Int a2 = reference_ample_.dot(gram_ * reference_ample_);
  if (a2 <= 0) throw LatticeError("reference ample class must have positive square");
}

Int SurfaceLattice::pair(const IVec& x, const IVec& y) const {
  return x.dot(gram_ * y);
}

Int SurfaceLattice::canonical_square() const { return pair(canonical_, canonical_); }

std::shared_ptr<const SurfaceLattice> SurfaceLattice::projective_plane() {
  IMat g(1, 1);
  g << 1;
  IVec k = make_vec({-3}), h = make_vec({1});
  std::vector<IVec> curves = {make_vec({1})};
  return std::shared_ptr<const SurfaceLattice>(
      new SurfaceLattice(g, k, h, "P2", curves, true));
}

std::shared_ptr<const SurfaceLattice> SurfaceLattice::hirzebruch(int e) {
  if (e < 0) throw LatticeError("Hirzebruch parameter must be nonnegative");
  // basis (s, f): s the section with s^2 = -e, f the fiber.
  IMat g(2, 2);
  g << -e, 1, 1, 0;
  IVec k = make_vec({-2, -(e + 2)});
  IVec ample = make_vec({1, e + 1});  // s + (e+1) f
  std::vector<IVec> curves = {make_vec({1, 0}), make_vec({0, 1})};
  std::ostringstream name;
  name << "F" << e;
  // -K is effective on every Hirzebruch surface
  return std::shared_ptr<const SurfaceLattice>(
      new SurfaceLattice(g, k, ample, name.str(), curves, true));
}

std::shared_ptr<const SurfaceLattice> SurfaceLattice::blowup_plane(int n) {
  if (n < 0) throw LatticeError("number of blown-up points must be nonnegative");
  if (n == 0) return projective_plane();
  const int r = n + 1;
  IMat g = IMat::Zero(r, r);
  g(0, 0) = 1;
  for (int i = 1; i < r; ++i) g(i, i) = -1;
  IVec k(r);
  k(0) = -3;
  for (int i = 1; i < r; ++i) k(i) = 1;
  IVec ample(r);
  ample(0) = 2 * n + 1;
  for (int i = 1; i < r; ++i) ample(i) = -1;  // (2n+1) H - sum E_i is ample
  // exceptional curves E_i and the lines H - E_i - E_j (exact Mori
  // generators for n <= 2; a positivity subset for larger n).
  std::vector<IVec> curves;
  for (int i = 1; i < r; ++i) {
    IVec e = IVec::Zero(r);
    e(i) = 1;
    curves.push_back(e);
  }
  if (n == 1) {
    IVec l = IVec::Zero(r);
    l(0) = 1;
    l(1) = -1;
    curves.push_back(l);
  }
  for (int i = 1; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      IVec l = IVec::Zero(r);
      l(0) = 1;
      l(i) = -1;
      l(j) = -1;
      curves.push_back(l);
    }
  std::ostringstream name;
  name << "Bl" << n << "P2";
  return std::shared_ptr<const SurfaceLattice>(
      new SurfaceLattice(g, k, ample, name.str(), curves, n <= 8));
}

std::shared_ptr<const SurfaceLattice> SurfaceLattice::custom(IMat gram, IVec canonical,
                                                             IVec reference_ample,
                                                             std::string name) {
  return std::shared_ptr<const SurfaceLattice>(new SurfaceLattice(
      std::move(gram), std::move(canonical), std::move(reference_ample),
      std::move(name), {}, false));
}

DivisorClass::DivisorClass(LatticePtr lat, IVec c) : lattice(std::move(lat)), coords(std::move(c)) {
  if (!lattice) throw LatticeError("null lattice");
  if (coords.size() != lattice->rank()) throw LatticeError("coordinate length mismatch");
}

DivisorClass::DivisorClass(LatticePtr lat, std::initializer_list<Int> c)
    : DivisorClass(std::move(lat), make_vec(c)) {}

Int pair(const DivisorClass& x, const DivisorClass& y) {
  if (x.lattice != y.lattice) throw LatticeError("pairing classes from different lattices");
  return x.lattice->pair(x.coords, y.coords);
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  if (a.lattice != b.lattice) throw LatticeError("adding classes from different lattices");
  return DivisorClass(a.lattice, IVec(a.coords + b.coords));
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  if (a.lattice != b.lattice) throw LatticeError("subtracting classes from different lattices");
  return DivisorClass(a.lattice, IVec(a.coords - b.coords));
}

DivisorClass operator-(const DivisorClass& a) {
  return DivisorClass(a.lattice, IVec(-a.coords));
}

DivisorClass operator*(Int n, const DivisorClass& a) {
  return DivisorClass(a.lattice, IVec(n * a.coords));
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return a.lattice == b.lattice && a.coords == b.coords;
}

DivisorClass canonical_class(const LatticePtr& lat) {
  return DivisorClass(lat, lat->canonical());
}

bool in_forward_cone(const DivisorClass& x) {
  const auto& lat = *x.lattice;
  return lat.pair(x.coords, x.coords) > 0 &&
         lat.pair(x.coords, lat.reference_ample()) > 0;
}

bool is_ample_candidate(const DivisorClass& L) {
  if (!in_forward_cone(L)) return false;
  const auto& lat = *L.lattice;
  for (const auto& c : lat.extremal_curves())
    if (lat.pair(L.coords, c) <= 0) return false;
  return true;
}

}  // namespace wallcross
