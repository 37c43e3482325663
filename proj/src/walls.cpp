#include "wallcross/walls.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "wallcross/short_vectors.hpp"

namespace wallcross {

namespace {

std::string vec_str(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ")";
  return os.str();
}

IVec primitive_part(const IVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, std::abs(v(i)));
  if (g == 0) throw WallError("primitive part of zero vector");
  return IVec(v / g);
}

struct VecLess {
  bool operator()(const IVec& a, const IVec& b) const {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
  }
};

/// Rational point (1-t) L_- + t L_+ on the segment.
RVec segment_point(const IVec& lm, const IVec& lp, const Rational& t) {
  RVec m(lm.size());
  for (Eigen::Index i = 0; i < lm.size(); ++i)
    m(i) = Rational(1 - t) * static_cast<long>(lm(i)) + t * static_cast<long>(lp(i));
  return m;
}

Rational rpair(const IMat& g, const RVec& x, const RVec& y) {
  Rational total(0);
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (Eigen::Index j = 0; j < y.size(); ++j)
      total += x(i) * Rational(static_cast<long>(g(i, j))) * y(j);
  return total;
}

/// Gram matrix of the height form Q_m(v) = 2 (v.m)^2 / m^2 - v^2, positive
/// definite for m in the positive cone.
RMat height_form(const IMat& g, const RVec& m) {
  const int n = static_cast<int>(g.rows());
  RVec gm(n);
  for (int i = 0; i < n; ++i) {
    gm(i) = Rational(0);
    for (int j = 0; j < n; ++j) gm(i) += Rational(static_cast<long>(g(i, j))) * m(j);
  }
  Rational m2 = rpair(g, m, m);
  RMat q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      q(i, j) = Rational(2) * gm(i) * gm(j) / m2 - Rational(static_cast<long>(g(i, j)));
  return q;
}

}  // namespace

WallType::WallType(DivisorClass d, Int c2) : delta(std::move(d)), c(c2) {
  p_ = square(delta) - 4 * c;
  if (-p_ - 3 < 0) throw WallError("d = 4c - Delta^2 - 3 must be nonnegative");
}

IVec WallType::parity() const {
  IVec w(delta.coords.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    w(i) = ((delta.coords(i) % 2) + 2) % 2;
  return w;
}

bool is_wall_class(const DivisorClass& zeta, const WallType& wt) {
  if (zeta.lattice != wt.delta.lattice) throw WallError("lattice mismatch");
  for (Eigen::Index i = 0; i < zeta.coords.size(); ++i)
    if ((zeta.coords(i) - wt.delta.coords(i)) % 2 != 0) return false;
  const Int z2 = square(zeta);
  return wt.p() <= z2 && z2 < 0;
}

WallClassData wall_class_data(const DivisorClass& zeta, const WallType& wt) {
  if (!is_wall_class(zeta, wt)) throw WallError("not a wall class of this type");
  WallClassData w;
  w.zeta = zeta;
  const Int z2 = square(zeta);
  const Int zk = pair(zeta, canonical_class(zeta.lattice));
  w.ell = (z2 - wt.p()) / 4;
  w.h_plus = (zk - z2) / 2 - 1;
  w.h_minus = (-zk - z2) / 2 - 1;
  w.n_plus = w.h_plus + w.ell - 1;
  w.n_minus = w.h_minus + w.ell - 1;
  w.degenerate = (w.h_plus + w.ell == 0);
  return w;
}

bool same_wall(const DivisorClass& z1, const DivisorClass& z2) {
  if (z1.lattice != z2.lattice) throw WallError("lattice mismatch");
  if (z1.coords.isZero() || z2.coords.isZero()) throw WallError("zero class has no wall");
  // z2 = q z1 with q > 0  <=>  equal primitive parts.
  IVec p1 = primitive_part(z1.coords), p2 = primitive_part(z2.coords);
  return p1 == p2;
}

Rational crossing_parameter(const DivisorClass& zeta, const DivisorClass& L_minus,
                            const DivisorClass& L_plus) {
  const Int a = pair(zeta, L_minus);
  const Int b = pair(zeta, L_plus);
  if (!(a < 0 && 0 < b)) throw WallError("zeta does not change sign along the segment");
  // zeta . x(t) = (1-t) a + t b = 0  =>  t = -a / (b - a)
  return make_rational(-a, b - a);
}

std::vector<IVec> oracle_enumerate_box(const DivisorClass& L_minus,
                                       const DivisorClass& L_plus, const WallType& wt,
                                       Int radius) {
  if (radius < 1) throw WallError("box radius must be >= 1");
  const auto lat = wt.delta.lattice;
  const int n = lat->rank();
  std::vector<IVec> out;
  IVec v = IVec::Constant(n, -radius);
  while (true) {
    if (!v.isZero()) {
      DivisorClass z(lat, v);
      if (is_wall_class(z, wt) && pair(z, L_minus) < 0 && pair(z, L_plus) > 0)
        out.push_back(v);
    }
    int i = 0;
    while (i < n && v(i) == radius) v(i++) = -radius;
    if (i == n) break;
    ++v(i);
  }
  std::sort(out.begin(), out.end(), VecLess{});
  return out;
}

WallSearchResult enumerate_walls(const DivisorClass& L_minus, const DivisorClass& L_plus,
                                 const WallType& wt) {
  const auto lat = wt.delta.lattice;
  if (L_minus.lattice != lat || L_plus.lattice != lat) throw WallError("lattice mismatch");
  if (!in_forward_cone(L_minus)) throw WallError("L_- is not in the forward positive cone");
  if (!in_forward_cone(L_plus)) throw WallError("L_+ is not in the forward positive cone");

  const IMat& g = lat->gram();
  const Int p = wt.p();
  const Rational minus_p = rat(-p);

  // Endpoint-on-wall detection: a type-(Delta,c) class with zeta . L = 0 has
  // Q_L(zeta) = -zeta^2 <= -p, so a bounded search at L is complete.
  for (const DivisorClass* L : {&L_minus, &L_plus}) {
    RVec m(lat->rank());
    for (int i = 0; i < lat->rank(); ++i) m(i) = rat(L->coords(i));
    for (const IVec& v : short_vectors(height_form(g, m), minus_p)) {
      DivisorClass z(lat, v);
      if (is_wall_class(z, wt) && pair(z, *L) == 0)
        throw WallError("endpoint lies on the wall of " + vec_str(primitive_part(v)));
    }
  }

  // Adaptive bisection. On a subsegment with midpoint m and half-vector h,
  // every wall class crossing it satisfies Q_m(zeta) <= -p / (1 - kappa)
  // with kappa = 2 Q_m(h) / (m^2 (1 - beta)^2), beta = 2 |h.m| / m^2,
  // provided kappa < 1 (Cauchy-Schwarz in the Q_m inner product).
  std::set<IVec, VecLess> found;
  const IVec lm = L_minus.coords, lp = L_plus.coords;

  struct Seg { Rational t0, t1; };
  std::vector<Seg> stack;
  stack.push_back({rat(0), rat(1)});
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    Rational tmid = (s.t0 + s.t1) / 2;
    tmid.canonicalize();
    RVec m = segment_point(lm, lp, tmid);
    Rational m2 = rpair(g, m, m);
    RVec h(lm.size());
    Rational half = (s.t1 - s.t0) / 2;
    for (Eigen::Index i = 0; i < lm.size(); ++i)
      h(i) = half * Rational(static_cast<long>(lp(i) - lm(i)));

    Rational hm = rpair(g, h, m);
    if (hm < 0) hm = -hm;
    Rational beta = Rational(2) * hm / m2;
    bool ok = false;
    Rational bound;
    if (beta < 1) {
      Rational qh = Rational(2) * rpair(g, h, m) * rpair(g, h, m) / m2 - rpair(g, h, h);
      Rational one_minus_beta = Rational(1) - beta;
      Rational kappa = Rational(2) * qh / (m2 * one_minus_beta * one_minus_beta);
      if (kappa <= Rational(1, 2)) {
        bound = minus_p / (Rational(1) - kappa);
        bound.canonicalize();
        ok = true;
      }
    }
    if (!ok) {
      stack.push_back({s.t0, tmid});
      stack.push_back({tmid, s.t1});
      continue;
    }
    for (const IVec& v : short_vectors(height_form(g, m), bound)) {
      DivisorClass z(lat, v);
      if (is_wall_class(z, wt) && pair(z, L_minus) < 0 && pair(z, L_plus) > 0)
        found.insert(v);
    }
  }

  // Group by wall (primitive ray), sort by crossing parameter.
  std::map<IVec, std::vector<IVec>, VecLess> groups;
  for (const IVec& v : found) groups[primitive_part(v)].push_back(v);

  WallSearchResult result;
  for (auto& [prim, classes] : groups) {
    Wall w;
    w.primitive = prim;
    // smallest multiple of the primitive generator first
    std::sort(classes.begin(), classes.end(), [](const IVec& a, const IVec& b) {
      return a.cwiseAbs().sum() < b.cwiseAbs().sum();
    });
    Rational t;
    bool t_set = false;
    for (const IVec& v : classes) {
      DivisorClass z(lat, v);
      WallClassData data = wall_class_data(z, wt);
      data.crossing_t = crossing_parameter(z, L_minus, L_plus);
      if (!t_set) { t = *data.crossing_t; t_set = true; }
      if (data.h_plus < 0 || data.h_minus < 0) {
        result.warnings.push_back("h(zeta) < 0 observed on wall " + vec_str(prim) +
                                  " (geometric hypotheses may fail)");
      }
      w.classes.push_back(std::move(data));
    }
    w.t = t;
    result.walls.push_back(std::move(w));
  }
  std::sort(result.walls.begin(), result.walls.end(), [](const Wall& a, const Wall& b) {
    if (a.t != b.t) return a.t < b.t;
    return VecLess{}(a.primitive, b.primitive);
  });
  for (size_t i = 0; i + 1 < result.walls.size(); ++i) {
    if (result.walls[i].t == result.walls[i + 1].t) {
      result.walls[i].coincident_crossing = true;
      result.walls[i + 1].coincident_crossing = true;
    }
  }
  return result;
}

}  // namespace wallcross
