#include "wallcross/bundles.hpp"

namespace wallcross {

GradedClass segre_from_chern(const BundleClassData& b) {
  const SymbolicVariety& v = b.total_chern.variety();
  const int top = v.top_degree();
  const GradedClass c0 = b.total_chern.component(0);
  if (!(c0 == GradedClass::one(v)))
    throw std::domain_error("total Chern class must start with c_0 = 1");

  std::vector<GradedClass> c, s;
  for (int i = 0; i <= top; ++i) c.push_back(b.total_chern.component(i));
  s.push_back(GradedClass::one(v));
  for (int n = 1; n <= top; ++n) {
    GradedClass acc(v);
    for (int i = 1; i <= n; ++i) acc -= c[i] * s[n - i];
    s.push_back(acc);
  }
  GradedClass total(v);
  for (const auto& part : s) total += part;
  return total;
}

BundleClassData dual_chern(const BundleClassData& b) {
  const SymbolicVariety& v = b.total_chern.variety();
  GradedClass out(v);
  for (const auto& [e, coef] : b.total_chern.terms()) {
    const int d = monomial_degree(e);
    out.add_term(e, (d % 2 == 0) ? coef : -coef);
  }
  return BundleClassData{b.rank, out};
}

BundleClassData sum_chern(const BundleClassData& a, const BundleClassData& b) {
  std::optional<int> rank;
  if (a.rank && b.rank) rank = *a.rank + *b.rank;
  return BundleClassData{rank, a.total_chern * b.total_chern};
}

const SymbolicVariety& parameter_variety(int n1, int n2) {
  const int ell = n1 + n2;
  if (ell == 0) return SymbolicVariety::point();
  if (ell == 1) return SymbolicVariety::surface();
  if (ell == 2) return (n1 == 1) ? SymbolicVariety::surface_square() : SymbolicVariety::hilb2();
  throw NotImplementedError("parameter variety for ell >= 3");
}

BundleClassData chern_of_E(int n1, int n2, ZetaSign sign) {
  const Rational s = (sign == ZetaSign::Plus) ? rat(1) : rat(-1);

  if (n1 == 0 && n2 == 0) {
    // rank-h(zeta) bundle over a point; trivial total Chern class.
    return BundleClassData{std::nullopt, GradedClass::one(SymbolicVariety::point())};
  }

  if (n1 == 1 && n2 == 0) {
    const auto& v = SymbolicVariety::surface();
    auto c = GradedClass::one(v) + GradedClass::generator(v, Gen::Z) * s;
    return BundleClassData{std::nullopt, c};
  }
  if (n1 == 0 && n2 == 1) {
    const auto& v = SymbolicVariety::surface();
    auto c = GradedClass::one(v) + GradedClass::generator(v, Gen::Z) * s -
             GradedClass::generator(v, Gen::K);
    return BundleClassData{std::nullopt, c};
  }

  if (n1 == 2 && n2 == 0) {
    const auto& v = SymbolicVariety::hilb2();
    auto sz = GradedClass::generator(v, Gen::SZ) * s;
    auto l = GradedClass::generator(v, Gen::L);
    auto xx = GradedClass::generator(v, Gen::XX);
    auto c1 = sz - l;
    auto c2 = (sz * sz - xx * PairingPoly::symbol(Sym::ZZ) - sz * l) * rat(1, 2);
    return BundleClassData{std::nullopt, GradedClass::one(v) + c1 + c2};
  }
  if (n1 == 0 && n2 == 2) {
    const auto& v = SymbolicVariety::hilb2();
    auto szk = GradedClass::generator(v, Gen::SZ) * s - GradedClass::generator(v, Gen::SK);
    auto l = GradedClass::generator(v, Gen::L);
    auto xx = GradedClass::generator(v, Gen::XX);
    // (s*zeta - K)^2 as a pairing scalar
    PairingPoly zmk2 = PairingPoly::symbol(Sym::ZZ) -
                       PairingPoly::symbol(Sym::ZK) * (s * 2) +
                       PairingPoly::symbol(Sym::KK);
    auto c1 = szk + l;
    auto c2 = (l * szk + szk * szk - xx * zmk2) * rat(1, 2);
    return BundleClassData{std::nullopt, GradedClass::one(v) + c1 + c2};
  }

  if (n1 == 1 && n2 == 1) {
    const auto& v = SymbolicVariety::surface_square();
    auto t1z = GradedClass::generator(v, Gen::T1Z) * s;
    auto t2zk = GradedClass::generator(v, Gen::T2Z) * s - GradedClass::generator(v, Gen::T2K);
    auto diag = GradedClass::generator(v, Gen::DIAG);
    auto jk = GradedClass::generator(v, Gen::JK);
    auto jk2 = GradedClass::generator(v, Gen::JK2);
    auto c1 = t1z + t2zk;
    auto c2 = t1z * t2zk + diag;
    auto c3 = t1z * diag - t2zk * diag - jk;
    auto c4 = jk2 * rat(-1, 2);  // c_4 = -K_{D0}^2 / 2, read as -j_*(K^2)/2
    return BundleClassData{std::nullopt, GradedClass::one(v) + c1 + c2 + c3 + c4};
  }

  throw NotImplementedError("chern_of_E: (n1,n2) outside the ell <= 2 table");
}

}  // namespace wallcross
