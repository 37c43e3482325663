#include "hilb2_oracle.hpp"

#include <array>
#include <map>

namespace wallcross::testing {

namespace {

// ---- classes on X: monomials over (A, Z, K, PT) with PairingPoly coefficients
using XMono = std::array<std::uint8_t, 4>;  // exponents of A, Z, K, PT
constexpr int kA = 0, kZ = 1, kK = 2, kPT = 3;

int xdeg(const XMono& m) { return m[kA] + m[kZ] + m[kK] + 2 * m[kPT]; }

SurfSym sym_of(int i) {
  switch (i) {
    case kA: return SurfSym::Alpha;
    case kZ: return SurfSym::Zeta;
    default: return SurfSym::K;
  }
}

struct XClass {
  std::map<XMono, PairingPoly> t;

  void add(const XMono& m, const PairingPoly& c) {
    if (c.is_zero()) return;
    const int d = xdeg(m);
    if (d > 2) return;  // vanishes on the surface
    if (d == 2 && m[kPT] == 0) {
      // reduce a product of two degree-one classes to (pairing) . pt
      std::array<int, 2> picks{};
      int n = 0;
      for (int i = 0; i < 3; ++i)
        for (int e = 0; e < m[i]; ++e) picks[n++] = i;
      XMono pt{};
      pt[kPT] = 1;
      add(pt, c * pair_symbol(sym_of(picks[0]), sym_of(picks[1])));
      return;
    }
    auto it = t.find(m);
    if (it == t.end()) {
      t.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  }
  XClass operator*(const XClass& o) const {
    XClass out;
    for (const auto& [m1, c1] : t)
      for (const auto& [m2, c2] : o.t) {
        XMono m{};
        for (int i = 0; i < 4; ++i) m[i] = static_cast<std::uint8_t>(m1[i] + m2[i]);
        out.add(m, c1 * c2);
      }
    return out;
  }
  XClass operator+(const XClass& o) const {
    XClass out = *this;
    for (const auto& [m, c] : o.t) out.add(m, c);
    return out;
  }
  XClass scale(const PairingPoly& s) const {
    XClass out;
    for (const auto& [m, c] : t) out.add(m, c * s);
    return out;
  }
  PairingPoly integral() const {  // coefficient of pt
    XMono pt{};
    pt[kPT] = 1;
    auto it = t.find(pt);
    return it == t.end() ? PairingPoly() : it->second;
  }
  static XClass one() {
    XClass x;
    x.add(XMono{}, PairingPoly(rat(1)));
    return x;
  }
  static XClass gen(int i) {
    XClass x;
    XMono m{};
    m[i] = 1;
    x.add(m, PairingPoly(rat(1)));
    return x;
  }
};

// ---- pure Kunneth classes on X x X
using KMono = std::pair<XMono, XMono>;

struct KClass {
  std::map<KMono, PairingPoly> t;

  void add(const KMono& m, const PairingPoly& c) {
    // normalize each side through the X reduction
    XClass left, right;
    left.add(m.first, PairingPoly(rat(1)));
    right.add(m.second, PairingPoly(rat(1)));
    for (const auto& [lm, lc] : left.t)
      for (const auto& [rm, rc] : right.t) {
        PairingPoly cc = c * lc * rc;
        if (cc.is_zero()) continue;
        KMono key{lm, rm};
        auto it = t.find(key);
        if (it == t.end()) {
          t.emplace(key, cc);
        } else {
          it->second += cc;
          if (it->second.is_zero()) t.erase(it);
        }
      }
  }
  KClass operator*(const KClass& o) const {
    KClass out;
    for (const auto& [m1, c1] : t)
      for (const auto& [m2, c2] : o.t) {
        XMono l{}, r{};
        for (int i = 0; i < 4; ++i) {
          l[i] = static_cast<std::uint8_t>(m1.first[i] + m2.first[i]);
          r[i] = static_cast<std::uint8_t>(m1.second[i] + m2.second[i]);
        }
        out.add({l, r}, c1 * c2);
      }
    return out;
  }
  KClass operator+(const KClass& o) const {
    KClass out = *this;
    for (const auto& [m, c] : o.t) out.add(m, c);
    return out;
  }
  KClass scale(const PairingPoly& s) const {
    KClass out;
    for (const auto& [m, c] : t) out.add(m, c * s);
    return out;
  }
  PairingPoly integral() const {  // coefficient of pt x pt
    XMono pt{};
    pt[kPT] = 1;
    auto it = t.find({pt, pt});
    return it == t.end() ? PairingPoly() : it->second;
  }
  /// Restriction to the diagonal Delta_0 ~ X (both projections become the
  /// identity).
  XClass restrict_diagonal() const {
    XClass out;
    for (const auto& [m, c] : t) {
      XMono merged{};
      for (int i = 0; i < 4; ++i)
        merged[i] = static_cast<std::uint8_t>(m.first[i] + m.second[i]);
      out.add(merged, c);
    }
    return out;
  }
};

// ---- classes on the blowup: p*(P) + i_*(q0 + q1 xi)
struct BlClass {
  KClass P;
  XClass q0, q1;

  BlClass operator+(const BlClass& o) const { return {P + o.P, q0 + o.q0, q1 + o.q1}; }
  BlClass scale(const PairingPoly& s) const { return {P.scale(s), q0.scale(s), q1.scale(s)}; }
  BlClass operator*(const BlClass& o) const {
    BlClass out;
    out.P = P * o.P;
    // p*P . i_*(x) = i_*(P|_E . x)
    XClass rA = P.restrict_diagonal(), rB = o.P.restrict_diagonal();
    out.q0 = rA * o.q0 + rB * q0;
    out.q1 = rA * o.q1 + rB * q1;
    // i_*(a0 + a1 xi) . i_*(b0 + b1 xi) = i_*((...) . (-xi)), reducing
    // xi^2 = K xi - (12 chi - K^2) pt.
    XClass Kc = XClass::gen(kK);
    XClass c2 = XClass::gen(kPT).scale(PairingPoly::symbol(Sym::CHI) * rat(12) -
                                       PairingPoly::symbol(Sym::KK));
    XClass P0 = q0 * o.q0;
    XClass P1 = q0 * o.q1 + q1 * o.q0;
    XClass P2 = q1 * o.q1;
    XClass P0r = P0 + P2 * c2.scale(PairingPoly(rat(-1)));
    XClass P1r = P1 + P2 * Kc;
    // multiply by -xi: -(P0r xi + P1r xi^2) = -(P0r + P1r K) xi + P1r c2
    out.q1 = out.q1 + (P0r + P1r * Kc).scale(PairingPoly(rat(-1)));
    out.q0 = out.q0 + P1r * c2;
    return out;
  }
  PairingPoly integral_h2() const {
    return (P.integral() + q1.integral()) * rat(1, 2);
  }
};

BlClass bl_one() {
  BlClass b;
  b.P.add({XMono{}, XMono{}}, PairingPoly(rat(1)));
  return b;
}

BlClass pullback_generator(Gen g) {
  BlClass b;
  switch (g) {
    case Gen::SA:
    case Gen::SZ:
    case Gen::SK: {
      const int i = (g == Gen::SA) ? kA : (g == Gen::SZ) ? kZ : kK;
      XMono m{};
      m[i] = 1;
      b.P.add({m, XMono{}}, PairingPoly(rat(1)));
      b.P.add({XMono{}, m}, PairingPoly(rat(1)));
      return b;
    }
    case Gen::L:
      b.q0 = XClass::one();
      return b;
    case Gen::XX: {
      XMono pt{};
      pt[kPT] = 1;
      b.P.add({pt, XMono{}}, PairingPoly(rat(1)));
      b.P.add({XMono{}, pt}, PairingPoly(rat(1)));
      b.q0 = XClass::gen(kPT).scale(PairingPoly(rat(-2)));
      return b;
    }
    default:
      throw std::domain_error("blowup oracle: not a HILB2 generator");
  }
}

}  // namespace

PairingPoly hilb2_blowup_evaluate(const GradedClass& g) {
  if (g.variety().kind() != VarietyKind::Hilb2)
    throw std::domain_error("blowup oracle evaluates HILB2 classes only");
  PairingPoly total;
  for (const auto& [mono, coeff] : g.terms()) {
    BlClass acc = bl_one();
    for (int i = 0; i < kNumGens; ++i)
      for (int e = 0; e < mono[i]; ++e)
        acc = acc * pullback_generator(static_cast<Gen>(i));
    total += coeff * acc.integral_h2();
  }
  return total;
}

}  // namespace wallcross::testing
