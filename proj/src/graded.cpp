#include "wallcross/graded.hpp"

#include <optional>
#include <sstream>

namespace wallcross {

namespace {

struct GenInfo {
  const char* name;
  int degree;
};

constexpr GenInfo kGenInfo[kNumGens] = {
    {"A", 1},    {"Z", 1},    {"K", 1},    {"pt", 2},
    {"t1*A", 1}, {"t1*Z", 1}, {"t1*K", 1}, {"t1*pt", 2},
    {"t2*A", 1}, {"t2*Z", 1}, {"t2*K", 1}, {"t2*pt", 2},
    {"D0", 2},   {"jK", 3},   {"jK2", 4},
    {"[Z2]/A", 1}, {"[Z2]/Z", 1}, {"[Z2]/K", 1}, {"L", 1}, {"Xx", 2},
};

SurfSym surf_sym(Gen g) {
  switch (g) {
    case Gen::A: case Gen::T1A: case Gen::T2A: case Gen::SA: return SurfSym::Alpha;
    case Gen::Z: case Gen::T1Z: case Gen::T2Z: case Gen::SZ: return SurfSym::Zeta;
    case Gen::K: case Gen::T1K: case Gen::T2K: case Gen::SK: return SurfSym::K;
    default: throw std::domain_error("generator is not a surface class");
  }
}

/// Evaluation of a monomial over the surface X, given as a flat list of
/// degree-1 surface symbols plus a point-class count. Returns nullopt when
/// the total degree differs from 2 (the class vanishes on X for degree > 2;
/// callers integrating over a factor treat both cases as zero).
std::optional<PairingPoly> eval_on_surface(const std::vector<SurfSym>& ones, int pts) {
  const int deg = static_cast<int>(ones.size()) + 2 * pts;
  if (deg != 2) return std::nullopt;
  if (pts == 1) return PairingPoly(rat(1));
  return pair_symbol(ones[0], ones[1]);
}

}  // namespace

const char* gen_name(Gen g) { return kGenInfo[static_cast<int>(g)].name; }
int gen_degree(Gen g) { return kGenInfo[static_cast<int>(g)].degree; }

const SymbolicVariety& SymbolicVariety::point() {
  static const SymbolicVariety v(VarietyKind::Point, "POINT", 0);
  return v;
}
const SymbolicVariety& SymbolicVariety::surface() {
  static const SymbolicVariety v(VarietyKind::Surface, "X", 2);
  return v;
}
const SymbolicVariety& SymbolicVariety::surface_square() {
  static const SymbolicVariety v(VarietyKind::SurfaceSquare, "XxX", 4);
  return v;
}
const SymbolicVariety& SymbolicVariety::hilb2() {
  static const SymbolicVariety v(VarietyKind::Hilb2, "HILB2", 4);
  return v;
}

bool SymbolicVariety::admits(Gen g) const {
  const int i = static_cast<int>(g);
  switch (kind_) {
    case VarietyKind::Point: return false;
    case VarietyKind::Surface: return i <= static_cast<int>(Gen::PT);
    case VarietyKind::SurfaceSquare:
      return i >= static_cast<int>(Gen::T1A) && i <= static_cast<int>(Gen::JK2);
    case VarietyKind::Hilb2: return i >= static_cast<int>(Gen::SA);
  }
  return false;
}

int monomial_degree(const GenExp& e) {
  int d = 0;
  for (int i = 0; i < kNumGens; ++i) d += e[i] * kGenInfo[i].degree;
  return d;
}

std::string monomial_to_string(const GenExp& e) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < kNumGens; ++i) {
    if (e[i] == 0) continue;
    if (any) os << ".";
    os << kGenInfo[i].name;
    if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
    any = true;
  }
  return any ? os.str() : "1";
}

GradedClass GradedClass::one(const SymbolicVariety& v) {
  GradedClass g(v);
  g.terms_[GenExp{}] = PairingPoly(rat(1));
  return g;
}

GradedClass GradedClass::generator(const SymbolicVariety& v, Gen gen) {
  if (!v.admits(gen))
    throw std::domain_error(std::string("generator ") + gen_name(gen) +
                            " does not live on " + v.name());
  GradedClass g(v);
  GenExp e{};
  e[static_cast<int>(gen)] = 1;
  g.terms_[e] = PairingPoly(rat(1));
  return g;
}

GradedClass GradedClass::scalar(const SymbolicVariety& v, const PairingPoly& c) {
  GradedClass g(v);
  if (!c.is_zero()) g.terms_[GenExp{}] = c;
  return g;
}

void GradedClass::add_term(const GenExp& e, const PairingPoly& c) {
  if (monomial_degree(e) > variety_->top_degree()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
  if (variety_ != o.variety_) throw std::domain_error("variety mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
  if (variety_ != o.variety_) throw std::domain_error("variety mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

GradedClass& GradedClass::operator*=(const GradedClass& o) {
  if (variety_ != o.variety_) throw std::domain_error("variety mismatch");
  GradedClass out(*variety_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      GenExp e;
      for (int i = 0; i < kNumGens; ++i)
        e[i] = static_cast<std::uint8_t>(e1[i] + e2[i]);
      out.add_term(e, c1 * c2);
    }
  }
  *this = std::move(out);
  return *this;
}

GradedClass& GradedClass::operator*=(const PairingPoly& c) {
  GradedClass out(*variety_);
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  *this = std::move(out);
  return *this;
}

GradedClass& GradedClass::operator*=(const Rational& c) {
  return (*this) *= PairingPoly(c);
}

GradedClass GradedClass::operator-() const {
  GradedClass out(*variety_);
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

GradedClass GradedClass::pow(int e) const {
  if (e < 0) throw std::domain_error("negative power");
  GradedClass acc = one(*variety_);
  for (int i = 0; i < e; ++i) acc *= *this;
  return acc;
}

GradedClass GradedClass::component(int degree) const {
  GradedClass out(*variety_);
  for (const auto& [e, c] : terms_)
    if (monomial_degree(e) == degree) out.terms_[e] = c;
  return out;
}

int GradedClass::max_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, monomial_degree(e));
  return d;
}

GradedClass GradedClass::negate_zeta() const {
  GradedClass out(*variety_);
  for (const auto& [e, c] : terms_) {
    const int zexp = e[static_cast<int>(Gen::Z)] + e[static_cast<int>(Gen::T1Z)] +
                     e[static_cast<int>(Gen::T2Z)] + e[static_cast<int>(Gen::SZ)];
    PairingPoly cc = c.negate_zeta();
    if (zexp & 1) cc = -cc;
    out.terms_[e] = cc;
  }
  return out;
}

GradedClass GradedClass::swap_factors() const {
  if (variety_->kind() != VarietyKind::SurfaceSquare) return *this;
  GradedClass out(*variety_);
  auto swap_gen = [](int i) {
    const int t1 = static_cast<int>(Gen::T1A), t2 = static_cast<int>(Gen::T2A);
    if (i >= t1 && i < t1 + 4) return i - t1 + t2;
    if (i >= t2 && i < t2 + 4) return i - t2 + t1;
    return i;
  };
  for (const auto& [e, c] : terms_) {
    GenExp s{};
    for (int i = 0; i < kNumGens; ++i) s[swap_gen(i)] = e[i];
    out.terms_[s] = c;
  }
  return out;
}

std::string GradedClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << monomial_to_string(e);
  }
  return os.str();
}

namespace {

PairingPoly eval_surface_monomial(const GenExp& e) {
  std::vector<SurfSym> ones;
  for (Gen g : {Gen::A, Gen::Z, Gen::K})
    for (int k = 0; k < e[static_cast<int>(g)]; ++k) ones.push_back(surf_sym(g));
  auto v = eval_on_surface(ones, e[static_cast<int>(Gen::PT)]);
  if (!v) throw std::domain_error("surface monomial not of top degree");
  return *v;
}

PairingPoly eval_square_monomial(const GenExp& e) {
  const int diag = e[static_cast<int>(Gen::DIAG)];
  const int jk = e[static_cast<int>(Gen::JK)];
  const int jk2 = e[static_cast<int>(Gen::JK2)];
  std::vector<SurfSym> p1, p2;
  int pt1 = e[static_cast<int>(Gen::T1PT)], pt2 = e[static_cast<int>(Gen::T2PT)];
  for (Gen g : {Gen::T1A, Gen::T1Z, Gen::T1K})
    for (int k = 0; k < e[static_cast<int>(g)]; ++k) p1.push_back(surf_sym(g));
  for (Gen g : {Gen::T2A, Gen::T2Z, Gen::T2K})
    for (int k = 0; k < e[static_cast<int>(g)]; ++k) p2.push_back(surf_sym(g));

  if (jk2 == 1) {
    // j_*(K^2): every other factor would push the degree past the top.
    return PairingPoly::symbol(Sym::KK);
  }
  if (jk == 1) {
    // j_* K_{D0} . t_i* gamma -> K . gamma
    std::vector<SurfSym> rest = p1;
    rest.insert(rest.end(), p2.begin(), p2.end());
    if (rest.size() == 1 && pt1 + pt2 == 0 && diag == 0)
      return pair_symbol(SurfSym::K, rest[0]);
    throw UnknownMonomialError("XxX: jK with unsupported cofactor");
  }
  if (diag == 2) {
    // D0^2 = c_2(T_X) = 12 chi - K^2
    return PairingPoly::symbol(Sym::CHI) * rat(12) - PairingPoly::symbol(Sym::KK);
  }
  if (diag == 1) {
    // restriction to the diagonal: D0 . t1*u . t2*v -> integral_X (u v)
    std::vector<SurfSym> rest = p1;
    rest.insert(rest.end(), p2.begin(), p2.end());
    auto v = eval_on_surface(rest, pt1 + pt2);
    if (!v) throw UnknownMonomialError("XxX: diagonal restriction of wrong degree");
    return *v;
  }
  // Kunneth: factors integrate independently; a factor of degree != 2 kills
  // the product (the pulled-back class vanishes above the surface top degree).
  auto v1 = eval_on_surface(p1, pt1);
  auto v2 = eval_on_surface(p2, pt2);
  if (!v1 || !v2) return PairingPoly();
  return (*v1) * (*v2);
}

PairingPoly eval_hilb2_monomial(const GenExp& e) {
  std::vector<SurfSym> slants;
  for (Gen g : {Gen::SA, Gen::SZ, Gen::SK})
    for (int k = 0; k < e[static_cast<int>(g)]; ++k) slants.push_back(surf_sym(g));
  const int ns = static_cast<int>(slants.size());
  const int nl = e[static_cast<int>(Gen::L)];
  const int nx = e[static_cast<int>(Gen::XX)];

  if (ns == 4 && nl == 0 && nx == 0) {
    // Polarization of ([Z2]/a)^4 = 3 (a^2)^2: sum over the three
    // perfect matchings of the four slant arguments.
    const auto& s = slants;
    return pair_symbol(s[0], s[1]) * pair_symbol(s[2], s[3]) +
           pair_symbol(s[0], s[2]) * pair_symbol(s[1], s[3]) +
           pair_symbol(s[0], s[3]) * pair_symbol(s[1], s[2]);
  }
  if (ns == 3 && nl == 1) return PairingPoly();               // ([Z2]/a)^3 . L = 0
  if (ns == 2 && nl == 2) return pair_symbol(slants[0], slants[1]) * rat(-2);
  if (ns == 2 && nx == 1) return pair_symbol(slants[0], slants[1]);
  if (ns == 1 && nl == 3) return pair_symbol(slants[0], SurfSym::K);
  if (ns == 1 && nl == 1 && nx == 1) return PairingPoly();    // [Z2]/a . L . Xx = 0
  if (ns == 0 && nl == 4)
    return PairingPoly::symbol(Sym::CHI) * rat(6) - PairingPoly::symbol(Sym::KK);
  if (ns == 0 && nl == 2 && nx == 1) return PairingPoly(rat(-1));
  if (ns == 0 && nl == 0 && nx == 2) return PairingPoly(rat(1));
  throw UnknownMonomialError("HILB2: no rule for " + monomial_to_string(e));
}

}  // namespace

PairingPoly evaluate_top_monomial(const SymbolicVariety& v, const GenExp& e) {
  if (monomial_degree(e) != v.top_degree())
    throw std::domain_error("monomial is not of top degree on " + std::string(v.name()));
  switch (v.kind()) {
    case VarietyKind::Point: return PairingPoly(rat(1));
    case VarietyKind::Surface: return eval_surface_monomial(e);
    case VarietyKind::SurfaceSquare: return eval_square_monomial(e);
    case VarietyKind::Hilb2: return eval_hilb2_monomial(e);
  }
  throw std::logic_error("unreachable");
}

PairingPoly evaluate_top(const SymbolicVariety& v, const GradedClass& g) {
  if (&g.variety() != &v) throw std::domain_error("variety mismatch");
  PairingPoly total;
  for (const auto& [e, c] : g.terms()) {
    if (monomial_degree(e) != v.top_degree())
      throw std::domain_error("class is not homogeneous of top degree on " +
                              std::string(v.name()) + ": " + monomial_to_string(e));
    total += c * evaluate_top_monomial(v, e);
  }
  return total;
}

}  // namespace wallcross
