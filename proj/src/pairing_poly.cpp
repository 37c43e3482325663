#include "wallcross/pairing_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace wallcross {

const char* sym_name(Sym s) {
  switch (s) {
    case Sym::AA: return "AA";
    case Sym::AZ: return "AZ";
    case Sym::AK: return "AK";
    case Sym::ZZ: return "ZZ";
    case Sym::ZK: return "ZK";
    case Sym::KK: return "KK";
    case Sym::CHI: return "CHI";
  }
  return "?";
}

PairingPoly::PairingPoly(Rational c) {
  c.canonicalize();
  if (c != 0) terms_[SymExp{}] = c;
}

PairingPoly PairingPoly::symbol(Sym s, int power) {
  if (power < 0) throw std::domain_error("negative symbol power");
  PairingPoly p;
  if (power == 0) return PairingPoly(rat(1));
  SymExp e{};
  e[static_cast<int>(s)] = static_cast<std::uint8_t>(power);
  p.terms_[e] = rat(1);
  return p;
}

bool PairingPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == SymExp{};
}

Rational PairingPoly::constant_value() const {
  if (terms_.empty()) return rat(0);
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string());
  return terms_.begin()->second;
}

void PairingPoly::add_term(const SymExp& e, const Rational& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  it->second.canonicalize();
  if (it->second == 0) terms_.erase(it);
}

PairingPoly& PairingPoly::operator+=(const PairingPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PairingPoly& PairingPoly::operator-=(const PairingPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

PairingPoly& PairingPoly::operator*=(const PairingPoly& o) {
  std::map<SymExp, Rational> out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      SymExp e;
      for (int i = 0; i < kNumSyms; ++i) {
        int s = e1[i] + e2[i];
        if (s > 255) throw std::overflow_error("monomial exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      Rational c = c1 * c2;
      c.canonicalize();
      auto it = out.find(e);
      if (it == out.end()) {
        out.emplace(e, c);
      } else {
        it->second += c;
        it->second.canonicalize();
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) it = out.erase(it); else ++it;
  }
  terms_ = std::move(out);
  return *this;
}

PairingPoly& PairingPoly::operator*=(const Rational& c) {
  if (c == 0) { terms_.clear(); return *this; }
  for (auto& [e, v] : terms_) {
    v *= c;
    v.canonicalize();
  }
  return *this;
}

PairingPoly PairingPoly::operator-() const {
  PairingPoly p = *this;
  p *= rat(-1);
  return p;
}

PairingPoly PairingPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative power");
  PairingPoly acc(rat(1));
  PairingPoly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    if (e > 1) base *= base;
    e >>= 1;
  }
  return acc;
}

PairingPoly PairingPoly::substitute(Sym s, const PairingPoly& value) const {
  const int idx = static_cast<int>(s);
  PairingPoly out;
  for (const auto& [e, c] : terms_) {
    const int k = e[idx];
    SymExp rest = e;
    rest[idx] = 0;
    PairingPoly term;
    term.terms_[rest] = c;
    if (k > 0) term *= value.pow(k);
    out += term;
  }
  return out;
}

PairingPoly PairingPoly::substitute(Sym s, const Rational& value) const {
  return substitute(s, PairingPoly(value));
}

PairingPoly PairingPoly::negate_zeta() const {
  PairingPoly out;
  for (const auto& [e, c] : terms_) {
    const int odd = (e[static_cast<int>(Sym::AZ)] + e[static_cast<int>(Sym::ZK)]) & 1;
    out.add_term(e, odd ? Rational(-c) : c);
  }
  return out;
}

bool PairingPoly::contains(Sym s) const {
  const int idx = static_cast<int>(s);
  for (const auto& [e, c] : terms_)
    if (e[idx] > 0) return true;
  return false;
}

int PairingPoly::degree_in(Sym s) const {
  const int idx = static_cast<int>(s);
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[idx]));
  return d;
}

PairingPoly PairingPoly::coefficient(Sym s1, int e1, Sym s2, int e2) const {
  const int i1 = static_cast<int>(s1), i2 = static_cast<int>(s2);
  PairingPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[i1] != e1 || e[i2] != e2) continue;
    SymExp rest = e;
    rest[i1] = 0;
    rest[i2] = 0;
    out.add_term(rest, c);
  }
  return out;
}

PairingPoly PairingPoly::coefficient(Sym s, int e) const {
  const int i = static_cast<int>(s);
  PairingPoly out;
  for (const auto& [ex, c] : terms_) {
    if (ex[i] != e) continue;
    SymExp rest = ex;
    rest[i] = 0;
    out.add_term(rest, c);
  }
  return out;
}

Rational PairingPoly::evaluate(const std::map<Sym, Rational>& assignment) const {
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < kNumSyms; ++i) {
      if (e[i] == 0) continue;
      auto it = assignment.find(static_cast<Sym>(i));
      if (it == assignment.end())
        throw std::domain_error(std::string("unassigned symbol ") + sym_name(static_cast<Sym>(i)));
      t *= pow_rational(it->second, e[i]);
    }
    total += t;
    total.canonicalize();
  }
  return total;
}

std::string PairingPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Iterate in reverse map order so higher exponent vectors print first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool any_sym = false;
    std::ostringstream mono;
    for (int i = 0; i < kNumSyms; ++i) {
      if (e[i] == 0) continue;
      if (any_sym) mono << "*";
      mono << sym_name(static_cast<Sym>(i));
      if (e[i] > 1) mono << "^" << static_cast<int>(e[i]);
      any_sym = true;
    }
    if (!any_sym) {
      os << wallcross::to_string(a);
    } else if (a == 1) {
      os << mono.str();
    } else {
      os << wallcross::to_string(a) << "*" << mono.str();
    }
  }
  return os.str();
}

PairingPoly pair_symbol(SurfSym a, SurfSym b) {
  if (static_cast<int>(a) > static_cast<int>(b)) std::swap(a, b);
  if (a == SurfSym::Alpha && b == SurfSym::Alpha) return PairingPoly::symbol(Sym::AA);
  if (a == SurfSym::Alpha && b == SurfSym::Zeta) return PairingPoly::symbol(Sym::AZ);
  if (a == SurfSym::Alpha && b == SurfSym::K) return PairingPoly::symbol(Sym::AK);
  if (a == SurfSym::Zeta && b == SurfSym::Zeta) return PairingPoly::symbol(Sym::ZZ);
  if (a == SurfSym::Zeta && b == SurfSym::K) return PairingPoly::symbol(Sym::ZK);
  return PairingPoly::symbol(Sym::KK);
}

}  // namespace wallcross
