#include <doctest.h>

#include <random>

#include "wallcross/pairing_poly.hpp"

using namespace wallcross;

namespace {
PairingPoly S(Sym s, int e = 1) { return PairingPoly::symbol(s, e); }
}

TEST_CASE("canonical form and syntactic equality") {
  PairingPoly p = S(Sym::ZZ) * rat(3) + S(Sym::KK) - S(Sym::ZZ) * rat(3);
  CHECK(p == S(Sym::KK));
  CHECK((p - S(Sym::KK)).is_zero());
  CHECK(PairingPoly(rat(0)).is_zero());
  CHECK(PairingPoly(rat(6, 3)) == PairingPoly(rat(2)));
}

TEST_CASE("arithmetic and powers") {
  PairingPoly a = S(Sym::AZ) + PairingPoly(rat(1));
  PairingPoly sq = a.pow(2);
  CHECK(sq == S(Sym::AZ, 2) + S(Sym::AZ) * rat(2) + PairingPoly(rat(1)));
  CHECK(a.pow(0) == PairingPoly(rat(1)));
  CHECK((a * rat(1, 2) * rat(2)) == a);
}

TEST_CASE("substitution") {
  PairingPoly p = S(Sym::ZZ, 2) + S(Sym::ZZ) * S(Sym::KK);
  PairingPoly q = p.substitute(Sym::ZZ, rat(-3));
  CHECK(q == PairingPoly(rat(9)) - S(Sym::KK) * rat(3));
  PairingPoly r = p.substitute(Sym::ZZ, S(Sym::CHI) + PairingPoly(rat(1)));
  CHECK(r.contains(Sym::CHI));
  CHECK_FALSE(r.contains(Sym::ZZ));
}

TEST_CASE("negate_zeta flips odd zeta-linear symbols") {
  PairingPoly p = S(Sym::AZ) * S(Sym::ZK) + S(Sym::AZ) + S(Sym::ZZ);
  PairingPoly n = p.negate_zeta();
  CHECK(n == S(Sym::AZ) * S(Sym::ZK) - S(Sym::AZ) + S(Sym::ZZ));
  CHECK(n.negate_zeta() == p);
}

TEST_CASE("coefficient extraction") {
  // 5 AZ^2 AA + 7 AZ^2 + KK AZ^4
  PairingPoly p = S(Sym::AZ, 2) * S(Sym::AA) * rat(5) + S(Sym::AZ, 2) * rat(7) +
                  S(Sym::KK) * S(Sym::AZ, 4);
  CHECK(p.coefficient(Sym::AZ, 2, Sym::AA, 1) == PairingPoly(rat(5)));
  CHECK(p.coefficient(Sym::AZ, 2, Sym::AA, 0) == PairingPoly(rat(7)));
  CHECK(p.coefficient(Sym::AZ, 4, Sym::AA, 0) == S(Sym::KK));
  CHECK(p.degree_in(Sym::AZ) == 4);
}

TEST_CASE("evaluation is exact") {
  PairingPoly p = S(Sym::AZ, 4) * rat(1, 16) + S(Sym::AA) * rat(3);
  Rational v = p.evaluate({{Sym::AZ, rat(1)}, {Sym::AA, rat(1)}});
  CHECK(v == rat(49, 16));
  CHECK_THROWS(p.evaluate({{Sym::AZ, rat(1)}}));  // AA unassigned
}

TEST_CASE("rendering is canonical") {
  PairingPoly p = S(Sym::ZZ, 2) * rat(18) - S(Sym::KK) * rat(50) + PairingPoly(rat(96));
  CHECK(p.to_string() == "18*ZZ^2 - 50*KK + 96");
  CHECK(PairingPoly().to_string() == "0");
}

TEST_CASE("substitution is a ring homomorphism (randomized)") {
  std::mt19937_64 rng(314);
  std::uniform_int_distribution<Int> cdist(-6, 6);
  std::uniform_int_distribution<int> sdist(0, kNumSyms - 1);
  auto random_poly = [&](int terms) {
    PairingPoly p;
    for (int t = 0; t < terms; ++t) {
      PairingPoly mono(rat(cdist(rng)));
      mono *= PairingPoly::symbol(static_cast<Sym>(sdist(rng)));
      if (rng() & 1) mono *= PairingPoly::symbol(static_cast<Sym>(sdist(rng)));
      p += mono;
    }
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    PairingPoly a = random_poly(3), b = random_poly(3), v = random_poly(2);
    Sym s = static_cast<Sym>(sdist(rng));
    CHECK((a * b).substitute(s, v) == a.substitute(s, v) * b.substitute(s, v));
    CHECK((a + b).substitute(s, v) == a.substitute(s, v) + b.substitute(s, v));
  }
}
