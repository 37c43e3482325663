#include <doctest.h>

#include <random>

#include "wallcross/lattice.hpp"

using namespace wallcross;

TEST_CASE("preset invariants") {
  auto p2 = SurfaceLattice::projective_plane();
  CHECK(p2->rank() == 1);
  CHECK(p2->gram()(0, 0) == 1);
  CHECK(p2->canonical()(0) == -3);
  CHECK(p2->canonical_square() == 9);

  auto bl1 = SurfaceLattice::blowup_plane(1);
  CHECK(bl1->rank() == 2);
  CHECK(bl1->gram()(0, 0) == 1);
  CHECK(bl1->gram()(1, 1) == -1);
  CHECK(bl1->gram()(0, 1) == 0);
  CHECK(bl1->canonical_square() == 8);
  CHECK(bl1->anticanonical_effective_guaranteed());

  auto f0 = SurfaceLattice::hirzebruch(0);
  CHECK(f0->canonical_square() == 8);
  auto f3 = SurfaceLattice::hirzebruch(3);
  CHECK(f3->canonical_square() == 8);

  CHECK_FALSE(SurfaceLattice::blowup_plane(9)->anticanonical_effective_guaranteed());
}

TEST_CASE("pairing examples") {
  auto bl1 = SurfaceLattice::blowup_plane(1);
  CHECK(pair(DivisorClass(bl1, {1, 0}), DivisorClass(bl1, {0, 1})) == 0);
  CHECK(pair(canonical_class(bl1), canonical_class(bl1)) == 8);
  auto p2 = SurfaceLattice::projective_plane();
  CHECK(pair(DivisorClass(p2, {1}), DivisorClass(p2, {1})) == 1);
  CHECK_THROWS_AS(pair(DivisorClass(p2, {1}), DivisorClass(bl1, {1, 0})), LatticeError);
}

TEST_CASE("invalid lattices are rejected") {
  IMat pos2(2, 2);
  pos2 << 1, 0, 0, 1;  // signature (2,0)
  IVec k(2), a(2);
  k << -3, -3;
  a << 1, 1;
  CHECK_THROWS_AS(SurfaceLattice::custom(pos2, k, a), LatticeError);

  IMat g(1, 1);
  g << 1;
  IVec badk(1), amp(1);
  badk << -2;  // not characteristic: 1 != -2 (mod 2)
  amp << 1;
  CHECK_THROWS_AS(SurfaceLattice::custom(g, badk, amp), LatticeError);

  IMat asym(2, 2);
  asym << 1, 2, 0, -1;
  IVec k2(2);
  k2 << -3, 1;
  CHECK_THROWS_AS(SurfaceLattice::custom(asym, k2, k2), LatticeError);
}

TEST_CASE("signature computation handles hyperbolic blocks") {
  IMat h(2, 2);
  h << 0, 1, 1, 0;
  Signature s = signature_of(h);
  CHECK(s.positive == 1);
  CHECK(s.negative == 1);
  CHECK(s.zero == 0);
}

TEST_CASE("ample candidates") {
  auto bl1 = SurfaceLattice::blowup_plane(1);
  CHECK(is_ample_candidate(DivisorClass(bl1, {3, -1})));
  CHECK_FALSE(is_ample_candidate(DivisorClass(bl1, {3, 1})));   // negative on E
  CHECK_FALSE(is_ample_candidate(DivisorClass(bl1, {0, 0})));   // zero square
  CHECK_FALSE(is_ample_candidate(DivisorClass(bl1, {1, -1})));  // on the boundary

  auto f0 = SurfaceLattice::hirzebruch(0);
  CHECK(is_ample_candidate(DivisorClass(f0, {1, 1})));
  CHECK_FALSE(is_ample_candidate(DivisorClass(f0, {1, 0})));
}

TEST_CASE("characteristic property over random classes") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> coord(-30, 30);
  for (auto lat : {SurfaceLattice::blowup_plane(3), SurfaceLattice::hirzebruch(1)}) {
    for (int i = 0; i < 1000; ++i) {
      IVec v(lat->rank());
      for (int k = 0; k < lat->rank(); ++k) v(k) = coord(rng);
      DivisorClass x(lat, v);
      Int xx = square(x), xk = pair(x, canonical_class(lat));
      CHECK((xx - xk) % 2 == 0);
      CHECK((xx + xk) % 2 == 0);
    }
  }
}
