#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>
#include <Eigen/Core>

namespace wallcross {

using Int = std::int64_t;

/// Exact rational scalar. Always kept in canonical form (lowest terms,
/// positive denominator).
using Rational = mpq_class;

inline Rational make_rational(Int num, Int den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline Rational rat(Int num, Int den = 1) { return make_rational(num, den); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Canonical rendering: "p/q" in lowest terms, "p" when q == 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational pow_rational(const Rational& base, int e) {
  if (e < 0) throw std::domain_error("negative exponent");
  Rational acc(1), b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  acc.canonicalize();
  return acc;
}

/// floor of a rational.
inline Int floor_rational(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("floor out of range");
  return static_cast<Int>(f.get_si());
}

inline Int ceil_rational(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!c.fits_slong_p()) throw std::overflow_error("ceil out of range");
  return static_cast<Int>(c.get_si());
}

using RMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

}  // namespace wallcross

namespace Eigen {

template <>
struct NumTraits<wallcross::Rational> : GenericNumTraits<wallcross::Rational> {
  using Real = wallcross::Rational;
  using NonInteger = wallcross::Rational;
  using Nested = wallcross::Rational;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
