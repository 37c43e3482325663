#include "wallcross/short_vectors.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace wallcross {

namespace {

/// Largest integer x with x <= r, and smallest with x >= r, for r = c + s*sqrt(t)
/// handled exactly by predicate testing: we only ever need integer ranges
/// [ceil(c - sqrt(t)), floor(c + sqrt(t))] with t >= 0 rational. Start from a
/// double estimate and correct with exact comparisons.
Int floor_c_plus_sqrt(const Rational& c, const Rational& t) {
  double est = c.get_d() + std::sqrt(std::max(0.0, t.get_d()));
  Int x = static_cast<Int>(std::floor(est));
  auto ok = [&](Int v) {
    // v <= c + sqrt(t)  <=>  v - c <= sqrt(t)
    Rational d = Rational(static_cast<long>(v)) - c;
    if (d <= 0) return true;
    return Rational(d * d) <= t;
  };
  while (ok(x + 1)) ++x;
  while (!ok(x)) --x;
  return x;
}

Int ceil_c_minus_sqrt(const Rational& c, const Rational& t) {
  double est = c.get_d() - std::sqrt(std::max(0.0, t.get_d()));
  Int x = static_cast<Int>(std::ceil(est));
  auto ok = [&](Int v) {
    // v >= c - sqrt(t)  <=>  c - v <= sqrt(t)
    Rational d = c - Rational(static_cast<long>(v));
    if (d <= 0) return true;
    return Rational(d * d) <= t;
  };
  while (ok(x - 1)) --x;
  while (!ok(x)) ++x;
  return x;
}

}  // namespace

std::vector<IVec> short_vectors(const RMat& Q, const Rational& bound) {
  const int n = static_cast<int>(Q.rows());
  if (Q.cols() != n) throw std::domain_error("short_vectors: non-square form");
  if (bound < 0) return {};

  // Exact LDL^T: Q = L D L^T, L unit lower triangular.
  RMat L = RMat::Identity(n, n);
  RVec D(n);
  RMat A = Q;
  for (int j = 0; j < n; ++j) {
    Rational d = A(j, j);
    for (int k = 0; k < j; ++k) d -= L(j, k) * L(j, k) * D(k);
    if (!(d > 0)) throw std::domain_error("short_vectors: form not positive definite");
    D(j) = d;
    for (int i = j + 1; i < n; ++i) {
      Rational v = A(i, j);
      for (int k = 0; k < j; ++k) v -= L(i, k) * L(j, k) * D(k);
      L(i, j) = v / d;
    }
  }

  // Q(x) = sum_j D_j (x_j + sum_{i>j} L_ij x_i)^2; enumerate from the last
  // coordinate down.
  std::vector<IVec> out;
  IVec x = IVec::Zero(n);

  std::function<void(int, Rational)> descend = [&](int j, Rational budget) {
    if (j < 0) {
      if (!x.isZero()) out.push_back(x);
      return;
    }
    Rational c(0);
    for (int i = j + 1; i < n; ++i)
      if (x(i) != 0) c += L(i, j) * Rational(static_cast<long>(x(i)));
    // D_j (x_j + c)^2 <= budget
    Rational t = budget / D(j);
    Int lo = ceil_c_minus_sqrt(Rational(-c), t);
    Int hi = floor_c_plus_sqrt(Rational(-c), t);
    for (Int v = lo; v <= hi; ++v) {
      x(j) = v;
      Rational used = Rational(static_cast<long>(v)) + c;
      used = used * used * D(j);
      descend(j - 1, Rational(budget - used));
    }
    x(j) = 0;
  };
  descend(n - 1, bound);
  return out;
}

}  // namespace wallcross
