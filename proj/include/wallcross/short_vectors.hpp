#pragma once

#include <vector>

#include "wallcross/rational.hpp"

namespace wallcross {

/// All nonzero integer vectors v with v^T Q v <= bound, for a symmetric
/// positive-definite rational form Q. Exact Fincke-Pohst enumeration over an
/// LDL^T decomposition; one representative per +-pair is NOT taken (both
/// signs are returned). Throws if Q is not positive definite.
std::vector<IVec> short_vectors(const RMat& Q, const Rational& bound);

}  // namespace wallcross
