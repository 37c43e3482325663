#pragma once

#include <optional>

#include "wallcross/graded.hpp"

namespace wallcross {

/// A bundle (or coherent-sheaf) class: rank plus total Chern class with
/// c_0 = 1. The rank is bookkeeping only; for the extension bundles it is
/// ell + h(zeta) with h left symbolic, hence unset.
struct BundleClassData {
  std::optional<int> rank;
  GradedClass total_chern;
};

/// Total Segre class via s_n = -c_1 s_{n-1} - c_2 s_{n-2} - ... - c_n
/// (s_0 = 1), truncated at the variety's top degree.
GradedClass segre_from_chern(const BundleClassData& b);

/// c_i(E^v) = (-1)^i c_i(E).
BundleClassData dual_chern(const BundleClassData& b);

/// Whitney: total classes multiply, ranks add.
BundleClassData sum_chern(const BundleClassData& a, const BundleClassData& b);

enum class ZetaSign { Plus, Minus };

/// Chern data of the extension bundle E_{s*zeta}^{n1,n2} on its parameter
/// variety, exactly as printed (ell = n1 + n2 <= 2). Unsupported (n1,n2)
/// throws NotImplementedError.
BundleClassData chern_of_E(int n1, int n2, ZetaSign sign);

/// The parameter variety H_{n1} x H_{n2} for n1 + n2 <= 2.
const SymbolicVariety& parameter_variety(int n1, int n2);

}  // namespace wallcross
