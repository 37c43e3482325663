#pragma once

#include <vector>

#include "wallcross/bundles.hpp"

namespace wallcross {

/// S_j = sum_{k=0}^{ell} ([Z_{ell-k}]/alpha + [Z_k]/alpha)^j
///              . s_{2 ell - j}(E_zeta^{ell-k,k} (+) (E_{-zeta}^{k,ell-k})^v)
/// evaluated on the parameter variety of each k-term, as an exact
/// PairingPoly with ZZ, KK, CHI kept symbolic. Supports ell <= 2.
/// `negate` computes the -zeta variant (AZ -> -AZ, ZK -> -ZK symmetry).
PairingPoly compute_S_j(int ell, int j, bool negate = false);

/// T_j = sum_{k=0}^{ell} (slant alpha sum)^j . ([Z_{ell-k}] + [Z_k])/x
///              . s_{2 ell - 2 - j}(same Whitney sum);
/// zero when 2 ell - 2 - j < 0. T_0 at ell = 1 is the scalar 2.
PairingPoly compute_T_j(int ell, int j, bool negate = false);

/// S_j's k-th summand (exposed for tests).
PairingPoly compute_S_term(int ell, int k, int j);
PairingPoly compute_T_term(int ell, int k, int j);

/// Independent verification oracle for the slant-product intersection
/// numbers on Hilb^k X, k <= 4: expands
/// (sum_i a_i)^{p_A} (sum_i z_i)^{p_Z} (sum_i k_i)^{p_K} over X^k in
/// commuting slot symbols (slot degree capped at 2, each full slot pairing
/// to the surface form) and divides by k!. The multidegree is over the
/// surface classes {alpha, zeta, K} and must sum to 2k.
PairingPoly slant_oracle(int k, const std::array<int, 3>& multidegree);

}  // namespace wallcross
