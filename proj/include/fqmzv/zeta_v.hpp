#pragma once

#include "fqmzv/power_sums.hpp"
#include "fqmzv/vadic.hpp"
#include "fqmzv/zeta_infty.hpp"

namespace fqmzv {

// zeta_v(-m_1,...,-m_r) (star per t.star) at the place v, exact in A.
// t.ms holds the exponent magnitudes m_j >= 0; chains are capped at
// i_j <= m_j + d, past which S~ vanishes.
Poly zeta_v_neg(const VPlace& place, const ExponentTuple& t);

// Certified lower bound for ord_v(S~_i(t)), valid for every exponent t:
// (q-1) * sum_{j=1}^{floor(i/d)} max(0, i - j d - 1).
long long term_bound_v(const VPlace& place, long long i);

// S~_i(t) mod m_v^level for a signed integer argument t (the sum of n^{-t}
// over monic n of degree i coprime to v).
VAdic s_tilde_level(const VPlace& place, long long i, long long t, int level);

// Value of zeta_v (or zeta_v^star) at the integer tuple t.ms (arguments as
// given, any sign), correct mod m_v^level.  Each chain index is capped at
// the least I with term_bound_v(I) >= level; throws "precision unreachable"
// if no such I <= i_max exists.
VAdic zeta_v_eval(const VPlace& place, const ExponentTuple& t, int level, int i_max = 512);

// sigma-weighted variant: sum over chains of prod sigma_j^{-i_j} S~_{i_j}(t_j),
// i.e. the value at ((sigma_1, t_1), ..., (sigma_r, t_r)).  sigmas must be
// units given at level >= the requested level.
VAdic zeta_v_point(const VPlace& place, const std::vector<VAdic>& sigmas, const ExponentTuple& t,
                   int level, int i_max = 512);

// The same value as zeta_v_neg through the degree-splitting formula, built
// from zeta_{<d} blocks and zeta_inf values.
Poly zeta_v_via_recursion(const VPlace& place, const ExponentTuple& t);

// Reconstructs zeta_inf(-m_1,...,-m_r) from zeta_v values and zeta_{<d}
// blocks alone, by solving the difference identity recursively (depth and
// exponent reduction).  Equals zeta_inf_neg on the same tuple.
Poly infty_from_v(const VPlace& place, const ExponentTuple& t);

struct CongruenceReport {
    bool holds;
    VAdic lhs, rhs;
};

// Checks zeta_v(m) == zeta_v(l) mod m_v^e given m_i == l_i mod
// (q^d-1) q^{(e-1)d}; a violated hypothesis is an input error.
CongruenceReport kummer_check(const VPlace& place, const std::vector<long long>& m,
                              const std::vector<long long>& l, int e, bool star = false);

void zeta_v_cache_clear();

}  // namespace fqmzv
