#pragma once

#include "fqmzv/laurent.hpp"
#include "fqmzv/power_sums.hpp"

namespace fqmzv {

// zeta_inf(-m_1,...,-m_r) (star per t.star), exact in A.  t.ms holds the
// exponent magnitudes m_j >= 0.  Chains are enumerated inside the box
// i_j <= m_j; everything outside vanishes.
Poly zeta_inf_neg(const Fq& f, const ExponentTuple& t);

// The same value through the degree-splitting recursion at the place v:
// an independent evaluation path built from zeta_{<d} blocks, binomials mod p
// and recursive calls on strictly smaller tuples.  The result does not
// depend on the choice of v.
Poly zeta_inf_neg_recursive(const VPlace& place, const ExponentTuple& t);

// zeta_inf at positive integer arguments (t.ms holds m_j >= 1), as a Laurent
// series in 1/theta correct through the stated precision.  Chains with
// sum_j i_j m_j >= precision are discarded: each factor S_i(m) has
// ord_inf >= i*m term by term.
Laurent zeta_inf_pos(const Fq& f, const ExponentTuple& t, int precision);

// S_i(m) for m >= 1 as a Laurent series, memoized.
Laurent power_sum_S_pos(const Fq& f, long long i, long long m, int precision);

// Diagnostic quadratic bound: ord_inf of the normalized stratum sum
// sum_{deg n = i} (theta^{-i} n)^t is at least i(i+1)/2 for every exponent,
// so ord_inf(S_i(m)) >= i*m + term_bound_inf(i).  The production truncation
// uses the simpler per-term bound i*m.
long long term_bound_inf(long long i);

void zeta_inf_cache_clear();

}  // namespace fqmzv
