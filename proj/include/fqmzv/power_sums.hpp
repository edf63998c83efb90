#pragma once

#include <cstddef>
#include <vector>

#include "fqmzv/poly.hpp"
#include "fqmzv/vadic.hpp"

namespace fqmzv {

// Argument tuple for the multiple zeta evaluators.  The meaning of `ms` is
// fixed by each consumer: exponent magnitudes m_j >= 0 standing for the
// arguments (-m_1, ..., -m_r), positive integer arguments for the Laurent
// evaluator, or signed integer arguments for the v-adic evaluator.  The
// caller states the mode; it is never inferred from signs.
struct ExponentTuple {
    std::vector<long long> ms;
    bool star = false;

    int depth() const { return int(ms.size()); }
};

// S_i(-m) = sum of n^m over monic n of degree i.  Zero for i >= m+1 without
// enumeration; memoized.
Poly power_sum_S(const Fq& f, long long i, long long m);

// S~_i(-m): the same sum restricted to n coprime to v.  Equals S_i(-m) for
// i < d and S_i(-m) - v^m S_{i-d}(-m) for i >= d; vanishes for i >= m+d+1.
Poly power_sum_S_tilde(const VPlace& place, long long i, long long m);

// zeta_{<d}(-m_1,...,-m_r): sum over chains d_bound > i_1 > ... > i_r >= 0
// (weakly decreasing below d_bound when star) of prod S_{i_j}(-m_j).  The
// literal chain sum, so an empty chain set gives 0.
Poly zeta_truncated(const Fq& f, int d_bound, const std::vector<long long>& ms, bool star);

// Cache controls shared by the power-sum memo tables.
void power_sum_cache_clear();
void power_sum_cache_set_capacity(size_t entries);

// Enumerates chains i_1 R i_2 R ... R i_r >= 0 with i_j <= caps[j], where R
// is > (strict) or >= (weak).  fn receives the chain as a vector of longs.
template <class Fn>
void for_each_chain(const std::vector<long long>& caps, bool strict, Fn&& fn) {
    const int r = int(caps.size());
    std::vector<long long> idx(r);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == r) { fn(const_cast<const std::vector<long long>&>(idx)); return; }
        long long hi = caps[j];
        if (j > 0) hi = std::min(hi, strict ? idx[j - 1] - 1 : idx[j - 1]);
        for (long long i = 0; i <= hi; ++i) {
            idx[j] = i;
            self(self, j + 1);
        }
    };
    if (r == 0) { fn(const_cast<const std::vector<long long>&>(idx)); return; }
    rec(rec, 0);
}

namespace detail {
// Uncached evaluation paths, used by the memo-transparency tests.
Poly power_sum_S_direct(const Fq& f, long long i, long long m);
Poly power_sum_S_tilde_direct(const VPlace& place, long long i, long long m);
// zeta_{<d} with the empty tuple allowed (empty product convention: 1).
Poly zeta_truncated_any(const Fq& f, int d_bound, const std::vector<long long>& ms, bool star);
}  // namespace detail

}  // namespace fqmzv
