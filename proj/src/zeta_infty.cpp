#include "fqmzv/zeta_infty.hpp"

#include <stdexcept>

#include "fqmzv/binomial.hpp"
#include "fqmzv/enumerate.hpp"
#include "fqmzv/lru_cache.hpp"

namespace fqmzv {

namespace {

struct TupleKey {
    const void* ctx;
    bool star;
    std::vector<long long> ms;
    long long aux = 0;
    bool operator==(const TupleKey& o) const {
        return ctx == o.ctx && star == o.star && aux == o.aux && ms == o.ms;
    }
};

struct TupleKeyHash {
    size_t operator()(const TupleKey& k) const {
        size_t h = std::hash<const void*>()(k.ctx) ^ (k.star ? 0x9e3779b97f4a7c15ULL : 0);
        h = h * 1099511628211ULL ^ std::hash<long long>()(k.aux);
        for (long long m : k.ms) h = h * 1099511628211ULL ^ std::hash<long long>()(m);
        return h;
    }
};

LruCache<TupleKey, Poly, TupleKeyHash>& neg_cache() {
    static LruCache<TupleKey, Poly, TupleKeyHash> cache(size_t(1) << 18);
    return cache;
}

LruCache<TupleKey, Poly, TupleKeyHash>& rec_cache() {
    static LruCache<TupleKey, Poly, TupleKeyHash> cache(size_t(1) << 18);
    return cache;
}

LruCache<TupleKey, Laurent, TupleKeyHash>& pos_term_cache() {
    static LruCache<TupleKey, Laurent, TupleKeyHash> cache(size_t(1) << 16);
    return cache;
}

void require_nonneg(const ExponentTuple& t) {
    if (t.ms.empty()) throw std::invalid_argument("tuple depth must be >= 1");
    for (long long m : t.ms)
        if (m < 0) throw std::invalid_argument("exponents must be >= 0 here");
}

}  // namespace

Laurent power_sum_S_pos(const Fq& f, long long i, long long m, int precision) {
    if (i < 0 || m < 1) throw std::invalid_argument("power_sum_S_pos needs i >= 0 and m >= 1");
    TupleKey key{&f, false, {i, m}, precision};
    if (auto hit = pos_term_cache().get(key)) return *hit;
    Laurent acc = Laurent::zero(f, precision);
    for_each_monic(f, int(i), [&](const Poly& n) {
        acc = acc + Laurent::inverse_of_poly(n.pow((unsigned long long)m), precision);
    });
    pos_term_cache().put(key, acc);
    return acc;
}

long long term_bound_inf(long long i) {
    if (i < 0) throw std::invalid_argument("term_bound_inf needs i >= 0");
    return i * (i + 1) / 2;
}

Poly zeta_inf_neg(const Fq& f, const ExponentTuple& t) {
    require_nonneg(t);
    TupleKey key{&f, t.star, t.ms};
    if (auto hit = neg_cache().get(key)) return *hit;
    Poly acc(f);
    for_each_chain(t.ms, !t.star, [&](const std::vector<long long>& idx) {
        Poly term = Poly::one(f);
        for (size_t j = 0; j < idx.size(); ++j) {
            term *= power_sum_S(f, idx[j], t.ms[j]);
            if (term.is_zero()) return;
        }
        acc += term;
    });
    neg_cache().put(key, acc);
    return acc;
}

Poly zeta_inf_neg_recursive(const VPlace& place, const ExponentTuple& t) {
    require_nonneg(t);
    const Fq& f = place.field();
    TupleKey key{&place, t.star, t.ms};
    if (auto hit = rec_cache().get(key)) return *hit;

    const int r = t.depth();
    const int d = place.degree();
    const int q = f.q();
    const fq_elem minus_one = f.neg(f.one());

    Poly total(f);
    for (int l = 0; l <= r; ++l) {
        std::vector<long long> tail(t.ms.begin() + l, t.ms.end());
        Poly outer = detail::zeta_truncated_any(f, d, tail, t.star);
        if (outer.is_zero()) continue;
        if (l == 0) { total += outer; continue; }

        // Inner sum over 0 <= a_j < m_j with (q-1) | (m_j - a_j); empty when
        // some m_j = 0.
        bool empty = false;
        for (int j = 0; j < l; ++j)
            if (t.ms[j] == 0) { empty = true; break; }
        if (empty) continue;

        Poly inner(f);
        std::vector<long long> a(l, 0);
        auto rec = [&](auto&& self, int j, Poly partial, long long asum) -> void {
            if (partial.is_zero()) return;
            if (j == l) {
                ExponentTuple sub{std::vector<long long>(a.begin(), a.end()), t.star};
                Poly z = zeta_inf_neg_recursive(place, sub);
                if (z.is_zero()) return;
                inner += place.v_pow(int(asum)) * partial * z;
                return;
            }
            for (long long aj = t.ms[j] % (q - 1); aj < t.ms[j]; aj += (q - 1)) {
                int b = binomial_mod_p(t.ms[j], aj, f.p());
                if (b == 0) continue;
                a[j] = aj;
                Poly zd = zeta_truncated(f, d, {t.ms[j] - aj}, false);
                self(self, j + 1, partial.scaled(f.from_int(b)) * zd, asum + aj);
            }
        };
        rec(rec, 0, Poly::one(f), 0);

        Poly term = outer * inner;
        if (l % 2 == 1) term = term.scaled(minus_one);
        total += term;
    }

    rec_cache().put(key, total);
    return total;
}

Laurent zeta_inf_pos(const Fq& f, const ExponentTuple& t, int precision) {
    if (t.ms.empty()) throw std::invalid_argument("tuple depth must be >= 1");
    if (precision < 1) throw std::invalid_argument("precision must be >= 1");
    for (long long m : t.ms)
        if (m < 1) throw std::invalid_argument("positive-argument tuples need m_j >= 1");

    const int r = t.depth();
    Laurent acc = Laurent::zero(f, precision);
    std::vector<long long> idx(r);
    // Chains with total weight sum_j i_j m_j < precision; all dropped terms
    // have ord >= precision.
    auto rec = [&](auto&& self, int j, long long budget) -> void {
        if (j == r) {
            Laurent term = Laurent::one(f, precision);
            for (int u = 0; u < r; ++u) term = term * power_sum_S_pos(f, idx[u], t.ms[u], precision);
            acc = acc + term;
            return;
        }
        long long hi = (precision - 1 - budget) / t.ms[j];
        if (j > 0) hi = std::min(hi, t.star ? idx[j - 1] : idx[j - 1] - 1);
        for (long long i = 0; i <= hi; ++i) {
            idx[j] = i;
            self(self, j + 1, budget + i * t.ms[j]);
        }
    };
    rec(rec, 0, 0);
    return acc;
}

void zeta_inf_cache_clear() {
    neg_cache().clear();
    rec_cache().clear();
    pos_term_cache().clear();
}

}  // namespace fqmzv
