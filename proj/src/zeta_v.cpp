#include "fqmzv/zeta_v.hpp"

#include <stdexcept>

#include "fqmzv/binomial.hpp"
#include "fqmzv/enumerate.hpp"
#include "fqmzv/lru_cache.hpp"

namespace fqmzv {

namespace {

struct VKey {
    const void* ctx;
    bool star;
    std::vector<long long> ms;
    long long aux = 0;
    bool operator==(const VKey& o) const {
        return ctx == o.ctx && star == o.star && aux == o.aux && ms == o.ms;
    }
};

struct VKeyHash {
    size_t operator()(const VKey& k) const {
        size_t h = std::hash<const void*>()(k.ctx) ^ (k.star ? 0x517cc1b727220a95ULL : 0);
        h = h * 1099511628211ULL ^ std::hash<long long>()(k.aux);
        for (long long m : k.ms) h = h * 1099511628211ULL ^ std::hash<long long>()(m);
        return h;
    }
};

LruCache<VKey, Poly, VKeyHash>& vneg_cache() {
    static LruCache<VKey, Poly, VKeyHash> cache(size_t(1) << 18);
    return cache;
}

LruCache<VKey, Poly, VKeyHash>& from_v_cache() {
    static LruCache<VKey, Poly, VKeyHash> cache(size_t(1) << 18);
    return cache;
}

LruCache<VKey, VAdic, VKeyHash>& stilde_level_cache() {
    static LruCache<VKey, VAdic, VKeyHash> cache(size_t(1) << 18);
    return cache;
}

void require_nonneg(const ExponentTuple& t) {
    if (t.ms.empty()) throw std::invalid_argument("tuple depth must be >= 1");
    for (long long m : t.ms)
        if (m < 0) throw std::invalid_argument("exponents must be >= 0 here");
}

}  // namespace

Poly zeta_v_neg(const VPlace& place, const ExponentTuple& t) {
    require_nonneg(t);
    const Fq& f = place.field();
    VKey key{&place, t.star, t.ms};
    if (auto hit = vneg_cache().get(key)) return *hit;
    std::vector<long long> caps(t.ms.size());
    for (size_t j = 0; j < t.ms.size(); ++j) caps[j] = t.ms[j] + place.degree();
    Poly acc(f);
    for_each_chain(caps, !t.star, [&](const std::vector<long long>& idx) {
        Poly term = Poly::one(f);
        for (size_t j = 0; j < idx.size(); ++j) {
            term *= power_sum_S_tilde(place, idx[j], t.ms[j]);
            if (term.is_zero()) return;
        }
        acc += term;
    });
    vneg_cache().put(key, acc);
    return acc;
}

long long term_bound_v(const VPlace& place, long long i) {
    if (i < 0) throw std::invalid_argument("term_bound_v needs i >= 0");
    const int d = place.degree();
    long long s = 0;
    for (long long j = 1; j * d <= i; ++j) s += std::max<long long>(0, i - j * d - 1);
    return (place.field().q() - 1) * s;
}

VAdic s_tilde_level(const VPlace& place, long long i, long long t, int level) {
    if (i < 0) throw std::invalid_argument("s_tilde_level needs i >= 0");
    VKey key{&place, false, {i, t}, level};
    if (auto hit = stilde_level_cache().get(key)) return *hit;
    VAdic acc;
    if (t <= 0) {
        acc = vadic_reduce(place, power_sum_S_tilde(place, i, -t), level);
    } else {
        acc = VAdic::zero(place, level);
        const Poly& v = place.v();
        for_each_monic(place.field(), int(i), [&](const Poly& n) {
            if ((n % v).is_zero()) return;
            acc = acc + vadic_pow(vadic_reduce(place, n, level), -t, level);
        });
    }
    stilde_level_cache().put(key, acc);
    return acc;
}

namespace {

// Least I with term_bound_v(I) >= level (the bound is nondecreasing in I).
long long chain_cap(const VPlace& place, int level, int i_max) {
    for (long long I = 0; I <= i_max; ++I)
        if (term_bound_v(place, I) >= level) return I;
    throw std::runtime_error("precision unreachable: term bound cap search exceeded i_max");
}

}  // namespace

VAdic zeta_v_point(const VPlace& place, const std::vector<VAdic>& sigmas, const ExponentTuple& t,
                   int level, int i_max) {
    if (t.ms.empty()) throw std::invalid_argument("tuple depth must be >= 1");
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    if (sigmas.size() != t.ms.size()) throw std::invalid_argument("one sigma per coordinate required");
    const int d = place.degree();
    const long long cap = chain_cap(place, level, i_max);

    std::vector<long long> caps(t.ms.size());
    for (size_t j = 0; j < t.ms.size(); ++j) {
        caps[j] = cap;
        if (t.ms[j] <= 0) caps[j] = std::min(cap, -t.ms[j] + d);  // exact vanishing past m+d
    }

    // sigma_j^{-i} for 0 <= i <= caps[j]
    std::vector<std::vector<VAdic>> sig_pows(t.ms.size());
    for (size_t j = 0; j < t.ms.size(); ++j) {
        if (!sigmas[j].is_unit()) throw std::domain_error("sigma not a unit");
        VAdic inv = sigmas[j].reduced_to(level).inv();
        sig_pows[j].push_back(VAdic::one(place, level));
        for (long long i = 1; i <= caps[j]; ++i) sig_pows[j].push_back(sig_pows[j].back() * inv);
    }

    VAdic acc = VAdic::zero(place, level);
    for_each_chain(caps, !t.star, [&](const std::vector<long long>& idx) {
        VAdic term = VAdic::one(place, level);
        for (size_t j = 0; j < idx.size(); ++j) {
            VAdic s = s_tilde_level(place, idx[j], t.ms[j], level);
            if (s.is_zero()) return;
            term = term * sig_pows[j][size_t(idx[j])] * s;
        }
        acc = acc + term;
    });
    return acc;
}

VAdic zeta_v_eval(const VPlace& place, const ExponentTuple& t, int level, int i_max) {
    std::vector<VAdic> ones(t.ms.size(), VAdic::one(place, level));
    return zeta_v_point(place, ones, t, level, i_max);
}

Poly zeta_v_via_recursion(const VPlace& place, const ExponentTuple& t) {
    require_nonneg(t);
    const Fq& f = place.field();
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

        // Inner sum over 0 <= a_j <= m_j (closed upper bound, in contrast to
        // the infinity-adic formula) with (q-1) | (m_j - a_j).
        Poly inner(f);
        std::vector<long long> a(l, 0);
        auto rec = [&](auto&& self, int j, Poly partial, long long asum) -> void {
            if (partial.is_zero()) return;
            if (j == l) {
                ExponentTuple sub{std::vector<long long>(a.begin(), a.end()), t.star};
                Poly z = zeta_inf_neg(f, sub);
                if (z.is_zero()) return;
                inner += place.v_pow(int(asum)) * partial * z;
                return;
            }
            for (long long aj = t.ms[j] % (q - 1); aj <= t.ms[j]; aj += (q - 1)) {
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
    return total;
}

Poly infty_from_v(const VPlace& place, const ExponentTuple& t) {
    require_nonneg(t);
    const Fq& f = place.field();
    VKey key{&place, t.star, t.ms};
    if (auto hit = from_v_cache().get(key)) return *hit;

    const int r = t.depth();
    const int d = place.degree();
    const int q = f.q();
    const fq_elem minus_one = f.neg(f.one());

    long long msum = 0;
    for (long long m : t.ms) msum += m;

    Poly result(f);
    if (msum == 0) {
        // All-zero tuple: 1 + (-1)^r v^0 can vanish, so seed directly.
        // Non-star values vanish at depth >= 2 (a middle zero exponent);
        // star values keep only the all-zero chain.
        result = (t.star || r == 1) ? Poly::one(f) : Poly(f);
        from_v_cache().put(key, result);
        return result;
    }

    // Difference identity: zeta_v(-m) - zeta_inf(-m) = R + (-1)^r v^{|m|} zeta_inf(-m),
    // where R collects the terms with some a_j = m_j other than (l, a) = (r, m).
    Poly R(f);
    for (int l = 1; l <= r; ++l) {
        std::vector<long long> tail(t.ms.begin() + l, t.ms.end());
        Poly outer = detail::zeta_truncated_any(f, d, tail, t.star);
        if (outer.is_zero()) continue;

        Poly inner(f);
        std::vector<long long> a(l, 0);
        auto rec = [&](auto&& self, int j, Poly partial, long long asum, bool hit_top) -> void {
            if (partial.is_zero()) return;
            if (j == l) {
                if (!hit_top) return;  // need a_j = m_j for some j
                if (l == r && asum == msum) return;  // the extracted (r, m) term
                ExponentTuple sub{std::vector<long long>(a.begin(), a.end()), t.star};
                Poly z = infty_from_v(place, sub);
                if (z.is_zero()) return;
                inner += place.v_pow(int(asum)) * partial * z;
                return;
            }
            for (long long aj = t.ms[j] % (q - 1); aj <= t.ms[j]; aj += (q - 1)) {
                int b = binomial_mod_p(t.ms[j], aj, f.p());
                if (b == 0) continue;
                a[j] = aj;
                Poly zd = zeta_truncated(f, d, {t.ms[j] - aj}, false);
                self(self, j + 1, partial.scaled(f.from_int(b)) * zd, asum + aj,
                     hit_top || aj == t.ms[j]);
            }
        };
        rec(rec, 0, Poly::one(f), 0, false);

        Poly term = outer * inner;
        if (l % 2 == 1) term = term.scaled(minus_one);
        R += term;
    }

    Poly denom = Poly::one(f);
    Poly vpow = place.v_pow(int(msum));
    denom += (r % 2 == 1) ? vpow.scaled(minus_one) : vpow;

    Poly num = zeta_v_neg(place, t) - R;
    auto [quot, rem] = divmod(num, denom);
    if (!rem.is_zero())
        throw std::logic_error("infty_from_v: inconsistent residue while solving the difference identity");
    result = quot;
    from_v_cache().put(key, result);
    return result;
}

CongruenceReport kummer_check(const VPlace& place, const std::vector<long long>& m,
                              const std::vector<long long>& l, int e, bool star) {
    if (m.size() != l.size() || m.empty())
        throw std::invalid_argument("kummer_check needs two index tuples of equal depth");
    if (e < 1) throw std::invalid_argument("kummer_check needs e >= 1");
    bool fits = false;
    long long order = place.unit_group_order(e, fits);
    if (!fits) throw std::invalid_argument("unit-group order overflows; lower e");
    for (size_t j = 0; j < m.size(); ++j) {
        long long diff = (m[j] - l[j]) % order;
        if (diff != 0) throw std::invalid_argument("hypothesis violated: exponents not congruent mod (q^d-1)q^{(e-1)d}");
    }
    VAdic lhs = zeta_v_eval(place, {m, star}, e);
    VAdic rhs = zeta_v_eval(place, {l, star}, e);
    return {lhs == rhs, lhs, rhs};
}

void zeta_v_cache_clear() {
    vneg_cache().clear();
    from_v_cache().clear();
    stilde_level_cache().clear();
}

}  // namespace fqmzv
