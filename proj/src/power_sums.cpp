#include "fqmzv/power_sums.hpp"

#include <stdexcept>

#include "fqmzv/enumerate.hpp"
#include "fqmzv/lru_cache.hpp"

namespace fqmzv {

namespace {

struct SKey {
    const void* ctx;  // field for S, place for S~
    long long i, m;
    bool operator==(const SKey& o) const { return ctx == o.ctx && i == o.i && m == o.m; }
};

struct SKeyHash {
    size_t operator()(const SKey& k) const {
        size_t h = std::hash<const void*>()(k.ctx);
        h = h * 1099511628211ULL ^ std::hash<long long>()(k.i);
        h = h * 1099511628211ULL ^ std::hash<long long>()(k.m);
        return h;
    }
};

LruCache<SKey, Poly, SKeyHash>& s_cache() {
    static LruCache<SKey, Poly, SKeyHash> cache(size_t(1) << 20);
    return cache;
}

LruCache<SKey, Poly, SKeyHash>& s_tilde_cache() {
    static LruCache<SKey, Poly, SKeyHash> cache(size_t(1) << 20);
    return cache;
}

}  // namespace

namespace detail {

Poly power_sum_S_direct(const Fq& f, long long i, long long m) {
    if (i < 0 || m < 0) throw std::invalid_argument("power_sum_S needs i, m >= 0");
    if (i >= m + 1) return Poly(f);  // S_i(-m) = 0 once i >= m+1
    Poly acc(f);
    for_each_monic(f, int(i), [&](const Poly& n) { acc += n.pow((unsigned long long)m); });
    return acc;
}

Poly power_sum_S_tilde_direct(const VPlace& place, long long i, long long m) {
    if (i < 0 || m < 0) throw std::invalid_argument("power_sum_S_tilde needs i, m >= 0");
    const int d = place.degree();
    Poly s = power_sum_S(place.field(), i, m);
    if (i < d) return s;
    return s - place.v().pow((unsigned long long)m) * power_sum_S(place.field(), i - d, m);
}

Poly zeta_truncated_any(const Fq& f, int d_bound, const std::vector<long long>& ms, bool star) {
    if (d_bound < 1) throw std::invalid_argument("zeta_truncated needs d_bound >= 1");
    std::vector<long long> caps(ms.size());
    for (size_t j = 0; j < ms.size(); ++j) {
        if (ms[j] < 0) throw std::invalid_argument("zeta_truncated needs m_j >= 0");
        caps[j] = std::min<long long>(d_bound - 1, ms[j]);
    }
    Poly acc(f);
    for_each_chain(caps, !star, [&](const std::vector<long long>& idx) {
        Poly term = Poly::one(f);
        for (size_t j = 0; j < idx.size(); ++j) {
            term *= power_sum_S(f, idx[j], ms[j]);
            if (term.is_zero()) return;
        }
        acc += term;
    });
    return acc;
}

}  // namespace detail

Poly power_sum_S(const Fq& f, long long i, long long m) {
    if (i < 0 || m < 0) throw std::invalid_argument("power_sum_S needs i, m >= 0");
    if (i >= m + 1) return Poly(f);
    SKey key{&f, i, m};
    if (auto hit = s_cache().get(key)) return *hit;
    Poly r = detail::power_sum_S_direct(f, i, m);
    s_cache().put(key, r);
    return r;
}

Poly power_sum_S_tilde(const VPlace& place, long long i, long long m) {
    if (i < 0 || m < 0) throw std::invalid_argument("power_sum_S_tilde needs i, m >= 0");
    if (i >= m + place.degree() + 1) return Poly(place.field());
    SKey key{&place, i, m};
    if (auto hit = s_tilde_cache().get(key)) return *hit;
    Poly r = detail::power_sum_S_tilde_direct(place, i, m);
    s_tilde_cache().put(key, r);
    return r;
}

Poly zeta_truncated(const Fq& f, int d_bound, const std::vector<long long>& ms, bool star) {
    if (ms.empty()) throw std::invalid_argument("zeta_truncated needs depth >= 1");
    return detail::zeta_truncated_any(f, d_bound, ms, star);
}

void power_sum_cache_clear() {
    s_cache().clear();
    s_tilde_cache().clear();
}

void power_sum_cache_set_capacity(size_t entries) {
    s_cache().set_capacity(entries);
    s_tilde_cache().set_capacity(entries);
}

}  // namespace fqmzv
