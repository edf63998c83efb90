#include "fqmzv/measures.hpp"

#include <algorithm>
#include <stdexcept>

#include "fqmzv/enumerate.hpp"
#include "fqmzv/lru_cache.hpp"

namespace fqmzv {

namespace {

struct SigPowKey {
    const void* place;
    int level;
    std::vector<fq_elem> sigma;
    long long k;
    bool operator==(const SigPowKey& o) const {
        return place == o.place && level == o.level && k == o.k && sigma == o.sigma;
    }
};

struct SigPowKeyHash {
    size_t operator()(const SigPowKey& k) const {
        size_t h = std::hash<const void*>()(k.place);
        h = h * 1099511628211ULL ^ std::hash<long long>()(((long long)k.level << 32) ^ k.k);
        for (fq_elem c : k.sigma) h = h * 1099511628211ULL ^ c;
        return h;
    }
};

// Cylinder volumes hit the same few sigma powers millions of times in the
// additivity and Riemann sweeps.
VAdic sigma_pow(const VAdic& sigma, long long k) {
    if (sigma.value().is_one()) return VAdic::one(sigma.place(), sigma.level());
    static LruCache<SigPowKey, VAdic, SigPowKeyHash> cache(size_t(1) << 16);
    SigPowKey key{&sigma.place(), sigma.level(), sigma.value().coeffs(), k};
    if (auto hit = cache.get(key)) return *hit;
    VAdic r = vadic_pow(sigma, k, sigma.level());
    cache.put(key, r);
    return r;
}

}  // namespace

Cylinder Cylinder::uniform(std::vector<Poly> base, int e) {
    Cylinder c;
    c.levels.assign(base.size(), e);
    c.base = std::move(base);
    return c;
}

MeasureSpec MeasureSpec::make(const VPlace& place, const std::vector<Poly>& sigmas, bool star,
                              int work_level) {
    std::vector<VAdic> s;
    s.reserve(sigmas.size());
    for (const Poly& p : sigmas) s.push_back(vadic_reduce(place, p, work_level));
    return make(place, std::move(s), star, work_level);
}

MeasureSpec MeasureSpec::make(const VPlace& place, std::vector<VAdic> sigmas, bool star,
                              int work_level) {
    if (work_level < 1) throw std::invalid_argument("work_level must be >= 1");
    for (const VAdic& s : sigmas)
        if (!s.is_unit()) throw std::domain_error("sigma not a unit");
    MeasureSpec spec;
    spec.place = &place;
    spec.sigmas = std::move(sigmas);
    spec.star = star;
    spec.work_level = work_level;
    return spec;
}

namespace {

void validate_cylinder(const MeasureSpec& spec, const Cylinder& c) {
    if (!spec.place) throw std::logic_error("measure spec has no place attached");
    if (c.base.size() != c.levels.size() || int(c.base.size()) != spec.depth())
        throw std::invalid_argument("cylinder depth does not match the measure depth");
    const int d = spec.place->degree();
    for (size_t j = 0; j < c.base.size(); ++j) {
        if (c.levels[j] < 1) throw std::invalid_argument("cylinder levels must be >= 1");
        if (c.base[j].degree() >= c.levels[j] * d)
            throw std::invalid_argument("representative not canonical (deg alpha >= e*deg v)");
    }
}

}  // namespace

VAdic mu_cylinder(const MeasureSpec& spec, const Cylinder& c) {
    validate_cylinder(spec, c);
    const VPlace& place = *spec.place;
    const int r = c.depth();
    const int E = spec.work_level;

    // Per coordinate the only strata with nonzero count mod p are deg alpha_j
    // (one element, when alpha_j is monic) and d*e_j (the element
    // alpha_j + v^{e_j}); counts above d*e_j are divisible by q.  The volume
    // is the chain sum over these supports, which also covers mixed-level
    // cylinders; at uniform level it collapses to the case analysis
    // sigma_1^{-deg a_1}..+sigma_1^{-de}.. and its star analogue.
    VAdic total = VAdic::zero(place, E);
    std::vector<long long> pick(r);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == r) {
            VAdic w = VAdic::one(place, E);
            for (int u = 0; u < r; ++u) w = w * sigma_pow(spec.sigmas[u], -pick[u]);
            total = total + w;
            return;
        }
        auto use = [&](long long s) {
            if (j > 0 && (spec.star ? s > pick[j - 1] : s >= pick[j - 1])) return;
            pick[j] = s;
            self(self, j + 1);
        };
        if (c.base[j].is_monic()) use(c.base[j].degree());
        use((long long)place.degree() * c.levels[j]);
    };
    rec(rec, 0);
    return total;
}

CheckReport additivity_check(const MeasureSpec& spec, const Cylinder& c, int coordinate) {
    validate_cylinder(spec, c);
    if (coordinate < 0 || coordinate >= c.depth())
        throw std::invalid_argument("coordinate out of range");
    const VPlace& place = *spec.place;
    VAdic parent = mu_cylinder(spec, c);
    VAdic sum = VAdic::zero(place, spec.work_level);
    Cylinder sub = c;
    sub.levels[coordinate] = c.levels[coordinate] + 1;
    for_each_poly_below(place.field(), place.degree(), [&](const Poly& g) {
        sub.base[coordinate] = c.base[coordinate] + place.v_pow(c.levels[coordinate]) * g;
        sum = sum + mu_cylinder(spec, sub);
    });
    return {parent == sum, parent, sum};
}

namespace {

bool divides_q_minus_1(int q, long long t) {
    long long m = t % (q - 1);
    return m == 0;
}

}  // namespace

VAdic riemann_integrate(const MeasureSpec& spec, const std::vector<long long>& ts, Domain domain,
                        int e) {
    if (!spec.place) throw std::logic_error("measure spec has no place attached");
    if (int(ts.size()) != spec.depth())
        throw std::invalid_argument("exponent tuple depth does not match the measure depth");
    if (e < 1) throw std::invalid_argument("level must be >= 1");
    if (domain == Domain::Full)
        for (long long t : ts)
            if (t < 0) throw std::invalid_argument("negative exponent on FULL domain");

    const VPlace& place = *spec.place;
    const Fq& f = place.field();
    const int r = int(ts.size());
    const int de = place.degree() * e;
    const int E = spec.work_level;
    const fq_elem minus_one = f.neg(f.one());

    // Per-coordinate stratum sums of x^{t_j} over the monic canonical
    // residues of each degree i < de (these are exactly the monic
    // polynomials of degree i); s_tilde_level sums n^{-t}, so it is called
    // with the negated exponent.
    std::vector<std::vector<VAdic>> P(r, std::vector<VAdic>(de));
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < de; ++i)
            P[j][i] = domain == Domain::Full
                          ? vadic_reduce(place, power_sum_S(f, i, ts[j]), E)
                          : s_tilde_level(place, i, -ts[j], E);

    // T_j: the sample-power sum over the whole coordinate domain.  Nonzero
    // residues split as (unit scalar) x (monic residue); the zero residue
    // contributes 1 exactly for t_j = 0 on the full domain.
    std::vector<VAdic> T(r, VAdic::zero(place, E));
    for (int j = 0; j < r; ++j) {
        if (divides_q_minus_1(f.q(), ts[j])) {
            VAdic s = VAdic::zero(place, E);
            for (int i = 0; i < de; ++i) s = s + P[j][i];
            T[j] = VAdic(place, E, s.value().scaled(minus_one));
        }
        if (domain == Domain::Full && ts[j] == 0) T[j] = T[j] + VAdic::one(place, E);
    }

    // sigma_j^{-i} for i <= de.
    std::vector<std::vector<VAdic>> spow(r);
    for (int j = 0; j < r; ++j) {
        VAdic inv = spec.sigmas[j].reduced_to(E).inv();
        spow[j].push_back(VAdic::one(place, E));
        for (int i = 1; i <= de; ++i) spow[j].push_back(spow[j].back() * inv);
    }

    VAdic acc = VAdic::zero(place, E);
    if (!spec.star) {
        // vol = [x_0 extends the chain] prod sigma^{-deg} + sigma_0^{-de} (tail prod),
        // summed against the sample powers coordinate by coordinate.
        std::vector<long long> caps(size_t(r - 1), de - 1);
        for_each_chain(caps, true, [&](const std::vector<long long>& idx) {
            VAdic tail = VAdic::one(place, E);
            for (int j = 1; j < r; ++j) {
                const VAdic& pj = P[j][size_t(idx[j - 1])];
                if (pj.is_zero()) return;
                tail = tail * spow[j][size_t(idx[j - 1])] * pj;
            }
            VAdic head = spow[0][de] * T[0];
            long long lo = r > 1 ? idx[0] + 1 : 0;
            for (long long i = lo; i < de; ++i) head = head + spow[0][size_t(i)] * P[0][size_t(i)];
            acc = acc + tail * head;
        });
    } else {
        // vol decomposes over the split position j0: coordinates before j0
        // range freely (factor sigma^{-de} T), the rest form a weak chain.
        VAdic prefix = VAdic::one(place, E);
        for (int j0 = 0; j0 <= r; ++j0) {
            VAdic W = VAdic::zero(place, E);
            std::vector<long long> caps(size_t(r - j0), de - 1);
            for_each_chain(caps, false, [&](const std::vector<long long>& idx) {
                VAdic term = VAdic::one(place, E);
                for (int u = 0; u < r - j0; ++u) {
                    const VAdic& pj = P[j0 + u][size_t(idx[u])];
                    if (pj.is_zero()) return;
                    term = term * spow[j0 + u][size_t(idx[u])] * pj;
                }
                W = W + term;
            });
            acc = acc + prefix * W;
            if (j0 < r) prefix = prefix * spow[j0][de] * T[j0];
        }
    }
    return acc;
}

Poly riemann_integrate_exact(const VPlace& place, const std::vector<long long>& ms, bool star,
                             int e) {
    const Fq& f = place.field();
    const int r = int(ms.size());
    if (r == 0) throw std::invalid_argument("tuple depth must be >= 1");
    for (long long m : ms)
        if (m < 0) throw std::invalid_argument("negative exponent on FULL domain");
    const int de = place.degree() * e;
    const fq_elem minus_one = f.neg(f.one());

    std::vector<std::vector<Poly>> P(r, std::vector<Poly>(de));
    std::vector<Poly> T(r, Poly(f));
    for (int j = 0; j < r; ++j) {
        Poly s(f);
        for (int i = 0; i < de; ++i) {
            P[j][i] = power_sum_S(f, i, ms[j]);
            s += P[j][i];
        }
        if (divides_q_minus_1(f.q(), ms[j])) T[j] = s.scaled(minus_one);
        if (ms[j] == 0) T[j] += Poly::one(f);
    }

    Poly acc(f);
    if (!star) {
        std::vector<long long> caps(size_t(r - 1), de - 1);
        for_each_chain(caps, true, [&](const std::vector<long long>& idx) {
            Poly tail = Poly::one(f);
            for (int j = 1; j < r; ++j) {
                tail *= P[j][size_t(idx[j - 1])];
                if (tail.is_zero()) return;
            }
            Poly head = T[0];
            long long lo = r > 1 ? idx[0] + 1 : 0;
            for (long long i = lo; i < de; ++i) head += P[0][size_t(i)];
            acc += tail * head;
        });
    } else {
        Poly prefix = Poly::one(f);
        for (int j0 = 0; j0 <= r; ++j0) {
            if (!prefix.is_zero()) {
                Poly W(f);
                std::vector<long long> caps(size_t(r - j0), de - 1);
                for_each_chain(caps, false, [&](const std::vector<long long>& idx) {
                    Poly term = Poly::one(f);
                    for (int u = 0; u < r - j0; ++u) {
                        term *= P[j0 + u][size_t(idx[u])];
                        if (term.is_zero()) return;
                    }
                    W += term;
                });
                acc += prefix * W;
            }
            if (j0 < r) prefix *= T[j0];
        }
    }
    return acc;
}

IntegralReport integral_check_inf_neg(const VPlace& place, const std::vector<long long>& ms,
                                      bool star, const std::vector<int>& e_schedule) {
    long long mmax = 0;
    for (long long m : ms) mmax = std::max(mmax, m);
    Poly ref = zeta_inf_neg(place.field(), {ms, star});
    IntegralReport rep{true, 0, "", ""};
    bool any = false;
    for (int e : e_schedule) {
        if (place.degree() * e < mmax + 2) continue;
        any = true;
        Poly got = riemann_integrate_exact(place, ms, star, e);
        rep.achieved_level = e;
        if (got != ref && rep.holds) {
            rep.holds = false;
            rep.lhs = got.to_string();
            rep.rhs = ref.to_string();
        }
    }
    if (!any) throw std::invalid_argument("schedule exhausted before target precision");
    return rep;
}

IntegralReport integral_check_v_units(const MeasureSpec& spec, const std::vector<long long>& ts,
                                      const std::vector<int>& e_schedule, int target_level) {
    const VPlace& place = *spec.place;
    IntegralReport rep{true, 0, "", ""};
    for (int e : e_schedule) {
        long long Ee = std::min<long long>(e, term_bound_v(place, (long long)place.degree() * e + 1));
        Ee = std::min<long long>(Ee, spec.work_level);
        if (Ee < 1) continue;
        // integrating x^{t} against mu^{sigma} recovers the value at
        // ((sigma_1, -t_1), ..., (sigma_r, -t_r)), i.e. arguments -t
        std::vector<long long> args(ts.size());
        for (size_t i = 0; i < ts.size(); ++i) args[i] = -ts[i];
        VAdic riem = riemann_integrate(spec, ts, Domain::Units, e).reduced_to(int(Ee));
        VAdic ref = zeta_v_point(place, spec.sigmas, {args, spec.star}, int(Ee));
        rep.achieved_level = std::max(rep.achieved_level, int(Ee));
        if (!(riem == ref) && rep.holds) {
            rep.holds = false;
            rep.lhs = riem.to_string();
            rep.rhs = ref.to_string();
        }
    }
    if (rep.achieved_level < target_level)
        throw std::invalid_argument("schedule exhausted before target precision");
    return rep;
}

}  // namespace fqmzv
