#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>

#include "fqmzv/parallel.hpp"
#include "fqmzv/power_sums.hpp"
#include "fqmzv/zeta_infty.hpp"
#include "oracles.hpp"

using namespace fqmzv;

TEST_CASE("power_sum_S examples") {
    const Fq& f2 = Fq::get_q(2);
    const Fq& f3 = Fq::get_q(3);
    CHECK(power_sum_S(f2, 0, 5) == Poly::one(f2));
    CHECK(power_sum_S(f2, 2, 1).is_zero());           // i >= m+1
    CHECK(power_sum_S(f2, 1, 1) == Poly::one(f2));    // t + (t+1)
    CHECK(power_sum_S(f3, 1, 2) == Poly::constant(f3, 2));
}

TEST_CASE("vanishing past i = m and enumeration agreement below") {
    for (int q : {2, 3, 4}) {
        const Fq& f = Fq::get_q(q);
        for (long long m = 0; m <= 5; ++m) {
            for (long long i = 0; i <= m; ++i)
                CHECK(power_sum_S(f, i, m) == oracles::power_sum(f, int(i), m));
            // literal enumeration confirms the vanishing one stratum past m
            CHECK(oracles::power_sum(f, int(m) + 1, m).is_zero());
            CHECK(power_sum_S(f, m + 1, m).is_zero());
        }
    }
}

TEST_CASE("S_i(0) is 1 at i = 0 and 0 beyond") {
    for (int q : {2, 3, 4}) {
        const Fq& f = Fq::get_q(q);
        CHECK(power_sum_S(f, 0, 0) == Poly::one(f));
        for (int i = 1; i <= 4; ++i) CHECK(power_sum_S(f, i, 0).is_zero());
    }
}

TEST_CASE("power_sum_S_tilde examples") {
    const Fq& f3 = Fq::get_q(3);
    const VPlace& pl = VPlace::get(Poly::theta(f3));
    CHECK(power_sum_S_tilde(pl, 1, 1) == Poly::from_indices(f3, {0, 2}));       // 2t
    CHECK(power_sum_S_tilde(pl, 2, 2) == Poly::from_indices(f3, {0, 0, 1}));    // t^2
    CHECK(power_sum_S_tilde(pl, 0, 7) == Poly::one(f3));
}

TEST_CASE("S_tilde relation matches enumeration") {
    for (int q : {2, 3}) {
        const Fq& f = Fq::get_q(q);
        std::vector<Poly> vs = {Poly::theta(f)};
        vs.push_back(q == 2 ? Poly::from_indices(f, {1, 1, 1}) : Poly::from_indices(f, {1, 0, 1}));
        for (const Poly& v : vs) {
            const VPlace& pl = VPlace::get(v);
            int d = pl.degree();
            for (long long m = 0; m <= 4; ++m)
                for (long long i = 0; i <= m + d + 1; ++i) {
                    CAPTURE(q); CAPTURE(d); CAPTURE(i); CAPTURE(m);
                    CHECK(power_sum_S_tilde(pl, i, m) == oracles::power_sum_coprime(pl, int(i), m));
                }
            // vanishing at and past m + d + 1
            for (long long m = 0; m <= 4; ++m)
                CHECK(power_sum_S_tilde(pl, m + d + 1, m).is_zero());
        }
    }
}

TEST_CASE("S_tilde at exponent 0 keeps the degree-d stratum") {
    // S~_d(0) = q^d - 1 = -1 in F_p; all other positive strata vanish.
    for (int q : {2, 3}) {
        const Fq& f = Fq::get_q(q);
        const VPlace& pl = VPlace::get(Poly::theta(f));
        CHECK(power_sum_S_tilde(pl, 1, 0) == Poly::constant(f, f.neg(f.one())));
        CHECK(power_sum_S_tilde(pl, 2, 0).is_zero());
    }
}

TEST_CASE("zeta_truncated examples") {
    const Fq& f3 = Fq::get_q(3);
    const Fq& f2 = Fq::get_q(2);
    CHECK(zeta_truncated(f3, 1, {1}, false) == Poly::one(f3));
    CHECK(zeta_truncated(f2, 2, {1, 1}, false) == Poly::one(f2));
    CHECK(zeta_truncated(f2, 1, {1, 1}, false).is_zero());  // no chain 1 > i1 > i2 >= 0
    CHECK(zeta_truncated(f3, 1, {1, 1}, false).is_zero());
}

TEST_CASE("zeta_truncated stabilizes to the full special value") {
    for (int q : {2, 3}) {
        const Fq& f = Fq::get_q(q);
        for (bool star : {false, true})
            for (long long m1 = 0; m1 <= 3; ++m1)
                for (long long m2 = 0; m2 <= 3; ++m2) {
                    std::vector<long long> ms{m1, m2};
                    Poly full = zeta_inf_neg(f, {ms, star});
                    long long mmax = std::max(m1, m2);
                    CHECK(zeta_truncated(f, int(mmax) + 2, ms, star) == full);
                    CHECK(zeta_truncated(f, int(mmax) + 5, ms, star) == full);
                }
    }
}

TEST_CASE("memoization transparency") {
    const Fq& f = Fq::get_q(3);
    const VPlace& pl = VPlace::get(Poly::theta(f));
    power_sum_cache_clear();
    Poly cold_s = power_sum_S(f, 3, 4);
    Poly cold_t = power_sum_S_tilde(pl, 3, 4);
    Poly warm_s = power_sum_S(f, 3, 4);
    Poly warm_t = power_sum_S_tilde(pl, 3, 4);
    CHECK(cold_s == warm_s);
    CHECK(cold_t == warm_t);
    CHECK(warm_s == detail::power_sum_S_direct(f, 3, 4));
    CHECK(warm_t == detail::power_sum_S_tilde_direct(pl, 3, 4));

    // a tiny capacity forces evictions without changing any value
    power_sum_cache_set_capacity(2);
    for (long long i = 0; i <= 4; ++i)
        for (long long m = 0; m <= 4; ++m)
            CHECK(power_sum_S(f, i, m) == detail::power_sum_S_direct(f, i, m));
    power_sum_cache_set_capacity(size_t(1) << 20);
}

TEST_CASE("memo caches under concurrent mixed access") {
    const Fq& f = Fq::get_q(4);
    const VPlace& pl = VPlace::get(Poly::theta(f));
    power_sum_cache_clear();
    // reference values computed serially first
    std::vector<Poly> want;
    for (long long i = 0; i <= 5; ++i)
        for (long long m = 0; m <= 5; ++m) want.push_back(detail::power_sum_S_direct(f, i, m));
    std::atomic<int> bad{0};
    parallel_for(200, 4, [&](size_t it) {
        long long i = (long long)(it % 6), m = (long long)((it / 6) % 6);
        if (power_sum_S(f, i, m) != want[size_t(i * 6 + m)]) ++bad;
        if (power_sum_S_tilde(pl, i, m) != detail::power_sum_S_tilde_direct(pl, i, m)) ++bad;
    });
    CHECK(bad == 0);
}

TEST_CASE("chain enumeration shapes") {
    std::vector<std::vector<long long>> strict, weak;
    for_each_chain({2, 2}, true, [&](const std::vector<long long>& c) { strict.push_back(c); });
    for_each_chain({2, 2}, false, [&](const std::vector<long long>& c) { weak.push_back(c); });
    CHECK(strict.size() == 3);  // (1,0),(2,0),(2,1)
    CHECK(weak.size() == 6);    // pairs with i1 >= i2 in [0,2]
}
