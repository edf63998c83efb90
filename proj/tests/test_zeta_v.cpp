#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fqmzv/zeta_v.hpp"
#include "oracles.hpp"

using namespace fqmzv;

namespace {
const Fq& f2() { return Fq::get_q(2); }
const Fq& f3() { return Fq::get_q(3); }
const VPlace& theta3() { return VPlace::get(Poly::theta(f3())); }
const VPlace& theta2() { return VPlace::get(Poly::theta(f2())); }
const VPlace& quad2() { return VPlace::get(Poly::from_indices(f2(), {1, 1, 1})); }
const VPlace& quad3() { return VPlace::get(Poly::from_indices(f3(), {1, 0, 1})); }
}  // namespace

TEST_CASE("zeta_v_neg examples") {
    CHECK(zeta_v_neg(theta3(), {{1}, false}) == Poly::from_indices(f3(), {1, 2}));        // 1+2t
    CHECK(zeta_v_neg(theta3(), {{2, 1}, false}) == Poly::from_indices(f3(), {2, 0, 0, 2}));  // 2t^3+2
    // the depth-1 value at exponent 0 is 0: S~_0(0) = 1 and S~_d(0) = -1
    CHECK(zeta_v_neg(theta3(), {{0}, false}).is_zero());
    CHECK(zeta_v_neg(quad2(), {{0}, false}).is_zero());
}

TEST_CASE("v not irreducible is rejected at place construction") {
    CHECK_THROWS_WITH(VPlace::get(Poly::from_indices(f2(), {1, 0, 1})), "v not irreducible");
    CHECK_THROWS(VPlace::get(Poly::from_indices(f3(), {0, 2})));  // not monic
}

TEST_CASE("depth-1 interpolation against zeta_inf") {
    for (const VPlace* pl : {&theta2(), &quad2(), &theta3(), &quad3()}) {
        const Fq& f = pl->field();
        for (long long m = 0; m <= 8; ++m) {
            Poly lhs = zeta_v_neg(*pl, {{m}, false});
            Poly rhs = (Poly::one(f) - pl->v_pow(int(m))) * zeta_inf_neg(f, {{m}, false});
            CAPTURE(pl->degree()); CAPTURE(m);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("term_bound_v examples") {
    CHECK(term_bound_v(quad3(), 1) == 0);
    CHECK(term_bound_v(quad3(), 3) == 0);   // i < d+2
    CHECK(term_bound_v(quad3(), 5) == 4);   // 2*((5-2-1)+(5-4-1))
    CHECK(term_bound_v(theta2(), 6) == 10); // 4+3+2+1+0
    for (long long i = 0; i + 1 <= 30; ++i)
        CHECK(term_bound_v(theta3(), i) <= term_bound_v(theta3(), i + 1));  // nondecreasing
}

TEST_CASE("bound soundness on exact S_tilde values") {
    for (const VPlace* pl : {&theta3(), &quad2()}) {
        for (long long m = 0; m <= 5; ++m)
            for (long long i = 0; i <= m + 2 * pl->degree() + 4; ++i) {
                Poly s = power_sum_S_tilde(*pl, i, m);
                if (s.is_zero()) continue;
                CHECK(ord_at(s, pl->v()) >= term_bound_v(*pl, i));
            }
    }
}

TEST_CASE("zeta_v_eval embeds the exact values") {
    // argument -1 at q=3, v=t: the exact value 1+2t survives mod t^3
    VAdic z = zeta_v_eval(theta3(), {{-1}, false}, 3);
    CHECK(z == vadic_reduce(theta3(), Poly::from_indices(f3(), {1, 2}), 3));
    // argument 0 gives 0 (S~_0(0) + S~_d(0) = 1 - 1)
    for (const VPlace* pl : {&theta3(), &quad2()})
        for (int E : {1, 2, 3}) CHECK(zeta_v_eval(*pl, {{0}, false}, E).is_zero());

    for (const VPlace* pl : {&theta3(), &quad2()})
        for (bool star : {false, true})
            for (long long m1 = 0; m1 <= 3; ++m1)
                for (long long m2 = 0; m2 <= 3; ++m2) {
                    Poly exact = zeta_v_neg(*pl, {{m1, m2}, star});
                    VAdic approx = zeta_v_eval(*pl, {{-m1, -m2}, star}, 2);
                    CHECK(approx == vadic_reduce(*pl, exact, 2));
                }
}

TEST_CASE("zeta_v_eval level monotonicity") {
    for (const VPlace* pl : {&theta3(), &quad2()}) {
        for (long long t : {1LL, 2LL, -3LL, 5LL}) {
            VAdic hi = zeta_v_eval(*pl, {{t}, false}, 3);
            VAdic lo = zeta_v_eval(*pl, {{t}, false}, 1);
            CHECK(hi.reduced_to(1) == lo);
            VAdic mid = zeta_v_eval(*pl, {{t, -t}, true}, 2);
            CHECK(zeta_v_eval(*pl, {{t, -t}, true}, 3).reduced_to(2) == mid);
        }
    }
}

TEST_CASE("zeta_v_eval precision-unreachable guard") {
    CHECK_THROWS(zeta_v_eval(theta3(), {{1}, false}, 3, /*i_max=*/2));
}

TEST_CASE("recursion formula matches the defining sum") {
    CHECK(zeta_v_via_recursion(theta3(), {{1}, false}) == Poly::from_indices(f3(), {1, 2}));
    CHECK(zeta_v_via_recursion(theta3(), {{2, 1}, false}) == Poly::from_indices(f3(), {2, 0, 0, 2}));
    CHECK(zeta_v_via_recursion(theta3(), {{0}, false}).is_zero());

    for (const VPlace* pl : {&theta3(), &quad3(), &theta2(), &quad2()})
        for (bool star : {false, true})
            for (long long m1 = 0; m1 <= 4; ++m1)
                for (long long m2 = 0; m2 <= 4; ++m2) {
                    ExponentTuple t{{m1, m2}, star};
                    CAPTURE(pl->degree()); CAPTURE(star); CAPTURE(m1); CAPTURE(m2);
                    CHECK(zeta_v_via_recursion(*pl, t) == zeta_v_neg(*pl, t));
                }
}

TEST_CASE("infty_from_v reconstructs zeta_inf") {
    CHECK(infty_from_v(theta3(), {{1}, false}) == Poly::one(f3()));
    CHECK(infty_from_v(theta3(), {{2, 1}, false}) == Poly::constant(f3(), 2));
    CHECK(infty_from_v(theta3(), {{0}, false}) == Poly::one(f3()));

    for (const VPlace* pl : {&theta3(), &quad2()})
        for (bool star : {false, true})
            for (long long m1 = 0; m1 <= 4; ++m1)
                for (long long m2 = 0; m2 <= 4; ++m2) {
                    ExponentTuple t{{m1, m2}, star};
                    CAPTURE(pl->degree()); CAPTURE(star); CAPTURE(m1); CAPTURE(m2);
                    CHECK(infty_from_v(*pl, t) == zeta_inf_neg(pl->field(), t));
                }
}

TEST_CASE("kummer congruence examples") {
    // depth 1: m = -1 vs -1-(q^d-1) at e = 1
    for (const VPlace* pl : {&theta2(), &quad2(), &theta3()}) {
        bool fits = false;
        long long order = pl->unit_group_order(1, fits);
        REQUIRE(fits);
        auto rep = kummer_check(*pl, {-1}, {-1 - order}, 1);
        CHECK(rep.holds);
    }
    // depth 2 at q=2, v = t^2+t+1: 3 | (4 - 1)
    auto rep = kummer_check(quad2(), {-1, -1}, {-4, -4}, 1);
    CHECK(rep.holds);
    // hypothesis violation is an input error
    CHECK_THROWS(kummer_check(quad2(), {1}, {2}, 1));
}

TEST_CASE("kummer congruence, intro normalization") {
    // m = l mod (q^d-1)q^{e d} implies congruence mod m_v^{e+1}
    for (const VPlace* pl : {&theta2(), &theta3()}) {
        bool fits = false;
        long long big = pl->unit_group_order(2, fits);  // (q^d-1) q^{d}
        REQUIRE(fits);
        auto rep = kummer_check(*pl, {3}, {3 + 2 * big}, 2);
        CHECK(rep.holds);
    }
}
