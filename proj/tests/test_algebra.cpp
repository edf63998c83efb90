#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fqmzv/binomial.hpp"
#include "fqmzv/enumerate.hpp"
#include "fqmzv/json_io.hpp"
#include "fqmzv/laurent.hpp"

using namespace fqmzv;

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(7);
    for (int q : {2, 3, 4, 5, 8, 9}) {
        const Fq& f = Fq::get_q(q);
        CAPTURE(q);
        for (int it = 0; it < 200; ++it) {
            fq_elem a = fq_elem(rng() % q), b = fq_elem(rng() % q), c = fq_elem(rng() % q);
            CHECK(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
            CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.pow(a, q) == a);  // Frobenius
            if (a != 0) CHECK(f.pow(a, q - 1) == f.one());
        }
    }
}

TEST_CASE("sum of all field elements") {
    for (int q : {2, 3, 4, 5, 8, 9}) {
        const Fq& f = Fq::get_q(q);
        fq_elem s = 0;
        for (int a = 0; a < q; ++a) s = f.add(s, fq_elem(a));
        if (q == 2) CHECK(s == f.one());
        else CHECK(s == f.zero());
    }
}

TEST_CASE("field construction validation") {
    CHECK_THROWS(Fq::get(4));                      // not prime
    CHECK_THROWS(Fq::get(2, 2, {0, 1, 1}));       // x^2+x reducible
    CHECK_THROWS(Fq::get_q(6));                   // not a prime power
    CHECK_NOTHROW(Fq::get(2, 2, {1, 1, 1}));
}

TEST_CASE("binomial_mod_p examples and Pascal oracle") {
    CHECK(binomial_mod_p(5, 0, 3) == 1);
    CHECK(binomial_mod_p(7, 1, 3) == 1);
    CHECK(binomial_mod_p(4, 2, 2) == 0);
    CHECK(binomial_mod_p(2, 5, 3) == 0);  // a > m

    for (int p : {2, 3, 5}) {
        // Pascal triangle mod p, rows 0..40
        std::vector<std::vector<int>> row{{1}};
        for (int m = 1; m <= 40; ++m) {
            std::vector<int> next(m + 1, 1);
            for (int a = 1; a < m; ++a) next[a] = (row.back()[a - 1] + row.back()[a]) % p;
            row.push_back(next);
        }
        for (int m = 0; m <= 40; ++m)
            for (int a = 0; a <= m; ++a)
                CHECK(binomial_mod_p(m, a, p) == row[m][a] % p);
    }
}

TEST_CASE("polynomial divmod round trip") {
    std::mt19937 rng(11);
    for (int q : {2, 3, 4, 9}) {
        const Fq& f = Fq::get_q(q);
        for (int it = 0; it < 100; ++it) {
            std::vector<fq_elem> ca(1 + rng() % 8), cb(1 + rng() % 5);
            for (auto& x : ca) x = fq_elem(rng() % q);
            for (auto& x : cb) x = fq_elem(rng() % q);
            Poly a(f, ca), b(f, cb);
            if (b.is_zero()) continue;
            auto [quot, rem] = divmod(a, b);
            CHECK(quot * b + rem == a);
            CHECK(rem.degree() < b.degree());
        }
    }
}

TEST_CASE("enumerate_monic counts and order") {
    const Fq& f2 = Fq::get_q(2);
    auto polys = enumerate_monic(f2, 1);
    REQUIRE(polys.size() == 2);
    CHECK(polys[0] == Poly::theta(f2));
    CHECK(polys[1] == Poly::theta(f2) + Poly::one(f2));

    const Fq& f3 = Fq::get_q(3);
    MonicFilter coprime;
    coprime.coprime_to = Poly::theta(f3);
    auto cop = enumerate_monic(f3, 1, coprime);
    REQUIRE(cop.size() == 2);
    CHECK(cop[0] == Poly::from_indices(f3, {1, 1}));
    CHECK(cop[1] == Poly::from_indices(f3, {2, 1}));

    CHECK(enumerate_monic(f3, 0).size() == 1);
    CHECK(enumerate_monic(f3, 0)[0].is_one());

    for (int q : {2, 3, 4}) {
        const Fq& f = Fq::get_q(q);
        for (int deg = 0; deg <= 3; ++deg) {
            size_t count = enumerate_monic(f, deg).size();
            size_t expect = 1;
            for (int i = 0; i < deg; ++i) expect *= q;
            CHECK(count == expect);
        }
        // coprime filter: q^deg - q^{deg-d}
        MonicFilter flt;
        flt.coprime_to = Poly::theta(f);
        CHECK(enumerate_monic(f, 3, flt).size() == size_t(q * q * q - q * q));
    }
    // a degree-2 modulus: 2^3 - 2^{3-2} over F_2
    const Fq& f2b = Fq::get_q(2);
    MonicFilter quad;
    quad.coprime_to = Poly::from_indices(f2b, {1, 1, 1});
    CHECK(enumerate_monic(f2b, 3, quad).size() == 6);
}

TEST_CASE("enumerate_monic residue filter") {
    const Fq& f = Fq::get_q(2);
    Poly v = Poly::theta(f);
    MonicFilter flt;
    flt.residue = {Poly::one(f), v * v};  // n = 1 mod t^2
    auto hits = enumerate_monic(f, 3, flt);
    for (const Poly& n : hits) CHECK(((n - Poly::one(f)) % (v * v)).is_zero());
    CHECK(hits.size() == 2);  // t^3+1, t^3+t^2+1

    // modulus with two distinct irreducible factors is rejected
    MonicFilter bad;
    bad.residue = {Poly::one(f), v * (v + Poly::one(f))};
    CHECK_THROWS(enumerate_monic(f, 3, bad));
}

TEST_CASE("is_irreducible") {
    const Fq& f = Fq::get_q(2);
    CHECK(is_irreducible(Poly::from_indices(f, {1, 1, 1})));       // t^2+t+1
    CHECK_FALSE(is_irreducible(Poly::from_indices(f, {1, 0, 1}))); // t^2+1 = (t+1)^2
    const Fq& f3 = Fq::get_q(3);
    CHECK(is_irreducible(Poly::from_indices(f3, {1, 0, 1})));      // t^2+1 over F_3
}

TEST_CASE("vadic inverse and reduce examples") {
    const Fq& f3 = Fq::get_q(3);
    const VPlace& pl = VPlace::get(Poly::theta(f3));

    VAdic one = VAdic::one(pl, 4);
    CHECK(one.inv() == one);

    VAdic x(pl, 2, Poly::from_indices(f3, {1, 1}));  // 1+t
    CHECK(x.inv() == VAdic(pl, 2, Poly::from_indices(f3, {1, 2})));  // 1+2t

    const Fq& f2 = Fq::get_q(2);
    const VPlace& pl2 = VPlace::get(Poly::theta(f2));
    VAdic nonunit(pl2, 1, Poly::theta(f2));
    CHECK(nonunit.is_zero());  // t = 0 mod t
    CHECK_THROWS_WITH_AS(vadic_inv(VAdic(pl2, 2, Poly::theta(f2))), "not a unit", std::domain_error);

    // t^3 + t mod t^2 = t
    CHECK(vadic_reduce(pl, Poly::from_indices(f3, {0, 1, 0, 1}), 2)
          == VAdic(pl, 2, Poly::theta(f3)));
    CHECK(vadic_reduce(pl, Poly(f3), 2).is_zero());
    // 1/(1-t) = 1+t mod t^2
    CHECK(vadic_reduce(pl, Poly::one(f3), Poly::from_indices(f3, {1, 2}), 2)
          == VAdic(pl, 2, Poly::from_indices(f3, {1, 1})));
    CHECK_THROWS_WITH_AS(vadic_reduce(pl, Poly::one(f3), Poly::theta(f3), 2),
                         "denominator not a v-unit", std::domain_error);
}

TEST_CASE("vadic_pow examples and period property") {
    const Fq& f3 = Fq::get_q(3);
    const VPlace& pl = VPlace::get(Poly::theta(f3));
    VAdic x(pl, 2, Poly::from_indices(f3, {1, 1}));  // t+1
    CHECK(vadic_pow(x, 7, 2) == x);                  // 7 = 1 mod (q-1)q = 6
    CHECK(vadic_pow(x, 0, 2) == VAdic::one(pl, 2));

    const Fq& f2 = Fq::get_q(2);
    const VPlace& pl4 = VPlace::get(Poly::from_indices(f2, {1, 1, 1}));
    VAdic th(pl4, 1, Poly::theta(f2));
    CHECK(vadic_pow(th, 3, 1) == VAdic::one(pl4, 1));  // unit group of F_4 has order 3
    CHECK_THROWS_WITH_AS(vadic_pow(VAdic(pl4, 1, pl4.v()), 2, 1), "not a unit", std::domain_error);

    std::mt19937_64 rng(23);
    for (const VPlace* pp : {&pl, &pl4}) {
        const VPlace& place = *pp;
        int E = 2;
        bool fits = false;
        long long order = place.unit_group_order(E, fits);
        REQUIRE(fits);
        int tried = 0;
        while (tried < 30) {
            Poly val = Poly::from_indices(place.field(),
                                          {(long long)(rng() % place.field().q()),
                                           (long long)(rng() % place.field().q()),
                                           (long long)(rng() % place.field().q())});
            VAdic x2(place, E, val);
            if (!x2.is_unit()) continue;
            ++tried;
            long long t = (long long)(rng() % 4000) - 2000;
            CHECK(vadic_pow(x2, t, E) == vadic_pow(x2, t + order, E));
        }
    }
}

TEST_CASE("vadic mixed levels truncate to the smaller one") {
    const Fq& f = Fq::get_q(3);
    const VPlace& pl = VPlace::get(Poly::theta(f));
    VAdic a(pl, 3, Poly::from_indices(f, {1, 1, 1}));
    VAdic b(pl, 2, Poly::from_indices(f, {2, 0}));
    VAdic c = a + b;
    CHECK(c.level() == 2);
    CHECK(c == VAdic(pl, 2, Poly::from_indices(f, {0, 1})));
    // equality at the common level
    CHECK(a == VAdic(pl, 2, Poly::from_indices(f, {1, 1})));
}

TEST_CASE("laurent ord and precision propagation") {
    const Fq& f = Fq::get_q(3);
    std::mt19937 rng(5);
    for (int it = 0; it < 50; ++it) {
        int la = int(rng() % 5) - 2, lb = int(rng() % 5) - 2;
        std::vector<fq_elem> ca(3), cb(4);
        for (auto& x : ca) x = fq_elem(rng() % 3);
        for (auto& x : cb) x = fq_elem(rng() % 3);
        Laurent a(f, la, ca, la + 6), b(f, lb, cb, lb + 5);
        Laurent prod = a * b;
        if (!a.is_zero() && !b.is_zero()) {
            CHECK(prod.precision() == std::min(a.precision() + b.ord(), b.precision() + a.ord()));
            if (!prod.is_zero()) CHECK(prod.ord() == a.ord() + b.ord());
        }
        Laurent sum = a + b;
        CHECK(sum.precision() == std::min(a.precision(), b.precision()));
    }
}

TEST_CASE("laurent polynomial inverse") {
    const Fq& f = Fq::get_q(2);
    Poly n = Poly::theta(f) + Poly::one(f);
    Laurent inv = Laurent::inverse_of_poly(n, 5);
    // (t+1)^{-1} = x + x^2 + x^3 + ... with x = 1/t
    for (int j = 1; j < 5; ++j) CHECK(inv.coeff(j) == 1);
    Laurent prod = inv * Laurent::from_poly(n, 5);
    CHECK(equal_through(prod, Laurent::one(f, 4), 4));
}

TEST_CASE("json round trips") {
    const Fq& f4 = Fq::get_q(4);
    Poly a = Poly::from_indices(f4, {2, 1, 3});
    CHECK(poly_from_json(f4, poly_to_json(a)) == a);
    CHECK(poly_to_json(Poly::one(Fq::get_q(2))).dump() == "[[1]]");

    const Fq& f = field_from_json(field_to_json(f4));
    CHECK(&f == &f4);

    const VPlace& pl = VPlace::get(Poly::theta(Fq::get_q(3)));
    VAdic x(pl, 2, Poly::from_indices(Fq::get_q(3), {1, 2}));
    CHECK(vadic_from_json(Fq::get_q(3), vadic_to_json(x)) == x);
}
