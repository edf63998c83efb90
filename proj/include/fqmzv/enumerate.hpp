#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fqmzv/poly.hpp"

namespace fqmzv {

// Visits the q^deg monic polynomials of degree `deg` in lexicographic order
// by coefficients, lowest coefficient varying fastest.  The same Poly buffer
// is reused between calls.
template <class Fn>
void for_each_monic(const Fq& f, int deg, Fn&& fn) {
    if (deg < 0) return;
    std::vector<fq_elem> c(deg + 1, 0);
    c[deg] = 1;
    const int q = f.q();
    while (true) {
        fn(Poly(f, c));
        int i = 0;
        while (i < deg && c[i] == q - 1) c[i++] = 0;
        if (i >= deg) break;
        ++c[i];
    }
}

// Visits all q^k polynomials of degree < k (including zero), lowest
// coefficient varying fastest.
template <class Fn>
void for_each_poly_below(const Fq& f, int k, Fn&& fn) {
    if (k <= 0) { fn(Poly(f)); return; }
    std::vector<fq_elem> c(k, 0);
    const int q = f.q();
    while (true) {
        fn(Poly(f, c));
        int i = 0;
        while (i < k && c[i] == q - 1) c[i++] = 0;
        if (i >= k) break;
        ++c[i];
    }
}

struct MonicFilter {
    std::optional<Poly> coprime_to;
    // Keep n with n ≡ residue mod modulus; modulus must be a unit times a
    // power of an irreducible polynomial.
    std::optional<std::pair<Poly, Poly>> residue;
};

bool is_irreducible(const Poly& a);

std::vector<Poly> enumerate_monic(const Fq& f, int deg, const MonicFilter& filter = {});

}  // namespace fqmzv
