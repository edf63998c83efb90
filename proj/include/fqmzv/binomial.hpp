#pragma once

#include <stdexcept>

namespace fqmzv {

// C(m, a) mod p by Lucas' theorem; 0 when a > m.
inline int binomial_mod_p(long long m, long long a, int p) {
    if (m < 0 || a < 0) throw std::invalid_argument("binomial_mod_p needs nonnegative arguments");
    long long r = 1;
    while (a > 0 || m > 0) {
        long long md = m % p, ad = a % p;
        if (ad > md) return 0;
        // C(md, ad) mod p for digits < p
        long long num = 1, den = 1;
        for (long long i = 1; i <= ad; ++i) {
            num = num * ((md + 1 - i) % p) % p;
            den = den * (i % p) % p;
        }
        // den is invertible mod p (product of nonzero digits)
        long long dinv = 1;
        for (long long i = 1; i < p; ++i)
            if (den * i % p == 1) { dinv = i; break; }
        r = r * num % p * dinv % p;
        m /= p;
        a /= p;
    }
    return int(r);
}

}  // namespace fqmzv
