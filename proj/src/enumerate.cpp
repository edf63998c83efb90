#include "fqmzv/enumerate.hpp"

#include <stdexcept>

namespace fqmzv {

bool is_irreducible(const Poly& a) {
    const int n = a.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const Fq& f = a.field();
    for (int d = 1; 2 * d <= n; ++d) {
        bool found = false;
        for_each_monic(f, d, [&](const Poly& cand) {
            if (!found && (a % cand).is_zero()) found = true;
        });
        if (found) return false;
    }
    return true;
}

namespace {

// The smallest-degree monic divisor of a nonconstant polynomial is irreducible.
Poly smallest_irreducible_factor(const Poly& a) {
    const Fq& f = a.field();
    for (int d = 1; d <= a.degree(); ++d) {
        Poly hit;
        for_each_monic(f, d, [&](const Poly& cand) {
            if (!hit.has_field() && (a % cand).is_zero()) hit = cand;
        });
        if (hit.has_field()) return hit;
    }
    throw std::logic_error("no factor found");  // unreachable for deg >= 1
}

}  // namespace

std::vector<Poly> enumerate_monic(const Fq& f, int deg, const MonicFilter& filter) {
    if (deg < 0) throw std::invalid_argument("degree must be nonnegative");

    Poly res, mod;
    if (filter.residue) {
        res = filter.residue->first;
        mod = filter.residue->second;
        if (mod.degree() < 1)
            throw std::invalid_argument("residue filter modulus must be nonconstant");
        Poly v = smallest_irreducible_factor(mod);
        Poly m = mod.scaled(f.inv(mod.lc()));
        while (m.degree() > 0) {
            auto [q, r] = divmod(m, v);
            if (!r.is_zero())
                throw std::invalid_argument("residue filter modulus is not a power of an irreducible polynomial");
            m = std::move(q);
        }
        res = res % mod;
    }

    std::vector<Poly> out;
    for_each_monic(f, deg, [&](const Poly& n) {
        if (filter.coprime_to && !gcd(n, *filter.coprime_to).is_one()) return;
        if (filter.residue && !((n - res) % mod).is_zero()) return;
        out.push_back(n);
    });
    return out;
}

}  // namespace fqmzv
