#include "fqmzv/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace fqmzv {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Polynomials over F_p as digit vectors, used only to build the tables.
using pvec = std::vector<fq_elem>;

pvec trim(pvec a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

pvec mod_pp(pvec a, const pvec& m, int p) {
    a = trim(std::move(a));
    const int dm = int(m.size()) - 1;
    while (int(a.size()) - 1 >= dm) {
        int shift = int(a.size()) - 1 - dm;
        int lead = a.back() % p;
        for (int i = 0; i <= dm; ++i) {
            int x = a[shift + i] - lead * m[i] % p;
            a[shift + i] = fq_elem(((x % p) + p) % p);
        }
        a = trim(std::move(a));
    }
    return a;
}

pvec mul_pp(const pvec& a, const pvec& b, int p) {
    if (a.empty() || b.empty()) return {};
    pvec c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = fq_elem((c[i + j] + a[i] * b[j]) % p);
    return trim(std::move(c));
}

bool irreducible_over_fp(const pvec& m, int p) {
    const int deg = int(m.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            pvec cand(d + 1, 0);
            long long t = idx;
            for (int i = 0; i < d; ++i) { cand[i] = fq_elem(t % p); t /= p; }
            cand[d] = 1;
            if (mod_pp(m, cand, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> default_modulus(int p, int ext) {
    if (p == 2 && ext == 2) return {1, 1, 1};        // x^2+x+1
    if (p == 2 && ext == 3) return {1, 1, 0, 1};     // x^3+x+1
    if (p == 3 && ext == 2) return {1, 0, 1};        // x^2+1
    return {};
}

}  // namespace

Fq::Fq(int p, int ext, std::vector<fq_elem> modulus)
    : p_(p), ext_(ext), modulus_(std::move(modulus)) {
    long long q = 1;
    for (int i = 0; i < ext; ++i) q *= p;
    if (q > 512) throw std::invalid_argument("field too large for table-based arithmetic (q > 512)");
    q_ = int(q);

    add_.assign(size_t(q_) * q_, 0);
    mul_.assign(size_t(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    auto digits = [&](fq_elem a) {
        pvec d;
        for (int i = 0; i < ext_; ++i) { d.push_back(fq_elem(a % p_)); a = fq_elem(a / p_); }
        return trim(std::move(d));
    };
    auto index = [&](const pvec& d) {
        long long ix = 0, w = 1;
        for (size_t i = 0; i < d.size(); ++i) { ix += d[i] * w; w *= p_; }
        return fq_elem(ix);
    };

    for (int a = 0; a < q_; ++a) {
        pvec da = digits(fq_elem(a));
        pvec na(da.size());
        for (size_t i = 0; i < da.size(); ++i) na[i] = fq_elem((p_ - da[i]) % p_);
        neg_[a] = index(trim(std::move(na)));
        for (int b = 0; b < q_; ++b) {
            pvec db = digits(fq_elem(b));
            pvec s(std::max(da.size(), db.size()), 0);
            for (size_t i = 0; i < s.size(); ++i) {
                int x = (i < da.size() ? da[i] : 0) + (i < db.size() ? db[i] : 0);
                s[i] = fq_elem(x % p_);
            }
            add_[size_t(a) * q_ + b] = index(trim(std::move(s)));
            mul_[size_t(a) * q_ + b] = index(mod_pp(mul_pp(da, db, p_), modulus_, p_));
        }
    }
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b)
            if (mul_[size_t(a) * q_ + b] == 1) { inv_[a] = fq_elem(b); break; }
        if (inv_[a] == 0) throw std::logic_error("field table construction failed: no inverse");
    }
}

fq_elem Fq::inv(fq_elem a) const {
    if (a == 0) throw std::domain_error("division by zero in F_q");
    return inv_[a];
}

fq_elem Fq::pow(fq_elem a, long long e) const {
    if (e < 0) { a = inv(a); e = -e; }
    fq_elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

fq_elem Fq::from_int(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    return fq_elem(r);
}

std::vector<int> Fq::coords(fq_elem a) const {
    std::vector<int> c(ext_);
    for (int i = 0; i < ext_; ++i) { c[i] = a % p_; a = fq_elem(a / p_); }
    return c;
}

fq_elem Fq::from_coords(const std::vector<int>& c) const {
    if (int(c.size()) != ext_) throw std::invalid_argument("coordinate vector has wrong length");
    long long ix = 0, w = 1;
    for (int i = 0; i < ext_; ++i) {
        if (c[i] < 0 || c[i] >= p_) throw std::invalid_argument("coordinate out of range [0,p)");
        ix += c[i] * w;
        w *= p_;
    }
    return fq_elem(ix);
}

std::string Fq::to_string(fq_elem a) const { return std::to_string(int(a)); }

const Fq& Fq::get(int p, int ext_degree, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (ext_degree < 1) throw std::invalid_argument("ext_degree must be positive");

    std::vector<int> mod = modulus;
    if (mod.empty()) {
        if (ext_degree == 1) {
            mod = {0, 1};  // identity modulus: the polynomial X
        } else {
            mod = default_modulus(p, ext_degree);
            if (mod.empty())
                throw std::invalid_argument("no built-in modulus for this (p, ext_degree); pass one explicitly");
        }
    }
    if (int(mod.size()) != ext_degree + 1)
        throw std::invalid_argument("modulus must have degree ext_degree");
    pvec m(mod.size());
    for (size_t i = 0; i < mod.size(); ++i) {
        if (mod[i] < 0 || mod[i] >= p) throw std::invalid_argument("modulus coefficient out of range [0,p)");
        m[i] = fq_elem(mod[i]);
    }
    if (m.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (ext_degree > 1 && !irreducible_over_fp(m, p))
        throw std::invalid_argument("modulus is not irreducible over F_p");

    static std::mutex mu;
    static std::map<std::tuple<int, int, std::vector<fq_elem>>, const Fq*> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, ext_degree, m);
    auto it = registry.find(key);
    if (it != registry.end()) return *it->second;
    const Fq* f = new Fq(p, ext_degree, m);  // interned for process lifetime
    registry.emplace(std::move(key), f);
    return *f;
}

const Fq& Fq::get_q(int q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        int ext = 0;
        long long t = q;
        while (t % p == 0) { t /= p; ++ext; }
        if (t == 1) return get(p, ext);
    }
    throw std::invalid_argument("q is not a prime power");
}

}  // namespace fqmzv
