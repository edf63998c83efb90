#include "fqmzv/poly.hpp"

#include <stdexcept>

namespace fqmzv {

const Fq& Poly::field() const {
    if (!f_) throw std::logic_error("polynomial has no field attached");
    return *f_;
}

Poly Poly::constant(const Fq& f, fq_elem a) {
    Poly r(f);
    if (a != 0) r.c_ = {a};
    return r;
}

Poly Poly::from_indices(const Fq& f, const std::vector<long long>& idx) {
    std::vector<fq_elem> c(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= f.q()) throw std::invalid_argument("coefficient index out of range [0,q)");
        c[i] = fq_elem(idx[i]);
    }
    return Poly(f, std::move(c));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = f_->neg(x);
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) { *this = rhs; return *this; }
    if (f_ != rhs.f_) throw std::invalid_argument("mixed fields in polynomial arithmetic");
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), 0);
    for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = f_->add(c_[i], rhs.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) { *this = -rhs; return *this; }
    if (f_ != rhs.f_) throw std::invalid_argument("mixed fields in polynomial arithmetic");
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), 0);
    for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = f_->sub(c_[i], rhs.c_[i]);
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    if (a.f_ != b.f_) throw std::invalid_argument("mixed fields in polynomial arithmetic");
    const Fq& f = *a.f_;
    Poly r(f);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::scaled(fq_elem s) const {
    if (s == 0 || is_zero()) return Poly(*f_);
    Poly r = *this;
    for (auto& x : r.c_) x = f_->mul(x, s);
    r.trim();
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r(*f_);
    r.c_.assign(c_.size() + k, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

Poly Poly::square() const {
    if (is_zero()) return *this;
    // In characteristic 2 squaring is the Frobenius: coefficients square
    // and spread to even positions.
    if (f_->p() == 2) {
        Poly r(*f_);
        r.c_.assign(2 * c_.size() - 1, 0);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[2 * i] = f_->mul(c_[i], c_[i]);
        r.trim();
        return r;
    }
    return *this * *this;
}

Poly Poly::pow(unsigned long long e) const {
    Poly r = Poly::one(field());
    Poly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base.square();
    }
    return r;
}

fq_elem Poly::eval(fq_elem x) const {
    const Fq& f = field();
    fq_elem r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = f.add(f.mul(r, x), c_[i]);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Fq& f = b.field();
    if (a.is_zero()) return {Poly(f), Poly(f)};
    if (a.f_ != b.f_) throw std::invalid_argument("mixed fields in polynomial arithmetic");
    Poly rem = a;
    Poly quot(f);
    const int db = b.degree();
    if (a.degree() >= db) quot.c_.assign(a.degree() - db + 1, 0);
    const fq_elem lb_inv = f.inv(b.lc());
    while (rem.degree() >= db) {
        int shift = rem.degree() - db;
        fq_elem c = f.mul(rem.lc(), lb_inv);
        quot.c_[shift] = c;
        for (int i = 0; i <= db; ++i)
            rem.c_[shift + i] = f.sub(rem.c_[shift + i], f.mul(c, b.c_[i]));
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        fq_elem c = c_[i];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(int(c));
        } else {
            if (c != 1) s += std::to_string(int(c)) + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

size_t Poly::hash() const {
    size_t h = std::hash<const void*>()(f_);
    for (fq_elem c : c_) h = h * 1099511628211ULL + c + 0x9e3779b9;
    return h;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && !a.is_monic()) a = a.scaled(a.field().inv(a.lc()));
    return a;
}

Poly ext_gcd(const Poly& a, const Poly& b, Poly& x, Poly& y) {
    const Fq& f = a.has_field() ? a.field() : b.field();
    Poly r0 = a, r1 = b;
    Poly x0 = Poly::one(f), x1 = Poly::zero(f);
    Poly y0 = Poly::zero(f), y1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1); r1 = std::move(r);
        Poly x2 = x0 - q * x1;
        x0 = std::move(x1); x1 = std::move(x2);
        Poly y2 = y0 - q * y1;
        y0 = std::move(y1); y1 = std::move(y2);
    }
    if (!r0.is_zero() && !r0.is_monic()) {
        fq_elem s = f.inv(r0.lc());
        r0 = r0.scaled(s); x0 = x0.scaled(s); y0 = y0.scaled(s);
    }
    x = std::move(x0);
    y = std::move(y0);
    return r0;
}

int ord_at(const Poly& a, const Poly& v) {
    if (a.is_zero()) throw std::domain_error("ord_at of the zero polynomial");
    int k = 0;
    Poly r = a;
    while (true) {
        auto [q, rem] = divmod(r, v);
        if (!rem.is_zero()) return k;
        r = std::move(q);
        ++k;
    }
}

}  // namespace fqmzv
