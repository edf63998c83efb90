#include "fqmzv/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace fqmzv {

Laurent::Laurent(const Fq& f, int lead, std::vector<fq_elem> coeffs, int precision)
    : f_(&f), lead_(lead), c_(std::move(coeffs)), prec_(precision) {
    normalize();
}

void Laurent::normalize() {
    // Drop coefficients at or past the precision horizon, then leading zeros.
    if (lead_ + int(c_.size()) > prec_) c_.resize(std::max(0, prec_ - lead_));
    size_t skip = 0;
    while (skip < c_.size() && c_[skip] == 0) ++skip;
    if (skip) { c_.erase(c_.begin(), c_.begin() + skip); lead_ += int(skip); }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) lead_ = 0;
    if (!c_.empty() && prec_ <= lead_) throw std::logic_error("laurent precision does not cover its leading term");
}

const Fq& Laurent::field() const {
    if (!f_) throw std::logic_error("laurent series has no field attached");
    return *f_;
}

fq_elem Laurent::coeff(int j) const {
    if (j >= prec_) throw std::out_of_range("laurent coefficient beyond stored precision");
    if (j < lead_ || j >= lead_ + int(c_.size())) return 0;
    return c_[j - lead_];
}

Laurent Laurent::from_poly(const Poly& a, int precision) {
    const Fq& f = a.field();
    if (a.is_zero()) return zero(f, precision);
    const int d = a.degree();
    std::vector<fq_elem> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = a.coeff(d - i);  // theta^i -> x^{-i}
    return Laurent(f, -d, std::move(c), precision);
}

Laurent Laurent::inverse_of_poly(const Poly& a, int precision) {
    const Fq& f = a.field();
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    const int d = a.degree();
    // a = theta^d * u(x) with u a unit power series; invert u mod x^{precision - d}.
    const int n = precision - d;
    if (n <= 0) return zero(f, precision);
    std::vector<fq_elem> u(n, 0);
    for (int i = 0; i <= d && i < n; ++i) u[i] = a.coeff(d - i);
    std::vector<fq_elem> v(n, 0);
    const fq_elem u0inv = f.inv(u[0]);
    v[0] = u0inv;
    for (int k = 1; k < n; ++k) {
        fq_elem s = 0;
        for (int i = 1; i <= k; ++i) s = f.add(s, f.mul(u[i], v[k - i]));
        v[k] = f.neg(f.mul(u0inv, s));
    }
    return Laurent(f, d, std::move(v), precision);
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = f_->neg(x);
    return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    if (!a.f_) return b;
    if (!b.f_) return a;
    if (a.f_ != b.f_) throw std::invalid_argument("mixed fields in laurent arithmetic");
    const Fq& f = *a.f_;
    const int prec = std::min(a.prec_, b.prec_);
    if (a.is_zero() && b.is_zero()) return Laurent::zero(f, prec);
    const int lead = std::min(a.is_zero() ? b.lead_ : a.lead_, b.is_zero() ? a.lead_ : b.lead_);
    std::vector<fq_elem> c(std::max(0, prec - lead), 0);
    for (int j = lead; j < prec; ++j) {
        fq_elem x = 0;
        if (j < a.prec_) x = f.add(x, (j >= a.lead_ && j < a.lead_ + int(a.c_.size())) ? a.c_[j - a.lead_] : fq_elem(0));
        if (j < b.prec_) x = f.add(x, (j >= b.lead_ && j < b.lead_ + int(b.c_.size())) ? b.c_[j - b.lead_] : fq_elem(0));
        c[j - lead] = x;
    }
    return Laurent(f, lead, std::move(c), prec);
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (!a.f_ || !b.f_) throw std::logic_error("laurent series has no field attached");
    if (a.f_ != b.f_) throw std::invalid_argument("mixed fields in laurent arithmetic");
    const Fq& f = *a.f_;
    // ord of the product is the sum of ords; precision is the minimum of the
    // propagated precisions prec(a)+ord(b) and prec(b)+ord(a).
    const int prec = std::min(a.prec_ + b.ord(), b.prec_ + a.ord());
    if (a.is_zero() || b.is_zero()) return Laurent::zero(f, prec);
    const int lead = a.lead_ + b.lead_;
    std::vector<fq_elem> c(std::max(0, prec - lead), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size() && int(i + j) < int(c.size()); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Laurent(f, lead, std::move(c), prec);
}

Laurent Laurent::scaled(fq_elem s) const {
    if (s == 0) return zero(field(), prec_);
    Laurent r = *this;
    for (auto& x : r.c_) x = f_->mul(x, s);
    r.normalize();
    return r;
}

Laurent Laurent::pow(unsigned e) const {
    Laurent r = one(field(), prec_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Laurent Laurent::truncated(int precision) const {
    if (precision > prec_) throw std::invalid_argument("cannot raise laurent precision");
    Laurent r = *this;
    r.prec_ = precision;
    r.normalize();
    return r;
}

std::string Laurent::to_string() const {
    if (is_zero()) return "O(x^" + std::to_string(prec_) + ")";
    std::string s;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!s.empty()) s += "+";
        int j = lead_ + int(k);
        if (j == 0 || c_[k] != 1) s += std::to_string(int(c_[k]));
        if (j != 0) {
            if (c_[k] != 1) s += "*";
            s += "x^" + std::to_string(j);
        }
    }
    return s + "+O(x^" + std::to_string(prec_) + ")";
}

bool equal_through(const Laurent& a, const Laurent& b, int through) {
    if (through > a.precision() || through > b.precision())
        throw std::invalid_argument("comparison beyond stored precision");
    int lo = std::min(a.ord(), b.ord());
    for (int j = lo; j < through; ++j)
        if (a.coeff(j) != b.coeff(j)) return false;
    return true;
}

}  // namespace fqmzv
