#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fqmzv/field.hpp"

namespace fqmzv {

// Element of A = F_q[theta].  Coefficients are stored lowest degree first
// with no trailing zeros; the zero polynomial has an empty coefficient list.
class Poly {
  public:
    Poly() = default;  // zero with no field attached; usable only as a placeholder
    explicit Poly(const Fq& f) : f_(&f) {}
    Poly(const Fq& f, std::vector<fq_elem> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const Fq& f) { return Poly(f); }
    static Poly one(const Fq& f) { return constant(f, f.one()); }
    static Poly constant(const Fq& f, fq_elem a);
    static Poly theta(const Fq& f) { return Poly(f, {0, 1}); }
    // Coefficients given as element indices in [0, q), lowest first.
    static Poly from_indices(const Fq& f, const std::vector<long long>& idx);

    const Fq& field() const;
    bool has_field() const { return f_ != nullptr; }

    int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    fq_elem lc() const { return c_.empty() ? fq_elem(0) : c_.back(); }
    fq_elem coeff(int i) const { return (i >= 0 && i < int(c_.size())) ? c_[i] : fq_elem(0); }
    const std::vector<fq_elem>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs) { *this = *this * rhs; return *this; }
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(fq_elem s) const;
    Poly shifted(int k) const;  // times theta^k, k >= 0
    Poly square() const;
    Poly pow(unsigned long long e) const;
    fq_elem eval(fq_elem x) const;

    // Quotient and remainder; rhs must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    bool operator==(const Poly& rhs) const { return f_ == rhs.f_ && c_ == rhs.c_; }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    std::string to_string(const std::string& var = "t") const;
    size_t hash() const;

  private:
    void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
    const Fq* f_ = nullptr;
    std::vector<fq_elem> c_;
};

Poly gcd(Poly a, Poly b);
// g = gcd(a, b) together with x, y such that x*a + y*b = g.
Poly ext_gcd(const Poly& a, const Poly& b, Poly& x, Poly& y);
// Largest k with v^k | a (a nonzero); throws for a == 0.
int ord_at(const Poly& a, const Poly& v);

}  // namespace fqmzv
