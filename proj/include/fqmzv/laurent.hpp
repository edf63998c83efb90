#pragma once

#include <string>
#include <vector>

#include "fqmzv/poly.hpp"

namespace fqmzv {

// Truncated element of k_inf = F_q((1/theta)).  Writing x = 1/theta, the
// series is sum_{j >= lead} c_j x^j with coefficients stored exactly for
// j < precision.  Zero keeps an empty coefficient list ("zero through the
// stated precision").
class Laurent {
  public:
    Laurent() = default;
    static Laurent zero(const Fq& f, int precision) { return Laurent(f, 0, {}, precision); }
    static Laurent one(const Fq& f, int precision) { return Laurent(f, 0, {f.one()}, precision); }
    Laurent(const Fq& f, int lead, std::vector<fq_elem> coeffs, int precision);

    // a(theta) as a Laurent series in x, truncated to the stated precision.
    static Laurent from_poly(const Poly& a, int precision);
    // 1/a(theta) to the stated precision; a must be nonzero.
    static Laurent inverse_of_poly(const Poly& a, int precision);

    const Fq& field() const;
    int precision() const { return prec_; }
    // Order of the first nonzero stored coefficient; equals precision() when
    // the series is zero through its precision.
    int ord() const { return c_.empty() ? prec_ : lead_; }
    bool is_zero() const { return c_.empty(); }
    fq_elem coeff(int j) const;

    Laurent operator-() const;
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent scaled(fq_elem s) const;
    Laurent pow(unsigned e) const;
    Laurent truncated(int precision) const;

    std::string to_string() const;

  private:
    void normalize();
    const Fq* f_ = nullptr;
    int lead_ = 0;
    std::vector<fq_elem> c_;
    int prec_ = 0;
};

// Coefficient-wise equality for all exponents j < through, which must not
// exceed either precision.
bool equal_through(const Laurent& a, const Laurent& b, int through);

}  // namespace fqmzv
