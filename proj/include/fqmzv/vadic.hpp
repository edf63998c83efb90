#pragma once

#include <string>

#include "fqmzv/poly.hpp"

namespace fqmzv {

// A finite place of k = F_q(theta): a monic irreducible v together with its
// degree d.  Places are interned; raw `const VPlace*` handles stay valid for
// the whole process and serve as cache keys.
class VPlace {
  public:
    // Verifies monicity and irreducibility.
    static const VPlace& get(const Poly& v);

    const Fq& field() const { return *f_; }
    const Poly& v() const { return v_; }
    int degree() const { return d_; }

    // v^e, cached.
    const Poly& v_pow(int e) const;
    // #(A_v / m_v^level)^x = (q^d - 1) q^{(level-1) d}; fits=false on int64 overflow.
    long long unit_group_order(int level, bool& fits) const;

    VPlace(const VPlace&) = delete;
    VPlace& operator=(const VPlace&) = delete;

  private:
    VPlace(const Fq& f, Poly v);
    const Fq* f_;
    Poly v_;
    int d_;
    mutable std::vector<Poly> pows_;  // pows_[e] = v^e
    mutable void* mu_;                // std::mutex, kept opaque to the header
};

// Element of A_v / m_v^level, represented by its canonical polynomial
// residue of degree < level * deg v.  Mixed-level arithmetic truncates to
// the smaller level; equality compares at the common level.
class VAdic {
  public:
    VAdic() = default;
    VAdic(const VPlace& place, int level, const Poly& value);

    static VAdic zero(const VPlace& place, int level) { return VAdic(place, level, Poly(place.field())); }
    static VAdic one(const VPlace& place, int level) { return VAdic(place, level, Poly::one(place.field())); }

    const VPlace& place() const;
    int level() const { return level_; }
    const Poly& value() const { return value_; }

    bool is_zero() const { return value_.is_zero(); }
    bool is_unit() const;
    // Exact v-valuation of the residue, capped at level for zero.
    int ord() const;

    VAdic reduced_to(int level) const;
    VAdic operator-() const;
    friend VAdic operator+(const VAdic& a, const VAdic& b);
    friend VAdic operator-(const VAdic& a, const VAdic& b);
    friend VAdic operator*(const VAdic& a, const VAdic& b);
    bool operator==(const VAdic& rhs) const;
    bool operator!=(const VAdic& rhs) const { return !(*this == rhs); }

    // x^t for t >= 0 (any x) by binary powering; t < 0 requires a unit.
    VAdic pow(long long t) const;
    VAdic inv() const;

    std::string to_string() const { return value_.to_string(); }

  private:
    const VPlace* pl_ = nullptr;
    int level_ = 0;
    Poly value_;
};

// Canonical residue of a mod v^level.
VAdic vadic_reduce(const VPlace& place, const Poly& a, int level);
// num/den mod v^level; den must be coprime to v.
VAdic vadic_reduce(const VPlace& place, const Poly& num, const Poly& den, int level);
// Inverse of a unit at its own level.
VAdic vadic_inv(const VAdic& x);
// x^t at target_level <= level(x).  x must be a unit mod v; the exponent is
// reduced modulo the unit-group order (q^d-1)q^{(E-1)d} when that fits in
// int64, so any t' congruent to t gives the same result.
VAdic vadic_pow(const VAdic& x, long long t, int target_level);

}  // namespace fqmzv
