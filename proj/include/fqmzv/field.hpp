#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fqmzv {

// Element of F_q, encoded as an index in [0, q).  The index is the base-p
// digit encoding of the coordinate vector w.r.t. the power basis of the
// field modulus, so indices 0..p-1 are the prime subfield.
using fq_elem = std::uint16_t;

// A finite field F_q, q = p^ext_degree, with table-based arithmetic.
// Instances are interned (see get/get_q) and live for the whole process,
// so raw `const Fq*` handles stay valid and work as cache keys.
class Fq {
  public:
    // Interned lookup. `modulus` is the irreducible modulus over F_p,
    // lowest coefficient first, leading coefficient 1; it may be empty for
    // ext_degree == 1 or when a built-in default exists (q in {4, 8, 9}).
    static const Fq& get(int p, int ext_degree = 1, const std::vector<int>& modulus = {});
    // Convenience: q = p^e with p prime; uses the default modulus.
    static const Fq& get_q(int q);

    int p() const { return p_; }
    int ext_degree() const { return ext_; }
    int q() const { return q_; }
    const std::vector<fq_elem>& modulus() const { return modulus_; }

    fq_elem zero() const { return 0; }
    fq_elem one() const { return 1; }

    fq_elem add(fq_elem a, fq_elem b) const { return add_[size_t(a) * q_ + b]; }
    fq_elem sub(fq_elem a, fq_elem b) const { return add_[size_t(a) * q_ + neg_[b]]; }
    fq_elem mul(fq_elem a, fq_elem b) const { return mul_[size_t(a) * q_ + b]; }
    fq_elem neg(fq_elem a) const { return neg_[a]; }
    fq_elem inv(fq_elem a) const;
    fq_elem div(fq_elem a, fq_elem b) const { return mul(a, inv(b)); }
    fq_elem pow(fq_elem a, long long e) const;

    // n mod p embedded into the prime subfield.
    fq_elem from_int(long long n) const;
    // Coordinates w.r.t. the power basis (length ext_degree, entries in [0,p)).
    std::vector<int> coords(fq_elem a) const;
    fq_elem from_coords(const std::vector<int>& c) const;

    std::string to_string(fq_elem a) const;

    Fq(const Fq&) = delete;
    Fq& operator=(const Fq&) = delete;

  private:
    Fq(int p, int ext, std::vector<fq_elem> modulus);

    int p_, ext_, q_;
    std::vector<fq_elem> modulus_;        // length ext_+1 over F_p
    std::vector<fq_elem> add_, mul_;      // q*q tables
    std::vector<fq_elem> neg_, inv_;      // q tables
};

bool is_prime(int n);

}  // namespace fqmzv
