#include "fqmzv/vadic.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "fqmzv/enumerate.hpp"

namespace fqmzv {

VPlace::VPlace(const Fq& f, Poly v) : f_(&f), v_(std::move(v)), d_(v_.degree()) {
    pows_.push_back(Poly::one(f));
    pows_.push_back(v_);
    mu_ = new std::mutex;
}

const VPlace& VPlace::get(const Poly& v) {
    if (!v.is_monic() || v.degree() < 1) throw std::invalid_argument("v must be monic of positive degree");
    if (!is_irreducible(v)) throw std::invalid_argument("v not irreducible");
    static std::mutex mu;
    static std::map<std::pair<const Fq*, std::vector<fq_elem>>, const VPlace*> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(&v.field(), v.coeffs());
    auto it = registry.find(key);
    if (it != registry.end()) return *it->second;
    const VPlace* p = new VPlace(v.field(), v);  // interned for process lifetime
    registry.emplace(std::move(key), p);
    return *p;
}

const Poly& VPlace::v_pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of v");
    std::lock_guard<std::mutex> lock(*static_cast<std::mutex*>(mu_));
    while (int(pows_.size()) <= e) pows_.push_back(pows_.back() * v_);
    return pows_[e];
}

long long VPlace::unit_group_order(int level, bool& fits) const {
    fits = true;
    const long long q = f_->q();
    long long qd = 1;
    for (int i = 0; i < d_; ++i) {
        if (qd > std::numeric_limits<long long>::max() / q) { fits = false; return 0; }
        qd *= q;
    }
    long long order = qd - 1;
    for (int i = 0; i < (level - 1) * d_; ++i) {
        if (order > std::numeric_limits<long long>::max() / q) { fits = false; return 0; }
        order *= q;
    }
    return order;
}

VAdic::VAdic(const VPlace& place, int level, const Poly& value) : pl_(&place), level_(level) {
    if (level < 1) throw std::invalid_argument("v-adic level must be positive");
    value_ = value % place.v_pow(level);
}

const VPlace& VAdic::place() const {
    if (!pl_) throw std::logic_error("v-adic value has no place attached");
    return *pl_;
}

bool VAdic::is_unit() const { return !(value_ % place().v()).is_zero(); }

int VAdic::ord() const {
    if (value_.is_zero()) return level_;
    return ord_at(value_, pl_->v());
}

VAdic VAdic::reduced_to(int level) const {
    if (level > level_) throw std::invalid_argument("cannot raise v-adic level");
    return VAdic(*pl_, level, value_);
}

VAdic VAdic::operator-() const { return VAdic(*pl_, level_, -value_); }

namespace {
int common_level(const VAdic& a, const VAdic& b) {
    if (&a.place() != &b.place()) throw std::invalid_argument("mixed places in v-adic arithmetic");
    return std::min(a.level(), b.level());
}
}  // namespace

VAdic operator+(const VAdic& a, const VAdic& b) {
    int lv = common_level(a, b);
    return VAdic(a.place(), lv, a.value() + b.value());
}

VAdic operator-(const VAdic& a, const VAdic& b) {
    int lv = common_level(a, b);
    return VAdic(a.place(), lv, a.value() - b.value());
}

VAdic operator*(const VAdic& a, const VAdic& b) {
    int lv = common_level(a, b);
    return VAdic(a.place(), lv, a.value() * b.value());
}

bool VAdic::operator==(const VAdic& rhs) const {
    int lv = common_level(*this, rhs);
    return ((value_ - rhs.value_) % pl_->v_pow(lv)).is_zero();
}

VAdic VAdic::inv() const {
    if (!is_unit()) throw std::domain_error("not a unit");
    Poly x, y;
    Poly g = ext_gcd(value_, pl_->v_pow(level_), x, y);
    if (!g.is_one()) throw std::logic_error("inverse failed for a claimed unit");
    return VAdic(*pl_, level_, x);
}

VAdic VAdic::pow(long long t) const {
    if (t < 0) return inv().pow(-t);
    VAdic r = one(*pl_, level_);
    VAdic base = *this;
    unsigned long long e = (unsigned long long)t;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

VAdic vadic_reduce(const VPlace& place, const Poly& a, int level) {
    return VAdic(place, level, a);
}

VAdic vadic_reduce(const VPlace& place, const Poly& num, const Poly& den, int level) {
    if ((den % place.v()).is_zero()) throw std::domain_error("denominator not a v-unit");
    return vadic_reduce(place, num, level) * VAdic(place, level, den).inv();
}

VAdic vadic_inv(const VAdic& x) { return x.inv(); }

VAdic vadic_pow(const VAdic& x, long long t, int target_level) {
    if (!x.is_unit()) throw std::domain_error("not a unit");
    VAdic base = x.reduced_to(target_level);
    bool fits = false;
    long long order = x.place().unit_group_order(target_level, fits);
    if (fits) {
        t %= order;
        if (t < 0) t += order;
    }
    return base.pow(t);
}

}  // namespace fqmzv
