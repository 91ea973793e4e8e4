#include "fqmzv/vadic.hpp"

#include <algorithm>
#include <stdexcept>

#include "fqmzv/errors.hpp"
#include "fqmzv/format.hpp"

namespace fqmzv {

int64_t sat_prec_add(int64_t a, int64_t b) {
    int64_t s = a + b;
    return s > kExactPrec ? kExactPrec : s;
}

int64_t sat_prec_mul(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kExactPrec / b) return kExactPrec;
    int64_t s = a * b;
    return s > kExactPrec ? kExactPrec : s;
}

int64_t VAdic::ord() const {
    if (zero)
        throw math_error("valuation requested of a value that is zero to working precision");
    return ord_;
}

LocalField::LocalField(const Fq& F, Place v) : F_(&F), v_(std::move(v)) {
    // cheap structural tag so cross-place operands are caught
    uint32_t h = 2166136261u;
    for (const auto& c : v_.v.c) h = (h ^ c.v) * 16777619u;
    h = (h ^ (uint32_t)F.q()) * 16777619u;
    tag_ = h;
    vpow_ = {poly_one(F), v_.v};
}

const Poly& LocalField::v_power(int64_t k) {
    if (k < 0) throw std::invalid_argument("negative power of the place");
    if (k > kMaxWorkPrec)
        throw math_error("working precision limit exceeded at a finite place");
    while ((int64_t)vpow_.size() <= k)
        vpow_.push_back(poly_mul(*F_, vpow_.back(), v_.v));
    return vpow_[(size_t)k];
}

void LocalField::check(const VAdic& x) const {
    if (x.tag != tag_)
        throw std::invalid_argument("local-field operand belongs to a different place");
}

VAdic LocalField::exact_zero() const {
    VAdic z;
    z.zero = true;
    z.prec = kExactPrec;
    z.tag = tag_;
    return z;
}

VAdic LocalField::zero_to_prec(int64_t prec) const {
    VAdic z;
    z.zero = true;
    z.prec = prec;
    z.tag = tag_;
    return z;
}

VAdic LocalField::make(int64_t ord, const Poly& raw, int64_t prec) {
    if (prec >= kExactPrec) prec = kExactPrec - 1; // only true zeros get the sentinel
    VAdic r;
    r.tag = tag_;
    if (ord >= prec || raw.is_zero()) return zero_to_prec(prec);
    // reduce only when the data exceeds the modulus; this keeps exact
    // polynomials (converted at enormous precision) cheap
    Poly u = raw;
    if (prec - ord <= kMaxWorkPrec && raw.deg() >= (prec - ord) * v_.eps)
        u = poly_mod(*F_, raw, v_power(prec - ord));
    // strip place factors out of the unit part
    while (!u.is_zero()) {
        auto [q, rem] = poly_divrem(*F_, u, v_.v);
        if (!rem.is_zero()) break;
        u = std::move(q);
        ++ord;
        if (ord >= prec) return zero_to_prec(prec);
    }
    if (u.is_zero()) return zero_to_prec(prec);
    r.ord_ = ord;
    r.prec = prec;
    r.unit = std::move(u);
    r.zero = false;
    return r;
}

VAdic LocalField::from_poly(const Poly& p, int64_t prec) {
    if (p.is_zero()) return exact_zero();
    return make(0, p, prec);
}

VAdic LocalField::from_rational(const Rational& r, int64_t prec) {
    if (r.is_zero()) return exact_zero();
    int64_t a = ord_exact(*F_, r.num, v_);
    int64_t b = ord_exact(*F_, r.den, v_);
    int64_t ord = a - b;
    if (ord >= prec) return zero_to_prec(prec);
    int64_t k = prec - ord;
    Poly nu = poly_div_exact(*F_, r.num, v_power(a));
    Poly du = poly_div_exact(*F_, r.den, v_power(b));
    Poly u = poly_mod(*F_, poly_mul(*F_, poly_mod(*F_, nu, v_power(k)), unit_inverse(du, k)), v_power(k));
    VAdic out;
    out.tag = tag_;
    out.ord_ = ord;
    out.prec = prec;
    out.unit = std::move(u);
    out.zero = false;
    return out;
}

Poly LocalField::unit_inverse(const Poly& u, int64_t k) {
    // inverse mod v, then Newton doubling: x <- x(2 - ux)
    Poly x = poly_inverse_mod(*F_, poly_mod(*F_, u, v_.v), v_.v);
    int64_t have = 1;
    Poly two = poly_const(*F_, F_->from_int(2));
    while (have < k) {
        have = std::min(2 * have, k);
        const Poly& m = v_power(have);
        Poly ux = poly_mod(*F_, poly_mul(*F_, poly_mod(*F_, u, m), x), m);
        x = poly_mod(*F_, poly_mul(*F_, x, poly_sub(*F_, two, ux)), m);
    }
    return x;
}

VAdic LocalField::add(const VAdic& a, const VAdic& b) {
    check(a); check(b);
    int64_t prec = std::min(a.prec, b.prec);
    if (a.zero && b.zero) return zero_to_prec(prec);
    if (a.zero) {
        if (b.ord_ >= prec) return zero_to_prec(prec);
        return make(b.ord_, b.unit, prec);
    }
    if (b.zero) {
        if (a.ord_ >= prec) return zero_to_prec(prec);
        return make(a.ord_, a.unit, prec);
    }
    int64_t m = std::min(a.ord_, b.ord_);
    if (m >= prec) return zero_to_prec(prec);
    // align both units at shift m; degrees stay below (prec - m) * eps
    Poly ua = poly_mul(*F_, a.unit, v_power(a.ord_ - m));
    Poly ub = poly_mul(*F_, b.unit, v_power(b.ord_ - m));
    return make(m, poly_add(*F_, ua, ub), prec);
}

VAdic LocalField::neg(const VAdic& a) {
    check(a);
    if (a.zero) return a;
    VAdic r = a;
    r.unit = poly_neg(*F_, r.unit);
    return r;
}

VAdic LocalField::sub(const VAdic& a, const VAdic& b) { return add(a, neg(b)); }

VAdic LocalField::mul(const VAdic& a, const VAdic& b) {
    check(a); check(b);
    if (a.zero && b.zero) return zero_to_prec(sat_prec_add(a.prec, b.prec));
    if (a.zero) return zero_to_prec(a.is_exact_zero() ? kExactPrec : sat_prec_add(a.prec, b.ord_));
    if (b.zero) return zero_to_prec(b.is_exact_zero() ? kExactPrec : sat_prec_add(b.prec, a.ord_));
    int64_t prec = std::min(sat_prec_add(a.prec, b.ord_), sat_prec_add(b.prec, a.ord_));
    int64_t ord = a.ord_ + b.ord_;
    if (ord >= prec) return zero_to_prec(prec);
    Poly u = poly_mod(*F_, poly_mul(*F_, a.unit, b.unit), v_power(prec - ord));
    return make(ord, u, prec);
}

VAdic LocalField::inv(const VAdic& a) {
    check(a);
    if (a.zero) throw math_error("inverse of a value that is zero to working precision");
    int64_t ord = -a.ord_;
    int64_t prec = a.prec - 2 * a.ord_;
    int64_t k = prec - ord;
    if (k <= 0) return zero_to_prec(prec);
    VAdic r;
    r.tag = tag_;
    r.ord_ = ord;
    r.prec = prec;
    r.unit = unit_inverse(a.unit, k);
    r.zero = false;
    return r;
}

VAdic LocalField::div(const VAdic& a, const VAdic& b) {
    check(a); check(b);
    if (b.zero) throw math_error("division by a value that is zero to working precision");
    if (a.zero) {
        if (a.is_exact_zero()) return exact_zero();
        return zero_to_prec(a.prec - b.ord_);
    }
    int64_t prec = std::min(a.prec - b.ord_, b.prec + a.ord_ - 2 * b.ord_);
    int64_t ord = a.ord_ - b.ord_;
    if (ord >= prec) return zero_to_prec(prec);
    int64_t k = prec - ord;
    Poly u = poly_mod(*F_, poly_mul(*F_, a.unit, unit_inverse(b.unit, k)), v_power(k));
    return make(ord, u, prec);
}

VAdic LocalField::pow(const VAdic& a, int64_t k) {
    if (k < 0) throw std::invalid_argument("negative exponent in local-field power");
    check(a);
    VAdic acc = from_poly(poly_one(*F_), kExactPrec - 1);
    VAdic base = a;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return acc;
}

VAdic LocalField::scale(FqElem s, const VAdic& a) {
    check(a);
    if (s.v == 0) return exact_zero();
    if (a.zero) return a;
    VAdic r = a;
    r.unit = poly_scale(*F_, s, r.unit);
    return r;
}

VAdic LocalField::mul_poly(const VAdic& a, const Poly& p) {
    check(a);
    if (p.is_zero()) return exact_zero();
    int64_t po = ord_exact(*F_, p, v_);
    if (a.zero) return zero_to_prec(a.is_exact_zero() ? kExactPrec : sat_prec_add(a.prec, po));
    Poly pu = poly_div_exact(*F_, p, v_power(po));
    int64_t ord = a.ord_ + po;
    int64_t prec = sat_prec_add(a.prec, po);
    return make(ord, poly_mul(*F_, a.unit, pu), prec);
}

VAdic LocalField::frobenius(const VAdic& a, int i) {
    check(a);
    if (i < 0) throw std::invalid_argument("negative Frobenius twist");
    if (i == 0) return a;
    int64_t qi = 1;
    for (int j = 0; j < i; ++j) qi = sat_prec_mul(qi, F_->q());
    if (a.zero) return zero_to_prec(sat_prec_mul(a.prec, qi));
    int64_t ord = a.ord_ * qi;
    int64_t prec = sat_prec_mul(a.prec, qi);
    // (v^m u)^{q^i} = v^{m q^i} u^{q^i}; the q^i-th power of a unit stays
    // a unit
    int64_t k = prec - ord;
    if (k > kMaxWorkPrec)
        throw math_error("Frobenius image exceeds the working precision limit; clamp first");
    Poly u = a.unit;
    const Poly& m = v_power(k);
    u = poly_mod(*F_, u, m);
    for (int j = 0; j < i; ++j) u = poly_powmod(*F_, u, F_->q(), m);
    VAdic r;
    r.tag = tag_;
    r.ord_ = ord;
    r.prec = prec;
    r.unit = std::move(u);
    r.zero = false;
    return r;
}

VAdic LocalField::frobenius_clamped(const VAdic& a, int i, int64_t target_prec) {
    check(a);
    if (i == 0) return clamp(a, target_prec);
    int64_t qi = 1;
    for (int j = 0; j < i; ++j) qi = sat_prec_mul(qi, F_->q());
    // input precision needed so the image still certifies target_prec
    int64_t need = target_prec / qi + 2;
    return clamp(frobenius(clamp(a, need), i), target_prec);
}

VAdic LocalField::clamp(const VAdic& a, int64_t new_prec) {
    check(a);
    if (a.prec <= new_prec) return a;
    if (a.is_exact_zero()) return a; // exact zero satisfies every precision
    if (a.zero) return zero_to_prec(std::min(a.prec, new_prec));
    if (a.ord_ >= new_prec) return zero_to_prec(new_prec);
    return make(a.ord_, a.unit, new_prec);
}

VAdic LocalField::bracket_image(int i, int64_t prec) {
    if (i < 0) throw std::invalid_argument("bracket index must be nonnegative");
    if (prec < 1) prec = 1;
    const Poly& m = v_power(prec);
    Poly x = poly_mod(*F_, poly_var(*F_), m);
    for (int j = 0; j < i; ++j) x = poly_powmod(*F_, x, F_->q(), m);
    return make(0, poly_sub(*F_, x, poly_var(*F_)), prec);
}

std::vector<VAdicDigit> LocalField::digits(const VAdic& a) {
    check(a);
    std::vector<VAdicDigit> out;
    if (a.zero) return out;
    Poly cur = a.unit;
    int64_t pow = a.ord_;
    while (!cur.is_zero() && pow < a.prec) {
        auto [q, r] = poly_divrem(*F_, cur, v_.v);
        if (!r.is_zero()) out.push_back({pow, r});
        cur = std::move(q);
        ++pow;
    }
    return out;
}

std::string LocalField::to_string(const VAdic& a) {
    check(a);
    std::string vs = poly_to_string(*F_, v_.v);
    if (v_.eps > 1 || vs.size() > 1) vs = "(" + vs + ")";
    std::string out;
    if (a.is_exact_zero()) return "0";
    for (const auto& d : digits(a)) {
        if (!out.empty()) out += " + ";
        std::string ds = poly_to_string(*F_, d.digit);
        bool need_paren = ds.find('+') != std::string::npos || ds.find('-') != std::string::npos;
        if (d.pow == 0) {
            out += need_paren ? "(" + ds + ")" : ds;
        } else {
            if (ds != "1") out += (need_paren ? "(" + ds + ")" : ds) + "*";
            out += vs;
            if (d.pow != 1) out += "^" + std::to_string(d.pow);
        }
    }
    if (!out.empty()) out += " + ";
    out += "O(" + vs + "^" + std::to_string(a.prec) + ")";
    return out;
}

} // namespace fqmzv
