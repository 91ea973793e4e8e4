#include "fqmzv/rational.hpp"

#include <stdexcept>

#include "fqmzv/errors.hpp"

namespace fqmzv {

Rational rat_from_poly(const Fq& F, const Poly& p) {
    return {p, poly_one(F)};
}

Rational rat_make(const Fq& F, const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("rational with zero denominator");
    if (num.is_zero()) return {poly_zero(), poly_one(F)};
    Poly g = poly_gcd(F, num, den);
    Poly n = poly_div_exact(F, num, g);
    Poly d = poly_div_exact(F, den, g);
    FqElem lead = d.lc();
    if (lead.v != 1) {
        FqElem li = F.inv(lead);
        n = poly_scale(F, li, n);
        d = poly_scale(F, li, d);
    }
    return {n, d};
}

Rational rat_add(const Fq& F, const Rational& a, const Rational& b) {
    Poly num = poly_add(F, poly_mul(F, a.num, b.den), poly_mul(F, b.num, a.den));
    return rat_make(F, num, poly_mul(F, a.den, b.den));
}

Rational rat_sub(const Fq& F, const Rational& a, const Rational& b) {
    Poly num = poly_sub(F, poly_mul(F, a.num, b.den), poly_mul(F, b.num, a.den));
    return rat_make(F, num, poly_mul(F, a.den, b.den));
}

Rational rat_neg(const Fq& F, const Rational& a) {
    return {poly_neg(F, a.num), a.den};
}

Rational rat_mul(const Fq& F, const Rational& a, const Rational& b) {
    return rat_make(F, poly_mul(F, a.num, b.num), poly_mul(F, a.den, b.den));
}

Rational rat_inv(const Fq& F, const Rational& a) {
    if (a.is_zero()) throw math_error("inverse of the zero rational");
    return rat_make(F, a.den, a.num);
}

Rational rat_div(const Fq& F, const Rational& a, const Rational& b) {
    return rat_mul(F, a, rat_inv(F, b));
}

Rational rat_pow(const Fq& F, const Rational& a, int64_t k) {
    if (k < 0) return rat_pow(F, rat_inv(F, a), -k);
    return {poly_pow(F, a.num, k), poly_pow(F, a.den, k)};
}

Rational rat_scale(const Fq& F, FqElem s, const Rational& a) {
    if (s.v == 0) return rat_from_poly(F, poly_zero());
    return {poly_scale(F, s, a.num), a.den};
}

} // namespace fqmzv
