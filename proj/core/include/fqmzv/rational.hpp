#pragma once

#include "fqmzv/poly.hpp"

namespace fqmzv {

// Element of the rational function field F_q(theta), reduced (gcd of
// numerator and denominator is 1) with monic denominator.  Zero is
// 0 / 1.
struct Rational {
    Poly num;
    Poly den;

    bool is_zero() const { return num.is_zero(); }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
};

Rational rat_from_poly(const Fq& F, const Poly& p);
Rational rat_make(const Fq& F, const Poly& num, const Poly& den); // reduces; den != 0
Rational rat_add(const Fq& F, const Rational& a, const Rational& b);
Rational rat_sub(const Fq& F, const Rational& a, const Rational& b);
Rational rat_neg(const Fq& F, const Rational& a);
Rational rat_mul(const Fq& F, const Rational& a, const Rational& b);
Rational rat_inv(const Fq& F, const Rational& a); // throws math_error on zero
Rational rat_div(const Fq& F, const Rational& a, const Rational& b);
Rational rat_pow(const Fq& F, const Rational& a, int64_t k); // any sign of k
Rational rat_scale(const Fq& F, FqElem s, const Rational& a);

} // namespace fqmzv
