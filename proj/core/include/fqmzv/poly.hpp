#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fqmzv/fq.hpp"

namespace fqmzv {

// Dense univariate polynomial over F_q, coefficients ascending (c[0] is
// the constant term), normalized: no trailing zero coefficients, so the
// zero polynomial has an empty vector.  The indeterminate is contextual
// (theta for ring elements, t for operator polynomials); rendering picks
// the letter.
struct Poly {
    std::vector<FqElem> c;

    int deg() const { return (int)c.size() - 1; } // zero polynomial: -1
    bool is_zero() const { return c.empty(); }
    FqElem lc() const { return c.back(); }        // only on nonzero
    FqElem coeff(int i) const {
        return (i >= 0 && i < (int)c.size()) ? c[i] : FqElem{0};
    }
    void normalize() {
        while (!c.empty() && c.back().v == 0) c.pop_back();
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c == b.c); }
};

Poly poly_zero();
Poly poly_const(const Fq& F, FqElem a);
Poly poly_one(const Fq& F);
Poly poly_var(const Fq& F);                        // the indeterminate itself
Poly poly_from_coeffs(const Fq& F, std::vector<FqElem> cs);

Poly poly_add(const Fq& F, const Poly& a, const Poly& b);
Poly poly_sub(const Fq& F, const Poly& a, const Poly& b);
Poly poly_neg(const Fq& F, const Poly& a);
Poly poly_mul(const Fq& F, const Poly& a, const Poly& b);
Poly poly_scale(const Fq& F, FqElem s, const Poly& a);
Poly poly_shift(const Poly& a, int k);             // multiply by var^k, k >= 0
Poly poly_pow(const Fq& F, const Poly& a, int64_t k);

bool poly_is_monic(const Poly& a);
Poly poly_make_monic(const Fq& F, const Poly& a);

// Euclidean division a = q*b + r, deg r < deg b; b nonzero.
std::pair<Poly, Poly> poly_divrem(const Fq& F, const Poly& a, const Poly& b);
Poly poly_mod(const Fq& F, const Poly& a, const Poly& b);
Poly poly_div_exact(const Fq& F, const Poly& a, const Poly& b); // throws if remainder nonzero
bool poly_divides(const Fq& F, const Poly& b, const Poly& a);   // b | a

Poly poly_gcd(const Fq& F, Poly a, Poly b);         // monic
Poly poly_inverse_mod(const Fq& F, const Poly& a, const Poly& m); // a^-1 mod m, gcd(a,m)=1
Poly poly_powmod(const Fq& F, Poly base, int64_t k, const Poly& m);

FqElem poly_eval(const Fq& F, const Poly& a, FqElem x);

// Total ordering used wherever a deterministic polynomial order is
// needed (place enumeration, sorted output): by degree, then by the
// base-q integer key sum val(c_i) * q^i ascending.
int poly_order_cmp(const Fq& F, const Poly& a, const Poly& b);

} // namespace fqmzv
