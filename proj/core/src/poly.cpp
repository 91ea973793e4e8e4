#include "fqmzv/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "fqmzv/errors.hpp"

namespace fqmzv {

Poly poly_zero() { return {}; }

Poly poly_const(const Fq& F, FqElem a) {
    (void)F;
    Poly r;
    if (a.v != 0) r.c = {a};
    return r;
}

Poly poly_one(const Fq& F) { return poly_const(F, F.one()); }

Poly poly_var(const Fq& F) {
    Poly r;
    r.c = {F.zero(), F.one()};
    return r;
}

Poly poly_from_coeffs(const Fq& F, std::vector<FqElem> cs) {
    (void)F;
    Poly r;
    r.c = std::move(cs);
    r.normalize();
    return r;
}

Poly poly_add(const Fq& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = F.add(a.coeff((int)i), b.coeff((int)i));
    r.normalize();
    return r;
}

Poly poly_sub(const Fq& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = F.sub(a.coeff((int)i), b.coeff((int)i));
    r.normalize();
    return r;
}

Poly poly_neg(const Fq& F, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = F.neg(x);
    return r;
}

Poly poly_mul(const Fq& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].v == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].v == 0) continue;
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
        }
    }
    r.normalize();
    return r;
}

Poly poly_scale(const Fq& F, FqElem s, const Poly& a) {
    if (s.v == 0) return {};
    Poly r = a;
    for (auto& x : r.c) x = F.mul(s, x);
    r.normalize();
    return r;
}

Poly poly_shift(const Poly& a, int k) {
    if (k < 0) throw std::invalid_argument("poly_shift: negative shift");
    if (a.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + (size_t)k, FqElem{0});
    std::copy(a.c.begin(), a.c.end(), r.c.begin() + k);
    return r;
}

Poly poly_pow(const Fq& F, const Poly& a, int64_t k) {
    if (k < 0) throw std::invalid_argument("poly_pow: negative exponent");
    Poly acc = poly_one(F), base = a;
    while (k > 0) {
        if (k & 1) acc = poly_mul(F, acc, base);
        k >>= 1;
        if (k > 0) base = poly_mul(F, base, base);
    }
    return acc;
}

bool poly_is_monic(const Poly& a) { return !a.is_zero() && a.lc().v == 1; }

Poly poly_make_monic(const Fq& F, const Poly& a) {
    if (a.is_zero()) return {};
    return poly_scale(F, F.inv(a.lc()), a);
}

std::pair<Poly, Poly> poly_divrem(const Fq& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.deg() < b.deg()) return {poly_zero(), a};
    Poly q, r = a;
    q.c.assign((size_t)(a.deg() - b.deg() + 1), F.zero());
    FqElem binv = F.inv(b.lc());
    for (int d = a.deg(); d >= b.deg(); --d) {
        FqElem c = r.coeff(d);
        if (c.v == 0) continue;
        FqElem f = F.mul(c, binv);
        q.c[(size_t)(d - b.deg())] = f;
        for (int i = 0; i <= b.deg(); ++i) {
            size_t idx = (size_t)(d - b.deg() + i);
            r.c[idx] = F.sub(r.c[idx], F.mul(f, b.c[(size_t)i]));
        }
    }
    q.normalize();
    r.normalize();
    return {q, r};
}

Poly poly_mod(const Fq& F, const Poly& a, const Poly& b) {
    return poly_divrem(F, a, b).second;
}

Poly poly_div_exact(const Fq& F, const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(F, a, b);
    if (!r.is_zero()) throw math_error("exact polynomial division left a remainder");
    return q;
}

bool poly_divides(const Fq& F, const Poly& b, const Poly& a) {
    if (a.is_zero()) return true;
    return poly_mod(F, a, b).is_zero();
}

Poly poly_gcd(const Fq& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(F, a);
}

Poly poly_inverse_mod(const Fq& F, const Poly& a, const Poly& m) {
    // extended Euclid on (a mod m, m)
    Poly r0 = m, r1 = poly_mod(F, a, m);
    Poly t0 = poly_zero(), t1 = poly_one(F);
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divrem(F, r0, r1);
        Poly t2 = poly_sub(F, t0, poly_mul(F, q, t1));
        r0 = std::move(r1); r1 = std::move(r2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.deg() != 0)
        throw math_error("inverse does not exist: operand shares a factor with the modulus");
    return poly_mod(F, poly_scale(F, F.inv(r0.c[0]), t0), m);
}

Poly poly_powmod(const Fq& F, Poly base, int64_t k, const Poly& m) {
    if (k < 0) throw std::invalid_argument("poly_powmod: negative exponent");
    base = poly_mod(F, base, m);
    Poly acc = poly_mod(F, poly_one(F), m);
    while (k > 0) {
        if (k & 1) acc = poly_mod(F, poly_mul(F, acc, base), m);
        k >>= 1;
        if (k > 0) base = poly_mod(F, poly_mul(F, base, base), m);
    }
    return acc;
}

FqElem poly_eval(const Fq& F, const Poly& a, FqElem x) {
    FqElem acc = F.zero();
    for (int i = a.deg(); i >= 0; --i)
        acc = F.add(F.mul(acc, x), a.c[(size_t)i]);
    return acc;
}

int poly_order_cmp(const Fq& F, const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    // same degree: compare base-q keys from the top coefficient down
    for (int i = a.deg(); i >= 0; --i) {
        (void)F;
        if (a.c[(size_t)i].v != b.c[(size_t)i].v)
            return a.c[(size_t)i].v < b.c[(size_t)i].v ? -1 : 1;
    }
    return 0;
}

} // namespace fqmzv
