#include "fqmzv/fq.hpp"

#include <array>
#include <stdexcept>

namespace fqmzv {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Built-in moduli for the non-prime fields we support (ascending
// coefficients over F_p, monic).  Each is verified irreducible below, so
// the exact choice only pins the coordinate basis.
const std::vector<int>* lookup_modulus(int p, int e) {
    struct Entry { int p, e; std::vector<int> m; };
    static const std::vector<Entry> table = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {3, 2, {2, 2, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 0, 0, 2, 1}},
        {5, 2, {2, 4, 1}},
        {5, 3, {3, 3, 0, 1}},
        {5, 4, {2, 4, 4, 0, 1}},
    };
    for (const auto& t : table)
        if (t.p == p && t.e == e) return &t.m;
    return nullptr;
}

// Plain F_p[x] product of packed coordinate vectors reduced mod the
// modulus; only used while building the log tables.
uint16_t poly_mul_mod(int p, int e, const std::vector<int>& mod,
                      uint16_t a, uint16_t b) {
    std::array<int, 8> prod{}; // degree < 2e-1 <= 7
    std::array<int, 4> da{}, db{};
    for (int i = 0; i < e; ++i) { da[i] = a % p; a = (uint16_t)(a / p); }
    for (int i = 0; i < e; ++i) { db[i] = b % p; b = (uint16_t)(b / p); }
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    // reduce: x^e = -(mod_0 + mod_1 x + ... + mod_{e-1} x^{e-1})
    for (int d = 2 * e - 2; d >= e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e; ++i)
            prod[d - e + i] = ((prod[d - e + i] - c * mod[i]) % p + p * p) % p;
    }
    uint16_t out = 0;
    for (int i = e - 1; i >= 0; --i) out = (uint16_t)(out * p + prod[i]);
    return out;
}

// Irreducibility over F_p by trial division against every monic divisor
// of degree <= e/2 (e <= 4, p <= 5: at most 25 candidates).
bool modulus_irreducible(int p, int e, const std::vector<int>& mod) {
    auto eval = [&](const std::vector<int>& f, int x) {
        long long acc = 0;
        for (int i = (int)f.size() - 1; i >= 0; --i) acc = (acc * x + f[i]) % p;
        return (int)acc;
    };
    for (int x = 0; x < p; ++x)
        if (eval(mod, x) == 0) return false;
    if (e < 4) return true;
    // degree-2 monic divisors: long division remainder must be nonzero
    for (int c1 = 0; c1 < p; ++c1)
        for (int c0 = 0; c0 < p; ++c0) {
            std::vector<int> r = mod; // divide by x^2 + c1 x + c0
            for (int d = (int)r.size() - 1; d >= 2; --d) {
                int c = r[d];
                if (c == 0) continue;
                r[d] = 0;
                r[d - 1] = ((r[d - 1] - c * c1) % p + p * p) % p;
                r[d - 2] = ((r[d - 2] - c * c0) % p + p * p) % p;
            }
            if (r[0] == 0 && r[1] == 0) return false;
        }
    return true;
}

} // namespace

Fq::Fq(int p, int e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("field extension degree must be positive");
    if (e == 1) {
        if (p > 509) throw std::invalid_argument("prime field size above supported limit (509)");
        q_ = p;
        modulus_ = {0, 1};
    } else {
        const std::vector<int>* m = lookup_modulus(p, e);
        if (!m) throw std::invalid_argument("no built-in modulus for this (p, e); supported: e <= 4 over p in {2, 3, 5}");
        modulus_ = *m;
        if (!modulus_irreducible(p, e, modulus_))
            throw std::logic_error("built-in modulus is not irreducible");
        q_ = 1;
        for (int i = 0; i < e; ++i) q_ *= p;
    }

    // find a generator of the multiplicative group and fill the tables
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (uint16_t cand = 1; ; ++cand) { // q = 2: the trivial group is generated by 1
        if (cand >= q_) throw std::logic_error("no generator found");
        // walk powers of cand until we return to 1
        uint16_t x = 1;
        int order = 0;
        do {
            x = raw_mul(x, cand);
            ++order;
        } while (x != 1);
        if (order != q_ - 1) continue;
        gen_ = {cand};
        x = 1;
        for (int i = 0; i < q_ - 1; ++i) {
            exp_[i] = x;
            log_[x] = (uint16_t)i;
            x = raw_mul(x, cand);
        }
        break;
    }
}

Fq Fq::from_order(int64_t q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    int64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q; // q itself prime
    int e = 0;
    int64_t m = q;
    while (m > 1) {
        if (m % p != 0) throw std::invalid_argument("field order is not a prime power");
        m /= p;
        ++e;
    }
    return Fq((int)p, e);
}

uint16_t Fq::raw_mul(uint16_t a, uint16_t b) const {
    if (e_ == 1) return (uint16_t)((uint32_t)a * b % p_);
    return poly_mul_mod(p_, e_, modulus_, a, b);
}

FqElem Fq::elem(uint32_t packed) const {
    if (packed >= (uint32_t)q_) throw std::invalid_argument("packed value out of field range");
    return {(uint16_t)packed};
}

FqElem Fq::from_int(int64_t n) const {
    int64_t r = n % p_;
    if (r < 0) r += p_;
    return {(uint16_t)r};
}

FqElem Fq::add(FqElem a, FqElem b) const {
    if (p_ == 2) return {(uint16_t)(a.v ^ b.v)};
    if (e_ == 1) return {(uint16_t)((a.v + b.v) % p_)};
    uint16_t out = 0, mult = 1;
    uint16_t x = a.v, y = b.v;
    for (int i = 0; i < e_; ++i) {
        out = (uint16_t)(out + (uint16_t)((x % p_ + y % p_) % p_) * mult);
        x = (uint16_t)(x / p_);
        y = (uint16_t)(y / p_);
        mult = (uint16_t)(mult * p_);
    }
    return {out};
}

FqElem Fq::neg(FqElem a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return {(uint16_t)((p_ - a.v) % p_)};
    uint16_t out = 0, mult = 1;
    uint16_t x = a.v;
    for (int i = 0; i < e_; ++i) {
        out = (uint16_t)(out + (uint16_t)((p_ - x % p_) % p_) * mult);
        x = (uint16_t)(x / p_);
        mult = (uint16_t)(mult * p_);
    }
    return {out};
}

FqElem Fq::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Fq::mul(FqElem a, FqElem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    int s = log_[a.v] + log_[b.v];
    if (s >= q_ - 1) s -= q_ - 1;
    return {exp_[s]};
}

FqElem Fq::inv(FqElem a) const {
    if (a.v == 0) throw std::invalid_argument("division by zero in F_q");
    return {exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
}

FqElem Fq::div(FqElem a, FqElem b) const { return mul(a, inv(b)); }

FqElem Fq::pow(FqElem a, int64_t k) const {
    if (k < 0) throw std::invalid_argument("negative exponent");
    if (a.v == 0) return k == 0 ? one() : zero();
    int64_t r = (int64_t)log_[a.v] * (k % (q_ - 1)) % (q_ - 1);
    return {exp_[r]};
}

} // namespace fqmzv
