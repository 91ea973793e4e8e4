#include "fqmzv/places.hpp"

#include <algorithm>
#include <stdexcept>

#include "fqmzv/errors.hpp"

namespace fqmzv {

namespace {

std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// x^{q^k} mod f by iterated q-th powers (exponent q is small).
Poly frobenius_power_mod(const Fq& F, int k, const Poly& f) {
    Poly x = poly_mod(F, poly_var(F), f);
    for (int i = 0; i < k; ++i) x = poly_powmod(F, x, F.q(), f);
    return x;
}

} // namespace

bool is_irreducible(const Fq& F, const Poly& f) {
    int n = f.deg();
    if (n <= 0) return false;
    if (n == 1) return true;
    Poly x = poly_mod(F, poly_var(F), f);
    Poly xq = frobenius_power_mod(F, n, f);
    if (xq != x) return false;
    for (int l : prime_divisors(n)) {
        Poly y = poly_sub(F, frobenius_power_mod(F, n / l, f), x);
        if (poly_gcd(F, y, f).deg() != 0) return false;
    }
    return true;
}

Place make_place(const Fq& F, const Poly& v) {
    if (!poly_is_monic(v))
        throw std::invalid_argument("a place must be a monic polynomial");
    if (!is_irreducible(F, v))
        throw std::invalid_argument("a place must be an irreducible polynomial");
    Place p;
    p.v = v;
    p.eps = v.deg();
    p.qv = 1;
    for (int i = 0; i < p.eps; ++i) p.qv *= F.q();
    return p;
}

std::vector<Place> enumerate_places(const Fq& F, int max_deg) {
    if (max_deg < 1) return {};
    std::vector<Place> out;
    for (int d = 1; d <= max_deg; ++d) {
        // monic degree-d polynomials, counted through the base-q key of
        // the lower coefficients — already the required order
        int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= F.q();
        for (int64_t key = 0; key < count; ++key) {
            std::vector<FqElem> cs((size_t)d + 1, F.zero());
            int64_t k = key;
            for (int i = 0; i < d; ++i) {
                cs[(size_t)i] = F.elem((uint32_t)(k % F.q()));
                k /= F.q();
            }
            cs[(size_t)d] = F.one();
            Poly f = poly_from_coeffs(F, std::move(cs));
            if (is_irreducible(F, f)) out.push_back(make_place(F, f));
        }
    }
    return out;
}

int64_t ord_exact(const Fq& F, const Poly& a, const Place& v) {
    if (a.is_zero()) throw math_error("valuation of the zero polynomial");
    int64_t ord = 0;
    Poly cur = a;
    for (;;) {
        auto [q, r] = poly_divrem(F, cur, v.v);
        if (!r.is_zero()) return ord;
        ++ord;
        cur = std::move(q);
    }
}

int64_t ord_exact(const Fq& F, const Rational& a, const Place& v) {
    if (a.is_zero()) throw math_error("valuation of the zero rational");
    return ord_exact(F, a.num, v) - ord_exact(F, a.den, v);
}

} // namespace fqmzv
