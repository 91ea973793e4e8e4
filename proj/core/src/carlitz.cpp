#include "fqmzv/carlitz.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fqmzv/errors.hpp"

namespace fqmzv {

IndexComposition IndexComposition::collapsed(int i) const {
    if (i < 1 || i > depth())
        throw std::invalid_argument("collapse position out of range");
    IndexComposition out;
    int head = 0;
    for (int j = 0; j < i; ++j) head += parts[(size_t)j];
    out.parts.push_back(head);
    for (size_t j = (size_t)i; j < parts.size(); ++j) out.parts.push_back(parts[j]);
    return out;
}

Rat64 Rat64::of(int64_t n, int64_t d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    return {n, d};
}

bool rat64_le(const Rat64& a, const Rat64& b) { return a.num * b.den <= b.num * a.den; }
bool rat64_le_int(const Rat64& a, int64_t b) { return a.num <= b * a.den; }
bool int_ge_rat64(int64_t a, const Rat64& b) { return a * b.den >= b.num; }

Rat64 rat64_sub(const Rat64& a, const Rat64& b) {
    return Rat64::of(a.num * b.den - b.num * a.den, a.den * b.den);
}

int64_t rat64_ceil(const Rat64& a) {
    int64_t q = a.num / a.den;
    if (a.num % a.den != 0 && a.num > 0) ++q;
    return q;
}

FqElem binomial_mod_p(const Fq& F, int64_t n, int64_t k) {
    if (k < 0 || k > n) return F.zero();
    int p = F.p();
    int64_t acc = 1;
    while (n > 0 || k > 0) {
        int64_t nd = n % p, kd = k % p;
        if (kd > nd) return F.zero();
        // binomial(nd, kd) with nd, kd < p <= 509: small Pascal walk
        int64_t b = 1;
        for (int64_t i = 1; i <= kd; ++i) b = b * (nd - kd + i) / i;
        acc = acc * (b % p) % p;
        n /= p;
        k /= p;
    }
    return F.from_int(acc);
}

void CarlitzTable::ensure(int i) {
    if (i < 0) throw std::invalid_argument("Carlitz index must be nonnegative");
    if (brackets_.empty()) {
        brackets_.push_back(poly_zero());   // [0] = 0 by convention
        d_.push_back(poly_one(*F_));
        l_.push_back(poly_one(*F_));
    }
    while ((int)brackets_.size() <= i) {
        int j = (int)brackets_.size();
        // deg [j] = q^j, deg D_j = j q^j: refuse hopeless expansions
        double projected = (double)j * std::pow((double)F_->q(), (double)j);
        if (projected > (double)budget_)
            throw math_error("exact Carlitz factor exceeds the degree budget");
        Poly xq = brackets_[(size_t)j - 1]; // reuse theta^{q^{j-1}} via [j-1] + theta
        Poly theta = poly_var(*F_);
        Poly prev_pow = poly_add(*F_, xq, theta);       // theta^{q^{j-1}}
        Poly cur_pow = poly_pow(*F_, prev_pow, F_->q()); // theta^{q^j}
        brackets_.push_back(poly_sub(*F_, cur_pow, theta));
        d_.push_back(poly_mul(*F_, brackets_.back(), poly_pow(*F_, d_[(size_t)j - 1], F_->q())));
        l_.push_back(poly_mul(*F_, poly_neg(*F_, brackets_.back()), l_[(size_t)j - 1]));
    }
}

const Poly& CarlitzTable::bracket(int i) { ensure(i); return brackets_[(size_t)i]; }
const Poly& CarlitzTable::d_factor(int i) { ensure(i); return d_[(size_t)i]; }
const Poly& CarlitzTable::l_factor(int i) { ensure(i); return l_[(size_t)i]; }

Poly CarlitzTable::carlitz_gamma(int64_t n) {
    if (n < 1) throw std::invalid_argument("carlitz_gamma is defined for n >= 1");
    int64_t m = n - 1;
    Poly acc = poly_one(*F_);
    int j = 0;
    while (m > 0) {
        int64_t digit = m % F_->q();
        if (digit > 0) acc = poly_mul(*F_, acc, poly_pow(*F_, d_factor(j), digit));
        m /= F_->q();
        ++j;
    }
    return acc;
}

Poly CarlitzTable::gamma_index(const IndexComposition& s) {
    Poly acc = poly_one(*F_);
    for (int si : s.parts) acc = poly_mul(*F_, acc, carlitz_gamma(si));
    return acc;
}

int64_t ord_closed_d(const Fq& F, int i, const Place& v) {
    if (i < 0) throw std::invalid_argument("negative Carlitz index");
    int64_t alpha = i / v.eps, beta = i % v.eps;
    int64_t qb = 1;
    for (int64_t j = 0; j < beta; ++j) qb *= F.q();
    int64_t geom = 0, qpow = 1; // (q_v^alpha - 1) / (q_v - 1)
    for (int64_t j = 0; j < alpha; ++j) {
        geom += qpow;
        qpow *= v.qv;
    }
    return qb * geom;
}

int64_t ord_closed_l(const Fq& F, int i, const Place& v) {
    (void)F;
    if (i < 0) throw std::invalid_argument("negative Carlitz index");
    return i / v.eps;
}

Rat64 gamma_ord_bound(const IndexComposition& s, const Place& v) {
    return Rat64::of(s.weight() - s.depth() - s.height(), v.qv - 1);
}

int64_t b_weight(int w, const Place& v) {
    if (w < 1) throw std::invalid_argument("weight must be positive");
    int64_t best = 1; // n = 0 term: q_v^0 - 0 = 1
    int64_t qn = 1;
    for (int64_t n = 1;; ++n) {
        qn *= v.qv;
        int64_t val = qn - n * w;
        if (val < best) best = val;
        // beyond here the sequence increases strictly
        if (qn * (v.qv - 1) > w) break;
    }
    return best;
}

MzvBound mzv_bound(const IndexComposition& s, const Place& v) {
    int w = s.weight();
    Rat64 bound = rat64_sub(Rat64::of(b_weight(w, v), 1), gamma_ord_bound(s, v));
    return {bound, v.qv >= w};
}

} // namespace fqmzv
