#pragma once

#include <cstdint>
#include <vector>

#include "fqmzv/places.hpp"
#include "fqmzv/poly.hpp"

namespace fqmzv {

// A composition (s_1, ..., s_r) of positive integers indexing a multiple
// zeta value / star polylogarithm.
struct IndexComposition {
    std::vector<int> parts;

    int depth() const { return (int)parts.size(); }
    int weight() const {
        int w = 0;
        for (int s : parts) w += s;
        return w;
    }
    // number of entries >= 2 (the "height" entering the factorial bound)
    int height() const {
        int h = 0;
        for (int s : parts) h += s >= 2;
        return h;
    }
    IndexComposition reversed() const {
        return {std::vector<int>(parts.rbegin(), parts.rend())};
    }
    // (s_1 + ... + s_i, s_{i+1}, ..., s_r), 1 <= i <= r
    IndexComposition collapsed(int i) const;

    friend bool operator==(const IndexComposition& a, const IndexComposition& b) {
        return a.parts == b.parts;
    }
};

// Exact rational with small integer parts (bounds are rationals; exact
// arithmetic only, never floating point).
struct Rat64 {
    int64_t num = 0;
    int64_t den = 1; // > 0, reduced

    static Rat64 of(int64_t n, int64_t d);
    friend bool operator==(const Rat64& a, const Rat64& b) {
        return a.num == b.num && a.den == b.den;
    }
};
bool rat64_le(const Rat64& a, const Rat64& b);          // a <= b
bool rat64_le_int(const Rat64& a, int64_t b);           // a <= b
bool int_ge_rat64(int64_t a, const Rat64& b);           // a >= b
Rat64 rat64_sub(const Rat64& a, const Rat64& b);
std::int64_t rat64_ceil(const Rat64& a);

// binomial(n, k) mod p embedded in F_q (Lucas' theorem)
FqElem binomial_mod_p(const Fq& F, int64_t n, int64_t k);

// Memoized exact Carlitz quantities for one base field:
//   bracket(i) = theta^{q^i} - theta
//   d_factor(i) = [i] d_factor(i-1)^q,             d_factor(0) = 1
//   l_factor(i) = -[i] l_factor(i-1),              l_factor(0) = 1
//   carlitz_gamma(n) = prod_j d_factor(j)^{n_j},   n >= 1, digits of n-1
// Materializing these is guarded by a degree budget since deg d_factor(i)
// grows like i q^i.  Not thread-safe; one table per worker.
class CarlitzTable {
public:
    explicit CarlitzTable(const Fq& F, int64_t degree_budget = int64_t(1) << 21)
        : F_(&F), budget_(degree_budget) {}

    const Fq& field() const { return *F_; }

    const Poly& bracket(int i);
    const Poly& d_factor(int i);
    const Poly& l_factor(int i);
    Poly carlitz_gamma(int64_t n);
    Poly gamma_index(const IndexComposition& s);

private:
    const Fq* F_;
    int64_t budget_;
    std::vector<Poly> brackets_{};
    std::vector<Poly> d_{};
    std::vector<Poly> l_{};

    void ensure(int i);
};

// Closed-form valuations at a finite place: with i = alpha eps_v + beta,
// 0 <= beta < eps_v,
//   ord_v d_factor(i) = q^beta (q_v^alpha - 1) / (q_v - 1)
//   ord_v l_factor(i) = alpha.
int64_t ord_closed_d(const Fq& F, int i, const Place& v);
int64_t ord_closed_l(const Fq& F, int i, const Place& v);

// Upper bound for ord_v of gamma_index(s):
//   (weight - depth - height) / (q_v - 1), an exact rational.
Rat64 gamma_ord_bound(const IndexComposition& s, const Place& v);

// B_{w,v} = min_{n >= 0} (q_v^n - n w); the series' valuation floor.
int64_t b_weight(int w, const Place& v);

// Lower bound for ord_v zeta(s)_v together with the integrality
// criterion flag: q_v >= weight keeps the bound above -1, and since the
// valuation is an integer that already forces it nonnegative.
struct MzvBound {
    Rat64 bound;
    bool criterion;
};
MzvBound mzv_bound(const IndexComposition& s, const Place& v);

} // namespace fqmzv
