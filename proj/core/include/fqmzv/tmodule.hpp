#pragma once

#include "fqmzv/carlitz.hpp"
#include "fqmzv/infadic.hpp"
#include "fqmzv/rational.hpp"
#include "fqmzv/vadic.hpp"

#include <stdexcept>
#include <vector>

namespace fqmzv {

// The block t-module attached to a composition s = (s_1, ..., s_r) and
// arguments u = (u_1, ..., u_r) in F_q[theta].  Block l has size
// d_l = s_l + ... + s_r; the module acts on the flattened coordinate
// vector (block 1 first).  rho_t = theta*I + N + E*frob, where N shifts
// up within each block and E feeds Frobenius twists of block-start
// coordinates into block-bottom rows.
struct TModule {
    IndexComposition s;
    std::vector<Poly> u;
    std::vector<int> d;     // d[l-1] = d_l
    std::vector<int> start; // 0-based offset of block l in the flat vector
    int dim = 0;

    int r() const { return (int)s.parts.size(); }
    int bottom(int l) const { return start[(size_t)(l - 1)] + d[(size_t)(l - 1)] - 1; }
    int top(int l) const { return start[(size_t)(l - 1)]; }
};

TModule build_tmodule(const Fq& F, const IndexComposition& s, const std::vector<Poly>& u);

// entry of E at (bottom of block l, top of block m), 1 <= l <= m <= r:
// 1 when l == m, else (-1)^{m-l} u_l u_{l+1} ... u_{m-1}
Poly tmodule_corner(const Fq& F, const TModule& tm, int l, int m);

// distinguished point: bottom of block m carries (-1)^{r-m} u_m ... u_r,
// all other coordinates zero
std::vector<Poly> special_point(const Fq& F, const TModule& tm);

// smallest divisor l of deg v such that every u_i mod v is fixed by the
// q^l-power Frobenius of the residue field
int continuation_period(const Fq& F, const TModule& tm, const Place& v);

// a(t) = prod_l (v(t)^{d_l * l0} - 1) in F_q[t]; rho_a moves the
// distinguished point into the domain of the local logarithm, and
// a(theta) is a unit at v (every factor is -1 mod v)
Poly continuation_poly(const Fq& F, const TModule& tm, const Place& v);

// Exact full coefficient matrix P_i of the logarithm series
// Log(z) = sum_i P_i z^(i), by the recurrence
//   P_0 = I,
//   P_{i+1} = - sum_{j=0}^{2 d_1 - 2} ad_N^j(P_i E^(i)) / [i+1]^{j+1},
// where E^(i) has entries raised to the q^i power and ad_N X = N X - X N.
// Slow reference implementation; (i+1) * dim <= 64 or it refuses.
std::vector<std::vector<Rational>> log_matrix_oracle(CarlitzTable& tab, const TModule& tm, int i);

// ---- coefficient-ring adapters -------------------------------------
// The evaluation templates below run over any of these.  Each ring
// embeds exact polynomials, supplies theta and the brackets [i], and
// implements a one-step q-power Frobenius.

struct RatRing {
    using Elem = Rational;
    const Fq* F;
    CarlitzTable* tab;

    Elem zero() const { return rat_from_poly(*F, poly_zero()); }
    Elem one() const { return rat_from_poly(*F, poly_one(*F)); }
    Elem theta() const { return rat_from_poly(*F, poly_var(*F)); }
    Elem from_poly(const Poly& p) const { return rat_from_poly(*F, p); }
    Elem bracket(int i) const { return rat_from_poly(*F, tab->bracket(i)); }
    Elem add(const Elem& a, const Elem& b) const { return rat_add(*F, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return rat_sub(*F, a, b); }
    Elem neg(const Elem& a) const { return rat_neg(*F, a); }
    Elem mul(const Elem& a, const Elem& b) const { return rat_mul(*F, a, b); }
    Elem inv(const Elem& a) const { return rat_inv(*F, a); }
    Elem scale(FqElem s, const Elem& a) const { return rat_scale(*F, s, a); }
    Elem frobenius1(const Elem& a) const { return rat_pow(*F, a, F->q()); }
};

struct VadicRing {
    using Elem = VAdic;
    LocalField* K;
    int64_t W; // working precision: every embedded value is O(v^W)-certified

    Elem zero() const { return K->zero_to_prec(W); }
    Elem one() const { return K->from_poly(poly_one(K->field()), W); }
    Elem theta() const { return K->from_poly(poly_var(K->field()), W); }
    Elem from_poly(const Poly& p) const { return K->from_poly(p, W); }
    Elem bracket(int i) const { return K->bracket_image(i, W); }
    Elem add(const Elem& a, const Elem& b) const { return K->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return K->sub(a, b); }
    Elem neg(const Elem& a) const { return K->neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return K->mul(a, b); }
    Elem inv(const Elem& a) const { return K->inv(a); }
    Elem scale(FqElem s, const Elem& a) const { return K->scale(s, a); }
    Elem frobenius1(const Elem& a) const { return K->frobenius_clamped(a, 1, W); }
};

struct InfRing {
    using Elem = InfAdic;
    InfField* K;
    int64_t W; // values carry O(theta^-W)

    Elem zero() const { return K->zero_to_prec(W); }
    Elem one() const { return K->from_poly(poly_one(K->field()), W); }
    Elem theta() const { return K->from_poly(poly_var(K->field()), W); }
    Elem from_poly(const Poly& p) const { return K->from_poly(p, W); }
    Elem bracket(int i) const; // theta^{q^i} - theta, built sparsely
    Elem add(const Elem& a, const Elem& b) const { return K->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return K->sub(a, b); }
    Elem neg(const Elem& a) const { return K->neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return K->mul(a, b); }
    Elem inv(const Elem& a) const { return K->inv(a); }
    Elem scale(FqElem s, const Elem& a) const { return K->scale(s, a); }
    Elem frobenius1(const Elem& a) const { return K->frobenius_clamped(a, 1, W); }
};

inline const Fq* field_of(const RatRing& R) { return R.F; }
inline const Fq* field_of(const VadicRing& R) { return &R.K->field(); }
inline const Fq* field_of(const InfRing& R) { return &R.K->field(); }

// y = rho_t(x) = theta x + N x + E x^(1)
template <class Ring>
std::vector<typename Ring::Elem> apply_rho_t(Ring& R, const TModule& tm,
                                             const std::vector<typename Ring::Elem>& x) {
    using Elem = typename Ring::Elem;
    if ((int)x.size() != tm.dim) throw std::invalid_argument("apply_rho_t: bad vector size");
    Elem th = R.theta();
    std::vector<Elem> y;
    y.reserve(x.size());
    for (const Elem& xk : x) y.push_back(R.mul(th, xk));
    int r = tm.r();
    for (int l = 1; l <= r; ++l) {
        int s0 = tm.top(l);
        for (int j = 0; j + 1 < tm.d[(size_t)(l - 1)]; ++j)
            y[(size_t)(s0 + j)] = R.add(y[(size_t)(s0 + j)], x[(size_t)(s0 + j + 1)]);
    }
    std::vector<Elem> xf;
    xf.reserve((size_t)r);
    for (int m = 1; m <= r; ++m) xf.push_back(R.frobenius1(x[(size_t)tm.top(m)]));
    const Fq& F = *field_of(R);
    for (int l = 1; l <= r; ++l) {
        int b = tm.bottom(l);
        for (int m = l; m <= r; ++m) {
            Poly c = tmodule_corner(F, tm, l, m);
            if (c.deg() < 0) continue;
            y[(size_t)b] = R.add(y[(size_t)b], R.mul(R.from_poly(c), xf[(size_t)(m - 1)]));
        }
    }
    return y;
}

// y = rho_a(x) for a in F_q[t], by Horner over rho_t
template <class Ring>
std::vector<typename Ring::Elem> apply_rho_poly(Ring& R, const TModule& tm, const Poly& a,
                                                const std::vector<typename Ring::Elem>& x) {
    using Elem = typename Ring::Elem;
    std::vector<Elem> y((size_t)tm.dim, R.zero());
    int dega = a.deg();
    if (dega < 0) return y;
    for (size_t k = 0; k < x.size(); ++k) y[k] = R.scale(a.c[(size_t)dega], x[k]);
    for (int j = dega - 1; j >= 0; --j) {
        y = apply_rho_t(R, tm, y);
        if (!field_of(R)->is_zero(a.c[(size_t)j]))
            for (size_t k = 0; k < x.size(); ++k)
                y[k] = R.add(y[k], R.scale(a.c[(size_t)j], x[k]));
    }
    return y;
}

// Streams row number d_1 (bottom of block 1) of the log coefficient
// matrices P_0, P_1, ...  Entry for column (block m, position j):
//   m == 1:  (-[i])^{d_1 - j} / L_i^{d_1}
//   m >= 2:  (-1)^{m-1} (-[i])^{d_m - j} A_{m-1}(i-1) / L_i^{d_m}
// with accumulators A_0 = 1, A_m(-1) = 0,
//   A_m(i) = A_m(i-1) + A_{m-1}(i) u_m^(i) / L_i^{s_m}.
template <class Ring>
class LogRowStream {
public:
    using Elem = typename Ring::Elem;

    LogRowStream(Ring& R, const TModule& tm) : R_(&R), tm_(&tm) {
        inv_l_ = R.one();
        int r = tm.r();
        a_.assign((size_t)r, R.one()); // a_[0] = A_0; a_[m] for m >= 1 set below
        for (int m = 1; m < r; ++m) a_[(size_t)m] = R.zero();
    }

    int64_t row_index() const { return i_; }

    // row i (for the current i), then advances the accumulators
    std::vector<Elem> next_row() {
        Ring& R = *R_;
        const TModule& tm = *tm_;
        const Fq& F = *field_of(R);
        int r = tm.r();
        int d1 = tm.d[0];
        Elem nb; // -[i]
        if (i_ == 0) {
            nb = R.zero();
        } else {
            nb = R.neg(R.bracket((int)i_));
            inv_l_ = R.mul(inv_l_, R.inv(nb)); // L_i = -[i] L_{i-1}
        }
        // powers of -[i] (0^0 = 1 at i = 0) and of 1/L_i
        std::vector<Elem> nbp, ilp;
        nbp.reserve((size_t)d1 + 1);
        ilp.reserve((size_t)d1 + 1);
        nbp.push_back(R.one());
        ilp.push_back(R.one());
        for (int e = 1; e <= d1; ++e) {
            nbp.push_back(R.mul(nbp.back(), nb));
            ilp.push_back(R.mul(ilp.back(), inv_l_));
        }
        std::vector<Elem> row;
        row.reserve((size_t)tm.dim);
        for (int m = 1; m <= r; ++m) {
            int dm = tm.d[(size_t)(m - 1)];
            for (int j = 1; j <= dm; ++j) {
                Elem e = R.mul(nbp[(size_t)(dm - j)], ilp[(size_t)dm]);
                if (m >= 2) {
                    e = R.mul(e, a_[(size_t)(m - 1)]);
                    if ((m - 1) % 2 != 0) e = R.scale(F.neg(F.one()), e);
                }
                row.push_back(e);
            }
        }
        // advance: u_m^(i), then A_m upward (A_{m-1} already at level i)
        if (r >= 2) {
            if (i_ == 0) {
                u_tw_.clear();
                for (int m = 1; m < r; ++m) u_tw_.push_back(R.from_poly(tm.u[(size_t)(m - 1)]));
            } else {
                for (auto& t : u_tw_) t = R.frobenius1(t);
            }
            for (int m = 1; m < r; ++m) {
                int sm = tm.s.parts[(size_t)(m - 1)];
                Elem inc = R.mul(R.mul(a_[(size_t)(m - 1)], u_tw_[(size_t)(m - 1)]), ilp[(size_t)sm]);
                a_[(size_t)m] = R.add(a_[(size_t)m], inc);
            }
        }
        ++i_;
        return row;
    }

private:
    Ring* R_;
    const TModule* tm_;
    int64_t i_ = 0;
    Elem inv_l_;
    std::vector<Elem> a_;
    std::vector<Elem> u_tw_;
};

} // namespace fqmzv
