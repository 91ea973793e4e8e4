#include "fqmzv/cmspl.hpp"

#include "fqmzv/errors.hpp"

#include <algorithm>
#include <string>

namespace fqmzv {

namespace {

struct TruncPlan {
    int64_t last_row;
    int64_t work_prec;
};

// Term i of a v-adic star series carries ord >= c q^i - loss floor(i/eps).
// Finds the smallest I such that every later term is O(v^N), together
// with a working precision that keeps rows 0..I certified to N.
TruncPlan plan_vadic(int64_t c, int64_t loss, int64_t q, int eps, int64_t N, int64_t extra) {
    if (c < 1) throw math_error("plan_vadic: leading argument not in the maximal ideal");
    int64_t last = -1;
    __int128 qi = 1;
    for (int64_t i = 1; i <= 4096; ++i) {
        if (qi > (__int128(1) << 100)) {
            last = i - 1;
            break;
        }
        qi *= q;
        __int128 tail_ord = (__int128)c * qi - (__int128)loss * (i / eps);
        bool monotone = (__int128)c * qi * (q - 1) >= loss;
        if (tail_ord >= N && monotone) {
            last = i - 1;
            break;
        }
    }
    if (last < 0) throw math_error("plan_vadic: no admissible truncation index");
    int64_t alpha = last / eps;
    int64_t alpha_up = (last + eps - 1) / eps;
    TruncPlan out;
    out.last_row = last;
    out.work_prec = N + loss * alpha + loss * alpha_up + 8 + extra;
    if (out.work_prec > kMaxWorkPrec)
        throw math_error("plan_vadic: working precision out of range");
    return out;
}

// sum over i = 0..last_row of z1^(i) / L_i^{s_1} * E_2(i), where
//   E_r(i) = E_r(i-1) + u_r^(i) / L_i^{s_r},
//   E_j(i) = E_j(i-1) + u_j^(i) / L_i^{s_j} * E_{j+1}(i)   (j = r..2).
template <class Ring>
typename Ring::Elem star_series(Ring& R, const IndexComposition& s,
                                const typename Ring::Elem& z1,
                                const std::vector<typename Ring::Elem>& tail,
                                int64_t last_row) {
    using Elem = typename Ring::Elem;
    int r = s.depth();
    int smax = *std::max_element(s.parts.begin(), s.parts.end());
    Elem total = R.zero();
    Elem inv_l = R.one();
    Elem z1tw = z1;
    std::vector<Elem> utw = tail;
    std::vector<Elem> e((size_t)r + 2, R.zero()); // e[j] = E_j, j = 2..r
    for (int64_t i = 0; i <= last_row; ++i) {
        if (i > 0) {
            z1tw = R.frobenius1(z1tw);
            for (Elem& t : utw) t = R.frobenius1(t);
            inv_l = R.mul(inv_l, R.inv(R.neg(R.bracket((int)i))));
        }
        std::vector<Elem> ilp;
        ilp.reserve((size_t)smax + 1);
        ilp.push_back(R.one());
        for (int k = 1; k <= smax; ++k) ilp.push_back(R.mul(ilp.back(), inv_l));
        for (int j = r; j >= 2; --j) {
            Elem inc = R.mul(utw[(size_t)(j - 2)], ilp[(size_t)s.parts[(size_t)(j - 1)]]);
            if (j < r) inc = R.mul(inc, e[(size_t)(j + 1)]);
            e[(size_t)j] = R.add(e[(size_t)j], inc);
        }
        Elem term = R.mul(z1tw, ilp[(size_t)s.parts[0]]);
        if (r >= 2) term = R.mul(term, e[2]);
        total = R.add(total, term);
    }
    return total;
}

bool coord_ord_at_least_one(const VAdic& x) {
    if (x.is_exact_zero()) return true;
    if (x.is_zero_to_prec()) return x.prec >= 1;
    return x.ord() >= 1;
}

} // namespace

VAdic cmspl_direct_v(LocalField& K, const IndexComposition& s, const VAdic& z1,
                     const std::vector<Poly>& tail, int64_t prec) {
    const Fq& F = K.field();
    int r = s.depth();
    if (r < 1) throw std::invalid_argument("cmspl_direct_v: empty index");
    if ((int)tail.size() != r - 1)
        throw std::invalid_argument("cmspl_direct_v: tail length does not match index depth");
    if (prec < 1) throw std::invalid_argument("cmspl_direct_v: precision must be positive");
    if (z1.is_exact_zero()) return K.exact_zero();
    for (const Poly& t : tail)
        if (t.deg() < 0) return K.exact_zero();
    int64_t c1 = z1.is_zero_to_prec() ? z1.prec : z1.ord();
    if (c1 < 1) throw math_error("cmspl_direct_v: first argument not in the maximal ideal");
    int64_t wt = s.weight();
    int64_t extra = 0;
    for (int attempt = 0; attempt < 4; ++attempt) {
        TruncPlan pl = plan_vadic(c1, wt, F.q(), K.place().eps, prec, extra);
        VadicRing R{&K, pl.work_prec};
        VAdic z1w = K.clamp(z1, pl.work_prec);
        std::vector<VAdic> utw;
        utw.reserve(tail.size());
        for (const Poly& t : tail) utw.push_back(R.from_poly(t));
        VAdic total = star_series(R, s, z1w, utw, pl.last_row);
        // rows past last_row were only shown to be O(v^prec); the working
        // precision of the partial sum claims more digits than that
        if (total.prec >= prec) return K.clamp(total, prec);
        if (z1.prec < pl.work_prec)
            throw math_error("cmspl_direct_v: first argument carries too few digits");
        extra = extra ? extra * 2 : 16;
    }
    throw math_error("cmspl_direct_v: precision did not stabilize");
}

Continuation make_continuation(LocalField& K, const IndexComposition& s,
                               const std::vector<Poly>& u, int64_t work_prec) {
    const Fq& F = K.field();
    Continuation C;
    IndexComposition srev = s.reversed();
    std::vector<Poly> urev(u.rbegin(), u.rend());
    C.tm = build_tmodule(F, srev, urev);
    C.a = continuation_poly(F, C.tm, K.place());
    C.a_theta = C.a; // F_q[t] and F_q[theta] share the coefficient vector
    if (ord_exact(F, C.a_theta, K.place()) != 0)
        throw math_error("make_continuation: stabilizing polynomial is not a unit at v");
    VadicRing R{&K, work_prec};
    std::vector<VAdic> z0;
    for (const Poly& p : special_point(F, C.tm)) z0.push_back(R.from_poly(p));
    C.image = apply_rho_poly(R, C.tm, C.a, z0);
    for (const VAdic& x : C.image)
        if (!coord_ord_at_least_one(x))
            throw math_error("make_continuation: image coordinate escapes the maximal ideal");
    return C;
}

VAdic cmspl_continued_v(LocalField& K, const IndexComposition& s, const std::vector<Poly>& u,
                        int64_t prec) {
    const Fq& F = K.field();
    int r = s.depth();
    if (r < 1) throw std::invalid_argument("cmspl_continued_v: empty index");
    if ((int)u.size() != r)
        throw std::invalid_argument("cmspl_continued_v: argument count does not match depth");
    if (prec < 1) throw std::invalid_argument("cmspl_continued_v: precision must be positive");
    for (const Poly& p : u)
        if (p.deg() < 0) return K.exact_zero();
    int64_t wt = s.weight();
    int64_t extra = 0;
    int64_t w = prec + 8;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Continuation C = make_continuation(K, s, u, w);
        int64_t c = kExactPrec;
        for (const VAdic& x : C.image) {
            if (x.is_exact_zero()) continue;
            c = std::min(c, x.is_zero_to_prec() ? x.prec : x.ord());
        }
        if (c >= kExactPrec) return K.exact_zero();
        TruncPlan pl = plan_vadic(c, wt, F.q(), K.place().eps, prec, extra);
        if (pl.work_prec > w) {
            w = pl.work_prec;
            continue;
        }
        VadicRing R{&K, w};
        LogRowStream<VadicRing> rows(R, C.tm);
        std::vector<VAdic> x = C.image;
        VAdic total = K.exact_zero();
        for (int64_t i = 0; i <= pl.last_row; ++i) {
            std::vector<VAdic> row = rows.next_row();
            if (i > 0)
                for (VAdic& xk : x) xk = R.frobenius1(xk);
            for (size_t k = 0; k < x.size(); ++k) total = K.add(total, K.mul(row[k], x[k]));
        }
        if (total.prec >= prec) {
            VAdic res = total;
            if ((r - 1) % 2 != 0) res = K.neg(res);
            res = K.div(res, K.from_poly(C.a_theta, w));
            if (res.prec >= prec) return K.clamp(res, prec); // tail bound only covers prec
        }
        extra = extra ? extra * 2 : 16;
    }
    throw math_error("cmspl_continued_v: precision did not stabilize");
}

VAdic cmspl_v(LocalField& K, const IndexComposition& s, const std::vector<Poly>& u,
              int64_t prec) {
    const Fq& F = K.field();
    int r = s.depth();
    if (r < 1) throw std::invalid_argument("cmspl_v: empty index");
    if ((int)u.size() != r)
        throw std::invalid_argument("cmspl_v: argument count does not match depth");
    for (const Poly& p : u)
        if (p.deg() < 0) return K.exact_zero();
    if (ord_exact(F, u[0], K.place()) >= 1) {
        VAdic z1 = K.from_poly(u[0], kExactPrec - 1);
        return cmspl_direct_v(K, s, z1, std::vector<Poly>(u.begin() + 1, u.end()), prec);
    }
    return cmspl_continued_v(K, s, u, prec);
}

InfAdic cmspl_inf(InfField& K, const IndexComposition& s, const std::vector<Poly>& u,
                  int64_t prec) {
    const Fq& F = K.field();
    int r = s.depth();
    if (r < 1) throw std::invalid_argument("cmspl_inf: empty index");
    if ((int)u.size() != r)
        throw std::invalid_argument("cmspl_inf: argument count does not match depth");
    if (prec < 1) throw std::invalid_argument("cmspl_inf: precision must be positive");
    for (const Poly& p : u)
        if (p.deg() < 0) return K.exact_zero();
    int64_t q = F.q();
    for (int j = 1; j <= r; ++j) {
        if ((int64_t)u[(size_t)(j - 1)].deg() * (q - 1) >= (int64_t)s.parts[(size_t)(j - 1)] * q)
            throw math_error("cmspl_inf: series diverges at argument " + std::to_string(j));
    }
    // ord_inf of term i is at least s_1 deg L_i - q^i deg u_1 minus the
    // degree room the tail accumulators can contribute
    int64_t cap2 = 0;
    for (int j = 2; j <= r; ++j) cap2 += std::max(0, u[(size_t)(j - 1)].deg());
    int64_t last = -2;
    {
        __int128 qi = 1; // q^i
        int64_t d1 = u[0].deg();
        for (int64_t i = 0; i <= 4096 && qi < (__int128(1) << 100); ++i) {
            __int128 deg_l = (qi * q - q) / (q - 1); // deg L_i = q + ... + q^i
            __int128 f1 = (__int128)s.parts[0] * deg_l - qi * d1;
            if (f1 - cap2 >= prec) {
                last = i - 1;
                break;
            }
            qi *= q;
        }
    }
    if (last == -2) throw math_error("cmspl_inf: no admissible truncation index");
    if (last < 0) return K.zero_to_prec(prec);
    int64_t extra = 0;
    for (int attempt = 0; attempt < 4; ++attempt) {
        int64_t w = prec + 8 + cap2 + extra;
        if (w > kMaxWorkPrec) throw math_error("cmspl_inf: working precision out of range");
        InfRing R{&K, w};
        std::vector<InfAdic> utw;
        for (int j = 2; j <= r; ++j) utw.push_back(R.from_poly(u[(size_t)(j - 1)]));
        InfAdic total = star_series(R, s, R.from_poly(u[0]), utw, last);
        if (total.prec >= prec) return K.clamp(total, prec); // see cmspl_direct_v
        extra = extra ? extra * 2 : 16;
    }
    throw math_error("cmspl_inf: precision did not stabilize");
}

bool functional_equation_check(LocalField& K, const IndexComposition& s,
                               const std::vector<Poly>& u, int64_t prec) {
    const Fq& F = K.field();
    int r = s.depth();
    if (r < 1 || (int)u.size() != r)
        throw std::invalid_argument("functional_equation_check: bad index or arguments");
    if (prec < 1) throw std::invalid_argument("functional_equation_check: bad precision");
    int64_t wt = s.weight();
    // continuation image computed with enough digits that every direct
    // series downstream is never starved by its first argument
    TruncPlan worst = plan_vadic(1, wt, F.q(), K.place().eps, prec, 0);
    int64_t wv = worst.work_prec + 8;
    Continuation C = make_continuation(K, s, u, wv);
    VAdic lhs = cmspl_continued_v(K, s, u, prec);
    VAdic total = K.exact_zero();
    for (int m = 1; m <= r; ++m) {
        int dm = C.tm.d[(size_t)(m - 1)];
        for (int j = 0; j <= dm - 1; ++j) {
            for (int l = 0; l <= j; ++l) {
                FqElem binc = binomial_mod_p(F, j, l);
                if (F.is_zero(binc)) continue;
                const VAdic& vcoord = C.image[(size_t)(C.tm.top(m) + (dm - j) - 1)];
                VAdic z1 = K.mul_poly(vcoord, poly_shift(poly_one(F), j - l));
                IndexComposition idx1 = s.collapsed(r + 1 - m);
                std::vector<Poly> tail1(u.begin() + (r + 1 - m), u.end());
                VAdic term = cmspl_direct_v(K, idx1, z1, tail1, prec);
                if (m >= 2) {
                    IndexComposition idx2 = s.collapsed(r + 2 - m);
                    std::vector<Poly> tail2(u.begin() + (r + 2 - m), u.end());
                    VAdic z2 = K.mul_poly(z1, u[(size_t)(r + 1 - m)]);
                    term = K.sub(term, cmspl_direct_v(K, idx2, z2, tail2, prec));
                }
                term = K.mul_poly(term, poly_shift(poly_one(F), l));
                term = K.scale(binc, term);
                if ((j + l + m - 1) % 2 != 0) term = K.neg(term);
                total = K.add(total, term);
            }
        }
    }
    if ((r - 1) % 2 != 0) total = K.neg(total);
    VAdic rhs = K.div(total, K.from_poly(C.a_theta, wv));
    VAdic diff = K.sub(lhs, rhs);
    return diff.is_zero_to_prec() && diff.prec >= prec;
}

bool stuffle_depth1_check(LocalField& K, int s1, const Poly& u1, int s2, const Poly& u2,
                          int64_t prec) {
    const Fq& F = K.field();
    if (u1.deg() < 0 || u2.deg() < 0) return true; // all terms vanish
    if (ord_exact(F, u1, K.place()) < 1 || ord_exact(F, u2, K.place()) < 1)
        throw std::invalid_argument("stuffle_depth1_check: arguments must be divisible by v");
    // the factors can have negative valuation, which eats absolute precision
    // in the product; probe the orders first, then recompute with headroom
    VAdic a = cmspl_v(K, {{s1}}, {u1}, prec);
    VAdic b = cmspl_v(K, {{s2}}, {u2}, prec);
    int64_t lift = 0;
    if (!a.is_zero_to_prec()) lift += std::max<int64_t>(0, -a.ord());
    if (!b.is_zero_to_prec()) lift += std::max<int64_t>(0, -b.ord());
    if (lift > 0) {
        a = cmspl_v(K, {{s1}}, {u1}, prec + lift);
        b = cmspl_v(K, {{s2}}, {u2}, prec + lift);
    }
    VAdic lhs = K.mul(a, b);
    VAdic r1 = cmspl_v(K, {{s1, s2}}, {u1, u2}, prec);
    VAdic r2 = cmspl_v(K, {{s2, s1}}, {u2, u1}, prec);
    VAdic r3 = cmspl_v(K, {{s1 + s2}}, {poly_mul(F, u1, u2)}, prec);
    VAdic rhs = K.sub(K.add(r1, r2), r3);
    VAdic diff = K.sub(lhs, rhs);
    return diff.is_zero_to_prec() && diff.prec >= prec;
}

} // namespace fqmzv
