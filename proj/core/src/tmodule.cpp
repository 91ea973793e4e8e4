#include "fqmzv/tmodule.hpp"

#include "fqmzv/errors.hpp"

namespace fqmzv {

TModule build_tmodule(const Fq& F, const IndexComposition& s, const std::vector<Poly>& u) {
    (void)F;
    if (s.parts.empty()) throw std::invalid_argument("build_tmodule: empty index");
    for (int p : s.parts)
        if (p < 1) throw std::invalid_argument("build_tmodule: index entries must be positive");
    if (u.size() != s.parts.size())
        throw std::invalid_argument("build_tmodule: argument count does not match index depth");
    TModule tm;
    tm.s = s;
    tm.u = u;
    int r = (int)s.parts.size();
    tm.d.resize((size_t)r);
    int tail = 0;
    for (int l = r; l >= 1; --l) {
        tail += s.parts[(size_t)(l - 1)];
        tm.d[(size_t)(l - 1)] = tail;
    }
    tm.start.resize((size_t)r);
    int off = 0;
    for (int l = 1; l <= r; ++l) {
        tm.start[(size_t)(l - 1)] = off;
        off += tm.d[(size_t)(l - 1)];
    }
    tm.dim = off;
    return tm;
}

Poly tmodule_corner(const Fq& F, const TModule& tm, int l, int m) {
    if (l < 1 || m < l || m > tm.r()) throw std::invalid_argument("tmodule_corner: bad block pair");
    if (l == m) return poly_one(F);
    Poly p = poly_one(F);
    for (int e = l; e <= m - 1; ++e) p = poly_mul(F, p, tm.u[(size_t)(e - 1)]);
    if ((m - l) % 2 != 0) p = poly_neg(F, p);
    return p;
}

std::vector<Poly> special_point(const Fq& F, const TModule& tm) {
    std::vector<Poly> z((size_t)tm.dim, poly_zero());
    int r = tm.r();
    for (int m = 1; m <= r; ++m) {
        Poly p = poly_one(F);
        for (int e = m; e <= r; ++e) p = poly_mul(F, p, tm.u[(size_t)(e - 1)]);
        if ((r - m) % 2 != 0) p = poly_neg(F, p);
        z[(size_t)tm.bottom(m)] = p;
    }
    return z;
}

int continuation_period(const Fq& F, const TModule& tm, const Place& v) {
    for (int l = 1; l <= v.eps; ++l) {
        if (v.eps % l != 0) continue;
        int64_t ql = 1;
        for (int j = 0; j < l; ++j) ql *= F.q();
        bool all_fixed = true;
        for (const Poly& ui : tm.u) {
            Poly ubar = poly_mod(F, ui, v.v);
            if (!(poly_powmod(F, ubar, ql, v.v) == ubar)) {
                all_fixed = false;
                break;
            }
        }
        if (all_fixed) return l;
    }
    throw math_error("continuation_period: residue Frobenius fixes nothing (unreachable)");
}

Poly continuation_poly(const Fq& F, const TModule& tm, const Place& v) {
    int l0 = continuation_period(F, tm, v);
    Poly a = poly_one(F);
    for (int l = 1; l <= tm.r(); ++l) {
        Poly f = poly_sub(F, poly_pow(F, v.v, (int64_t)tm.d[(size_t)(l - 1)] * l0), poly_one(F));
        a = poly_mul(F, a, f);
    }
    return a; // read in t: same coefficient vector
}

InfRing::Elem InfRing::bracket(int i) const {
    const Fq& F = K->field();
    if (i == 0) return K->exact_zero();
    int64_t qi = 1;
    for (int j = 0; j < i; ++j) {
        qi *= F.q();
        if (qi > (int64_t(1) << 22)) throw math_error("InfRing::bracket: exponent too large");
    }
    // theta^{q^i} - theta: digit 1 at theta^{q^i}, -1 at theta^1
    std::vector<FqElem> raw((size_t)qi, F.zero());
    raw[0] = F.one();
    raw[(size_t)(qi - 1)] = F.neg(F.one());
    return K->make(-qi, std::move(raw), W);
}

namespace {

using Mat = std::vector<std::vector<Rational>>;

Mat mat_zero(const Fq& F, int n) {
    return Mat((size_t)n, std::vector<Rational>((size_t)n, rat_from_poly(F, poly_zero())));
}

// block membership helpers for the structural N shifts
struct BlockMap {
    std::vector<int> block_of;   // 1-based block id per flat row
    std::vector<bool> is_bottom; // last row of its block
    std::vector<bool> is_top;    // first row of its block
};

BlockMap block_map(const TModule& tm) {
    BlockMap bm;
    bm.block_of.assign((size_t)tm.dim, 0);
    bm.is_bottom.assign((size_t)tm.dim, false);
    bm.is_top.assign((size_t)tm.dim, false);
    for (int l = 1; l <= tm.r(); ++l) {
        for (int j = 0; j < tm.d[(size_t)(l - 1)]; ++j) bm.block_of[(size_t)(tm.top(l) + j)] = l;
        bm.is_top[(size_t)tm.top(l)] = true;
        bm.is_bottom[(size_t)tm.bottom(l)] = true;
    }
    return bm;
}

// ad_N X = N X - X N without forming N
Mat ad_n(const Fq& F, const TModule& tm, const BlockMap& bm, const Mat& x) {
    int n = tm.dim;
    Mat y = mat_zero(F, n);
    for (int r0 = 0; r0 < n; ++r0)
        for (int c = 0; c < n; ++c) {
            Rational acc = rat_from_poly(F, poly_zero());
            if (!bm.is_bottom[(size_t)r0]) acc = x[(size_t)(r0 + 1)][(size_t)c]; // (N X)_{rc}
            if (!bm.is_top[(size_t)c])
                acc = rat_sub(F, acc, x[(size_t)r0][(size_t)(c - 1)]); // (X N)_{rc}
            y[(size_t)r0][(size_t)c] = acc;
        }
    return y;
}

} // namespace

std::vector<std::vector<Rational>> log_matrix_oracle(CarlitzTable& tab, const TModule& tm, int i) {
    const Fq& F = tab.field();
    if (i < 0) throw std::invalid_argument("log_matrix_oracle: negative index");
    if ((int64_t)i * tm.dim > 64) throw math_error("log_matrix_oracle: cost budget exceeded");
    int n = tm.dim;
    Mat p = mat_zero(F, n);
    for (int k = 0; k < n; ++k) p[(size_t)k][(size_t)k] = rat_from_poly(F, poly_one(F));
    // E with entries raised to the q^step power, maintained incrementally
    Mat e = mat_zero(F, n);
    for (int l = 1; l <= tm.r(); ++l)
        for (int m = l; m <= tm.r(); ++m)
            e[(size_t)tm.bottom(l)][(size_t)tm.top(m)] =
                rat_from_poly(F, tmodule_corner(F, tm, l, m));
    BlockMap bm = block_map(tm);
    for (int step = 0; step < i; ++step) {
        // X = P_step * E^(step)
        Mat x = mat_zero(F, n);
        for (int r0 = 0; r0 < n; ++r0)
            for (int k = 0; k < n; ++k) {
                if (p[(size_t)r0][(size_t)k].num.deg() < 0) continue;
                for (int c = 0; c < n; ++c) {
                    if (e[(size_t)k][(size_t)c].num.deg() < 0) continue;
                    x[(size_t)r0][(size_t)c] =
                        rat_add(F, x[(size_t)r0][(size_t)c],
                                rat_mul(F, p[(size_t)r0][(size_t)k], e[(size_t)k][(size_t)c]));
                }
            }
        Rational inv_br = rat_inv(F, rat_from_poly(F, tab.bracket(step + 1)));
        Mat next = mat_zero(F, n);
        Rational coef = rat_neg(F, inv_br); // -1/[i+1]^{j+1}, j = 0
        int d1 = tm.d[0];
        for (int j = 0; j <= 2 * d1 - 2; ++j) {
            if (j > 0) {
                x = ad_n(F, tm, bm, x);
                coef = rat_mul(F, coef, inv_br);
            }
            for (int r0 = 0; r0 < n; ++r0)
                for (int c = 0; c < n; ++c) {
                    if (x[(size_t)r0][(size_t)c].num.deg() < 0) continue;
                    next[(size_t)r0][(size_t)c] =
                        rat_add(F, next[(size_t)r0][(size_t)c],
                                rat_mul(F, coef, x[(size_t)r0][(size_t)c]));
                }
        }
        p = std::move(next);
        // E^(step+1)
        for (int r0 = 0; r0 < n; ++r0)
            for (int c = 0; c < n; ++c) {
                Rational& ent = e[(size_t)r0][(size_t)c];
                if (ent.num.deg() < 0) continue;
                ent = rat_make(F, poly_pow(F, ent.num, F.q()), poly_pow(F, ent.den, F.q()));
            }
    }
    return p;
}

} // namespace fqmzv
