#include "fqmzv/bipoly.hpp"

#include <algorithm>

#include "fqmzv/errors.hpp"

namespace fqmzv {

const Poly& BiPoly::coeff_t(int k) const {
    static const Poly zero{};
    if (k < 0 || k >= (int)tc.size()) return zero;
    return tc[(size_t)k];
}

BiPoly bipoly_zero() { return {}; }

BiPoly bipoly_from_theta(const Poly& p) {
    BiPoly r;
    if (!p.is_zero()) r.tc = {p};
    return r;
}

BiPoly bipoly_from_t(const Fq& F, const Poly& p) {
    BiPoly r;
    r.tc.resize(p.c.size());
    for (size_t k = 0; k < p.c.size(); ++k) r.tc[k] = poly_const(F, p.c[k]);
    r.normalize();
    return r;
}

BiPoly bipoly_add(const Fq& F, const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    r.tc.resize(std::max(a.tc.size(), b.tc.size()));
    for (size_t k = 0; k < r.tc.size(); ++k)
        r.tc[k] = poly_add(F, a.coeff_t((int)k), b.coeff_t((int)k));
    r.normalize();
    return r;
}

BiPoly bipoly_sub(const Fq& F, const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    r.tc.resize(std::max(a.tc.size(), b.tc.size()));
    for (size_t k = 0; k < r.tc.size(); ++k)
        r.tc[k] = poly_sub(F, a.coeff_t((int)k), b.coeff_t((int)k));
    r.normalize();
    return r;
}

BiPoly bipoly_neg(const Fq& F, const BiPoly& a) {
    BiPoly r = a;
    for (auto& p : r.tc) p = poly_neg(F, p);
    return r;
}

BiPoly bipoly_mul(const Fq& F, const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BiPoly r;
    r.tc.assign(a.tc.size() + b.tc.size() - 1, Poly{});
    for (size_t i = 0; i < a.tc.size(); ++i) {
        if (a.tc[i].is_zero()) continue;
        for (size_t j = 0; j < b.tc.size(); ++j) {
            if (b.tc[j].is_zero()) continue;
            r.tc[i + j] = poly_add(F, r.tc[i + j], poly_mul(F, a.tc[i], b.tc[j]));
        }
    }
    r.normalize();
    return r;
}

BiPoly bipoly_scale_theta(const Fq& F, const Poly& s, const BiPoly& a) {
    BiPoly r = a;
    for (auto& p : r.tc) p = poly_mul(F, s, p);
    r.normalize();
    return r;
}

BiPoly bipoly_div_exact_t(const Fq& F, const BiPoly& a, const Poly& d_t) {
    if (a.is_zero()) return {};
    // flip to theta-major: row j collects the t-coefficients of theta^j
    int dth = a.deg_theta();
    std::vector<Poly> rows((size_t)dth + 1);
    for (int j = 0; j <= dth; ++j) {
        std::vector<FqElem> cs(a.tc.size());
        for (size_t k = 0; k < a.tc.size(); ++k) cs[k] = a.tc[k].coeff(j);
        rows[(size_t)j] = poly_from_coeffs(F, std::move(cs));
    }
    for (auto& row : rows) row = poly_div_exact(F, row, d_t);
    // flip back
    BiPoly r;
    int dt = -1;
    for (const auto& row : rows) dt = std::max(dt, row.deg());
    r.tc.resize((size_t)dt + 1);
    for (int k = 0; k <= dt; ++k) {
        std::vector<FqElem> cs((size_t)dth + 1);
        for (int j = 0; j <= dth; ++j) cs[(size_t)j] = rows[(size_t)j].coeff(k);
        r.tc[(size_t)k] = poly_from_coeffs(F, std::move(cs));
    }
    r.normalize();
    return r;
}

Poly bipoly_eval_t(const Fq& F, const BiPoly& a, const Poly& t_value) {
    Poly acc = poly_zero();
    for (int k = a.deg_t(); k >= 0; --k)
        acc = poly_add(F, poly_mul(F, acc, t_value), a.coeff_t(k));
    return acc;
}

} // namespace fqmzv
