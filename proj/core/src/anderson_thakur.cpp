#include "fqmzv/anderson_thakur.hpp"

#include "fqmzv/errors.hpp"

#include <cstdint>

namespace fqmzv {

BiPoly AndersonThakur::f_poly(int i) {
    const Fq& F = this->F();
    if (i < 0) throw std::invalid_argument("f_poly: negative index");
    BiPoly out = bipoly_from_theta(poly_one(F));
    if (i == 0) return out;
    int64_t qi = 1;
    for (int j = 0; j < i; ++j) qi *= F.q();
    // t^{q^i} as a bipoly, reused for every factor
    BiPoly t_pow = bipoly_from_t(F, poly_shift(poly_one(F), (int)qi));
    int64_t qj = 1;
    for (int j = 1; j <= i; ++j) {
        qj *= F.q();
        BiPoly factor = bipoly_sub(F, t_pow, bipoly_from_theta(poly_shift(poly_one(F), (int)qj)));
        out = bipoly_mul(F, out, factor);
    }
    return out;
}

const BiPoly& AndersonThakur::h_poly(int n) {
    if (n < 0) throw std::invalid_argument("h_poly: negative index");
    const Fq& F = this->F();
    if (h_.empty()) h_.push_back(bipoly_from_theta(poly_one(F))); // H_0 = 1
    while ((int)h_.size() <= n) {
        int m = (int)h_.size();
        // powers q^i <= m
        std::vector<int64_t> qpows;
        for (int64_t qi = 1; qi <= m; qi *= F.q()) qpows.push_back(qi);
        // H_m = Gamma_{m+1}|_t * sum_i F_i H_{m-q^i} / (D_i|_t Gamma_{m-q^i+1}|_t).
        // Clear denominators: with P = prod_i den_i,
        //   H_m = Gamma_{m+1}|_t * (sum_i num_i * P/den_i) / P  (exact in t).
        std::vector<BiPoly> nums;
        std::vector<Poly> dens;
        for (size_t idx = 0; idx < qpows.size(); ++idx) {
            int i = (int)idx;         // qpows[idx] = q^i
            int64_t qi = qpows[idx];
            nums.push_back(bipoly_mul(F, f_poly(i), h_[(size_t)(m - qi)]));
            // theta-polynomials reread in t: same coefficient vector
            Poly den = poly_mul(F, tab_->d_factor(i), tab_->carlitz_gamma(m - qi + 1));
            dens.push_back(den);
        }
        Poly p_all = poly_one(F);
        for (const Poly& d : dens) p_all = poly_mul(F, p_all, d);
        BiPoly acc = bipoly_zero();
        for (size_t idx = 0; idx < nums.size(); ++idx) {
            Poly cof = poly_div_exact(F, p_all, dens[idx]);
            acc = bipoly_add(F, acc, bipoly_mul(F, nums[idx], bipoly_from_t(F, cof)));
        }
        acc = bipoly_mul(F, acc, bipoly_from_t(F, tab_->carlitz_gamma(m + 1)));
        // division must be exact: H_m is a polynomial
        h_.push_back(bipoly_div_exact_t(F, acc, p_all));
    }
    return h_[(size_t)n];
}

std::vector<Poly> AndersonThakur::coeffs(int s) {
    if (s < 1) throw std::invalid_argument("coeffs: weight must be positive");
    const BiPoly& h = h_poly(s - 1);
    std::vector<Poly> out;
    int dt = h.deg_t();
    for (int j = 0; j <= dt; ++j) out.push_back(h.coeff_t(j));
    if (out.empty()) out.push_back(poly_zero());
    return out;
}

bool AndersonThakur::coeff_degree_bound_ok(int s) {
    const Fq& F = this->F();
    std::vector<Poly> cs = coeffs(s);
    for (const Poly& c : cs) {
        if (c.deg() < 0) continue;
        if ((int64_t)c.deg() * (F.q() - 1) >= (int64_t)s * F.q()) return false;
    }
    return true;
}

} // namespace fqmzv
