#pragma once

#include <vector>

#include "fqmzv/poly.hpp"

namespace fqmzv {

// Polynomial in the operator variable t whose coefficients live in
// F_q[theta].  Stored t-major: tc[k] is the theta-polynomial coefficient
// of t^k, with no trailing zero coefficients.
struct BiPoly {
    std::vector<Poly> tc;

    int deg_t() const { return (int)tc.size() - 1; }
    int deg_theta() const {
        int d = -1;
        for (const auto& p : tc) d = p.deg() > d ? p.deg() : d;
        return d;
    }
    bool is_zero() const { return tc.empty(); }
    const Poly& coeff_t(int k) const;
    void normalize() {
        while (!tc.empty() && tc.back().is_zero()) tc.pop_back();
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.tc == b.tc; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a.tc == b.tc); }
};

BiPoly bipoly_zero();
BiPoly bipoly_from_theta(const Poly& p);           // t-degree 0
BiPoly bipoly_from_t(const Fq& F, const Poly& p);  // coefficients become constants
BiPoly bipoly_add(const Fq& F, const BiPoly& a, const BiPoly& b);
BiPoly bipoly_sub(const Fq& F, const BiPoly& a, const BiPoly& b);
BiPoly bipoly_neg(const Fq& F, const BiPoly& a);
BiPoly bipoly_mul(const Fq& F, const BiPoly& a, const BiPoly& b);
BiPoly bipoly_scale_theta(const Fq& F, const Poly& s, const BiPoly& a);

// Exact division by a polynomial in t alone (every theta-major
// coefficient must be divisible); throws math_error otherwise.
BiPoly bipoly_div_exact_t(const Fq& F, const BiPoly& a, const Poly& d_t);

// Substitute a value for t, collapsing to a theta-polynomial.
Poly bipoly_eval_t(const Fq& F, const BiPoly& a, const Poly& t_value);

} // namespace fqmzv
