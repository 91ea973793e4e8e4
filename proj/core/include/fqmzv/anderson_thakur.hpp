#pragma once

#include "fqmzv/bipoly.hpp"
#include "fqmzv/carlitz.hpp"

namespace fqmzv {

// The polynomial family H_n in F_q[theta][t] defined by the generating
// identity
//   (1 - sum_{i>=0} (F_i / D_i|_t) x^{q^i})^{-1}
//     = sum_{n>=0} (H_n / Gamma_{n+1}|_t) x^n,
// with F_0 = 1 and F_i = prod_{j=1..i} (t^{q^i} - theta^{q^j}).  The
// recurrence runs in exact fractions whose denominators live in F_q[t]
// alone; each H_n is asserted polynomial by exact division.
class AndersonThakur {
public:
    explicit AndersonThakur(CarlitzTable& table) : tab_(&table) {}

    const BiPoly& h_poly(int n); // memoized, n >= 0

    // theta-coefficients u_j of H_{s-1} = sum_j u_j t^j, ascending j.
    std::vector<Poly> coeffs(int s);

    // deg_theta(u_j) * (q - 1) < s * q for every coefficient (the
    // convergence margin used by the infinite-place series)
    bool coeff_degree_bound_ok(int s);

    BiPoly f_poly(int i); // F_i

private:
    CarlitzTable* tab_;
    std::vector<BiPoly> h_;

    const Fq& F() const { return tab_->field(); }
};

} // namespace fqmzv
