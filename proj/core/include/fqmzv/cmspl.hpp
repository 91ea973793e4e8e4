#pragma once

#include "fqmzv/tmodule.hpp"

namespace fqmzv {

// Star multiple polylogarithms
//   Li*_s(u) = sum_{i_1 >= ... >= i_r >= 0} u_1^(i_1) ... u_r^(i_r)
//                                           / (L_{i_1}^{s_1} ... L_{i_r}^{s_r})
// evaluated in a completion of F_q(theta).  At a finite place the series
// converges when ord_v(u_1) >= 1 and is continued to integral arguments
// through the logarithm of the associated t-module otherwise.

// Direct series at a finite place; z1 stands in for u_1 (any value with
// ord >= 1, possibly of finite precision), tail = (u_2, ..., u_r) exact.
VAdic cmspl_direct_v(LocalField& K, const IndexComposition& s, const VAdic& z1,
                     const std::vector<Poly>& tail, int64_t prec);

// Continuation data: the t-module of the reversed index and arguments,
// the stabilizing polynomial a(t), and the image of the distinguished
// point under rho_a, all coordinates certified O(v^W) with ord >= 1.
struct Continuation {
    TModule tm;
    Poly a;       // in F_q[t]
    Poly a_theta; // same coefficients read in theta; a unit at v
    std::vector<VAdic> image;
};
Continuation make_continuation(LocalField& K, const IndexComposition& s,
                               const std::vector<Poly>& u, int64_t work_prec);

// Value through the module logarithm: works for any polynomial arguments
VAdic cmspl_continued_v(LocalField& K, const IndexComposition& s, const std::vector<Poly>& u,
                        int64_t prec);

// Dispatch: exact zero if some u_i = 0, direct series if ord_v(u_1) >= 1,
// continuation otherwise
VAdic cmspl_v(LocalField& K, const IndexComposition& s, const std::vector<Poly>& u, int64_t prec);

// Series at the infinite place; requires deg(u_j) (q-1) < s_j q for every
// j (throws math_error naming the offending argument otherwise).
InfAdic cmspl_inf(InfField& K, const IndexComposition& s, const std::vector<Poly>& u,
                  int64_t prec);

// Identity linking the continued value to directly convergent series with
// first arguments drawn from the rho_a image; true if it holds to O(v^prec)
bool functional_equation_check(LocalField& K, const IndexComposition& s,
                               const std::vector<Poly>& u, int64_t prec);

// Product identity in depth 1, for u_1, u_2 divisible by v:
//   Li*_{s1}(u1) Li*_{s2}(u2)
//     = Li*_{(s1,s2)}(u1,u2) + Li*_{(s2,s1)}(u2,u1) - Li*_{s1+s2}(u1 u2)
bool stuffle_depth1_check(LocalField& K, int s1, const Poly& u1, int s2, const Poly& u2,
                          int64_t prec);

} // namespace fqmzv
