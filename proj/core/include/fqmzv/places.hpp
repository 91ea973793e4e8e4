#pragma once

#include <cstdint>
#include <vector>

#include "fqmzv/poly.hpp"
#include "fqmzv/rational.hpp"

namespace fqmzv {

// A finite place of F_q(theta): a monic irreducible polynomial v with
// its degree eps and residue field size q_v = q^eps.
struct Place {
    Poly v;
    int eps = 0;
    int64_t qv = 0;

    friend bool operator==(const Place& a, const Place& b) { return a.v == b.v; }
    friend bool operator!=(const Place& a, const Place& b) { return !(a.v == b.v); }
};

// Deterministic irreducibility test (Rabin): x^{q^n} = x mod f together
// with gcd(x^{q^{n/l}} - x, f) = 1 for every prime l | n.
bool is_irreducible(const Fq& F, const Poly& f);

Place make_place(const Fq& F, const Poly& v); // validates monic + irreducible

// All places of degree <= max_deg, sorted by degree then by the base-q
// coefficient key (poly_order_cmp).
std::vector<Place> enumerate_places(const Fq& F, int max_deg);

// Exact valuation by trial division.  ord of zero is an error.
int64_t ord_exact(const Fq& F, const Poly& a, const Place& v);
int64_t ord_exact(const Fq& F, const Rational& a, const Place& v);

} // namespace fqmzv
