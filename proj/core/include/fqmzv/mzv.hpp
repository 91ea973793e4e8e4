#pragma once

#include "fqmzv/anderson_thakur.hpp"
#include "fqmzv/cmspl.hpp"

#include <map>
#include <string>

namespace fqmzv {

// One summand of the reduction of zeta(s) to star polylogarithms: an
// exact coefficient, a collapsed index and an argument point.
struct MzvTriple {
    Poly b;                  // (-1)^{r-1} theta^{j_1 + ... + j_r}
    IndexComposition index;  // parts merged according to the word
    std::vector<Poly> point; // matching products of the H-coefficients
};

// All triples for s.  Enumeration order: digit tuples j ascending
// lexicographically with the first coordinate most significant, then
// merge words by ascending binary value, first gap most significant
// (bit 0 = keep the comma, 1 = merge the neighbours).
std::vector<MzvTriple> decompose_index(const Fq& F, AndersonThakur& at,
                                       const IndexComposition& s);

struct ZetaVResult {
    VAdic value;
    Rat64 bound;          // certified lower bound for ord_v
    bool criterion;       // q_v >= weight, which forces integrality
    std::string integral; // "true" / "false" / "unknown"
};

// Per-thread evaluation context: the memoized tables plus a cache of
// star-polylog values keyed by (place, index, point).
class Evaluator {
public:
    explicit Evaluator(const Fq& F, int64_t degree_budget = int64_t(1) << 21)
        : F_(&F), tab_(F, degree_budget), at_(tab_) {}

    const Fq& field() const { return *F_; }
    CarlitzTable& table() { return tab_; }
    AndersonThakur& at() { return at_; }

    // dispatching star polylogarithm with value reuse across calls
    VAdic li_star(LocalField& K, const IndexComposition& s, const std::vector<Poly>& u,
                  int64_t prec);

    ZetaVResult zeta_v(LocalField& K, const IndexComposition& s, int64_t prec);

    InfAdic zeta_inf_cmspl(InfField& K, const IndexComposition& s, int64_t prec);

private:
    const Fq* F_;
    CarlitzTable tab_;
    AndersonThakur at_;
    std::map<std::string, VAdic> cache_;
};

// zeta(s) at the infinite place by summing over tuples of monic
// polynomials with strictly decreasing degrees (the defining series)
InfAdic zeta_inf_series(InfField& K, const IndexComposition& s, int64_t prec);

// zeta(s) mod v: sum over monic tuples deg v > deg a_1 > ... > deg a_r >= 0
// of the inverse-power products in the residue field.  Two independent
// enumeration strategies (degree-layered dynamic programming vs direct
// lexicographic recursion) for cross-checking.
Poly finite_zeta(const Fq& F, const Place& v, const IndexComposition& s);
Poly finite_zeta_direct(const Fq& F, const Place& v, const IndexComposition& s);

struct ScanRow {
    Place v;
    bool ok = false;
    std::string message; // error text when not ok
    ZetaVResult res;     // valid when ok
};

// zeta(s) across every place of degree <= max_deg, optionally on several
// threads (each worker owns its tables and caches)
std::vector<ScanRow> adelic_scan(const Fq& F, const IndexComposition& s, int max_deg,
                                 int64_t prec, int jobs,
                                 int64_t degree_budget = int64_t(1) << 21);

} // namespace fqmzv
