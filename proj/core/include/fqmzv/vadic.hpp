#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqmzv/places.hpp"

namespace fqmzv {

// Sentinel precision for values known to be exactly zero (they behave as
// additive identities and never degrade a sum's precision).
inline constexpr int64_t kExactPrec = int64_t(1) << 52;

// Hard ceiling on the number of digits any truncated representation may
// carry; beyond this an evaluation is hopeless and aborts cleanly.
inline constexpr int64_t kMaxWorkPrec = int64_t(1) << 22;

int64_t sat_prec_add(int64_t a, int64_t b); // addition clamped at kExactPrec
int64_t sat_prec_mul(int64_t a, int64_t b);

// Truncated element of the completion k_v:
//   value = v^ord * unit + O(v^prec),  unit a polynomial of degree
//   < (prec - ord) * eps_v not divisible by v, and prec > ord;
// or, when zero == true, the statement "value = O(v^prec)" with no
// leading term known (prec == kExactPrec means exactly zero).
// ord() of a zero-flagged value does not exist; callers must branch.
struct VAdic {
    int64_t ord_ = 0;
    int64_t prec = 0;
    Poly unit;
    bool zero = true;
    uint32_t tag = 0; // owning place's tag, checked on binary ops

    bool is_zero_to_prec() const { return zero; }
    bool is_exact_zero() const { return zero && prec >= kExactPrec; }
    int64_t ord() const; // throws math_error when zero-flagged
};

struct VAdicDigit {
    int64_t pow;
    Poly digit; // nonzero, degree < eps_v
};

// Arithmetic context for one finite place: owns the power cache and
// implements the precision calculus.  Not thread-safe; use one per
// worker.
class LocalField {
public:
    LocalField(const Fq& F, Place v);

    const Fq& field() const { return *F_; }
    const Place& place() const { return v_; }
    uint32_t tag() const { return tag_; }

    // v^k, cached
    const Poly& v_power(int64_t k);

    VAdic exact_zero() const;
    VAdic zero_to_prec(int64_t prec) const;
    // value = v^ord * raw + O(v^prec); raw may carry v factors or exceed
    // the modulus — this normalizes
    VAdic make(int64_t ord, const Poly& raw, int64_t prec);
    VAdic from_poly(const Poly& p, int64_t prec);
    VAdic from_rational(const Rational& r, int64_t prec);

    VAdic add(const VAdic& a, const VAdic& b);
    VAdic sub(const VAdic& a, const VAdic& b);
    VAdic neg(const VAdic& a);
    VAdic mul(const VAdic& a, const VAdic& b);
    VAdic inv(const VAdic& a);                 // throws math_error on zero-flagged
    VAdic div(const VAdic& a, const VAdic& b);
    VAdic pow(const VAdic& a, int64_t k);      // k >= 0
    VAdic scale(FqElem s, const VAdic& a);

    // multiply by an exact polynomial (infinite-precision operand)
    VAdic mul_poly(const VAdic& a, const Poly& p);

    // raw q^i-power Frobenius: ord and prec scale by exactly q^i
    VAdic frobenius(const VAdic& a, int i);
    // Frobenius followed by clamping to precision target_prec; avoids
    // materializing the full-precision intermediate
    VAdic frobenius_clamped(const VAdic& a, int i, int64_t target_prec);

    // forget precision down to at most new_prec (sound, lossy)
    VAdic clamp(const VAdic& a, int64_t new_prec);

    // image of [i] = theta^{q^i} - theta at this place, at absolute
    // precision prec, computed by modular Frobenius iteration (never
    // expands the degree-q^i polynomial)
    VAdic bracket_image(int i, int64_t prec);

    // nonzero digits of the expansion, powers in [ord, prec)
    std::vector<VAdicDigit> digits(const VAdic& a);
    std::string to_string(const VAdic& a); // e.g. "v^-3 + v^2 + O(v^7)"

private:
    const Fq* F_;
    Place v_;
    uint32_t tag_;
    std::vector<Poly> vpow_;

    void check(const VAdic& x) const;
    Poly unit_inverse(const Poly& u, int64_t k); // u^-1 mod v^k by Hensel lifting
};

} // namespace fqmzv
