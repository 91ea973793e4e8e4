#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqmzv/rational.hpp"

namespace fqmzv {

// Truncated element of the completion at the infinite place (Laurent
// series in 1/theta; ord_inf(theta) = -1):
//   value = sum_k c_k theta^{-k} for ord <= k < prec, plus O(theta^-prec),
// digits[j] = c_{ord+j}, leading digit nonzero; or zero == true meaning
// "value = O(theta^-prec)".  top_deg (the theta-degree) is -ord.
struct InfAdic {
    int64_t ord_ = 0;
    int64_t prec = 0;
    std::vector<FqElem> digits;
    bool zero = true;

    bool is_zero_to_prec() const { return zero; }
    bool is_exact_zero() const;
    int64_t ord() const; // throws math_error when zero-flagged
    int64_t top_deg() const { return -ord(); }
    FqElem digit_at(int64_t k) const { // coefficient of theta^{-k}
        if (zero || k < ord_ || k - ord_ >= (int64_t)digits.size()) return {0};
        return digits[(size_t)(k - ord_)];
    }
};

struct InfDigit {
    int64_t theta_pow; // exponent of theta (positive for polynomial part)
    FqElem c;          // nonzero
};

class InfField {
public:
    explicit InfField(const Fq& F) : F_(&F) {}

    const Fq& field() const { return *F_; }

    InfAdic exact_zero() const;
    InfAdic zero_to_prec(int64_t prec) const;
    InfAdic make(int64_t ord, std::vector<FqElem> raw, int64_t prec);
    InfAdic from_poly(const Poly& p, int64_t prec);
    InfAdic from_rational(const Rational& r, int64_t prec);

    InfAdic add(const InfAdic& a, const InfAdic& b);
    InfAdic sub(const InfAdic& a, const InfAdic& b);
    InfAdic neg(const InfAdic& a);
    InfAdic mul(const InfAdic& a, const InfAdic& b);
    InfAdic inv(const InfAdic& a);
    InfAdic div(const InfAdic& a, const InfAdic& b);
    InfAdic pow(const InfAdic& a, int64_t k); // k >= 0
    InfAdic scale(FqElem s, const InfAdic& a);
    InfAdic frobenius(const InfAdic& a, int i);                  // exact gain
    InfAdic frobenius_clamped(const InfAdic& a, int i, int64_t target_prec);
    InfAdic clamp(const InfAdic& a, int64_t new_prec);

    std::vector<InfDigit> digits(const InfAdic& a) const;
    std::string to_string(const InfAdic& a) const; // "T^2 + 1 + T^-3 + O(T^-5)"

private:
    const Fq* F_;
};

} // namespace fqmzv
