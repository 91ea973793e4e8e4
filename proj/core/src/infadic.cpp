#include "fqmzv/infadic.hpp"

#include <algorithm>
#include <stdexcept>

#include "fqmzv/errors.hpp"
#include "fqmzv/format.hpp"
#include "fqmzv/vadic.hpp" // precision sentinels / saturating helpers

namespace fqmzv {

bool InfAdic::is_exact_zero() const { return zero && prec >= kExactPrec; }

int64_t InfAdic::ord() const {
    if (zero)
        throw math_error("valuation requested of a value that is zero to working precision");
    return ord_;
}

InfAdic InfField::exact_zero() const {
    InfAdic z;
    z.zero = true;
    z.prec = kExactPrec;
    return z;
}

InfAdic InfField::zero_to_prec(int64_t prec) const {
    InfAdic z;
    z.zero = true;
    z.prec = prec;
    return z;
}

// Digit vectors may be shorter than prec - ord: missing digits are known
// zeros, so exact values keep compact storage under huge precision.
InfAdic InfField::make(int64_t ord, std::vector<FqElem> raw, int64_t prec) {
    if (prec >= kExactPrec) prec = kExactPrec - 1;
    // truncate beyond precision, then strip leading zeros
    if (ord < prec && (int64_t)raw.size() > prec - ord)
        raw.resize((size_t)(prec - ord));
    size_t lead = 0;
    while (lead < raw.size() && raw[lead].v == 0) ++lead;
    if (lead == raw.size() || ord >= prec) return zero_to_prec(prec);
    if (lead > 0) {
        raw.erase(raw.begin(), raw.begin() + (long)lead);
        ord += (int64_t)lead;
    }
    while (!raw.empty() && raw.back().v == 0) raw.pop_back();
    InfAdic r;
    r.ord_ = ord;
    r.prec = prec;
    r.digits = std::move(raw);
    r.zero = false;
    return r;
}

InfAdic InfField::from_poly(const Poly& p, int64_t prec) {
    if (p.is_zero()) return exact_zero();
    std::vector<FqElem> raw(p.c.rbegin(), p.c.rend()); // digit of theta^{-k}, k from -deg
    return make(-p.deg(), std::move(raw), prec);
}

InfAdic InfField::from_rational(const Rational& r, int64_t prec) {
    if (r.is_zero()) return exact_zero();
    int64_t ord = (int64_t)r.den.deg() - (int64_t)r.num.deg();
    int64_t len = prec - ord;
    if (len <= 0) return zero_to_prec(prec);
    if (len > kMaxWorkPrec)
        throw math_error("working precision limit exceeded at the infinite place");
    // power-series division of the degree-reversed polynomials
    const Poly& n = r.num;
    const Poly& d = r.den;
    auto ncoef = [&](int64_t k) { return n.coeff((int)(n.deg() - k)); };
    auto dcoef = [&](int64_t k) { return d.coeff((int)(d.deg() - k)); };
    FqElem d0inv = F_->inv(dcoef(0));
    std::vector<FqElem> q((size_t)len);
    for (int64_t k = 0; k < len; ++k) {
        FqElem acc = ncoef(k);
        for (int64_t j = std::max<int64_t>(0, k - d.deg()); j < k; ++j)
            acc = F_->sub(acc, F_->mul(q[(size_t)j], dcoef(k - j)));
        q[(size_t)k] = F_->mul(acc, d0inv);
    }
    return make(ord, std::move(q), prec);
}

InfAdic InfField::add(const InfAdic& a, const InfAdic& b) {
    int64_t prec = std::min(a.prec, b.prec);
    if (a.zero && b.zero) return zero_to_prec(prec);
    if (a.zero) return make(b.ord_, b.digits, prec);
    if (b.zero) return make(a.ord_, a.digits, prec);
    int64_t ord = std::min(a.ord_, b.ord_);
    if (ord >= prec) return zero_to_prec(prec);
    int64_t data_end = std::max(a.ord_ + (int64_t)a.digits.size(),
                                b.ord_ + (int64_t)b.digits.size());
    data_end = std::min(data_end, prec);
    std::vector<FqElem> raw((size_t)(data_end - ord), F_->zero());
    for (int64_t k = ord; k < data_end; ++k)
        raw[(size_t)(k - ord)] = F_->add(a.digit_at(k), b.digit_at(k));
    return make(ord, std::move(raw), prec);
}

InfAdic InfField::neg(const InfAdic& a) {
    if (a.zero) return a;
    InfAdic r = a;
    for (auto& c : r.digits) c = F_->neg(c);
    return r;
}

InfAdic InfField::sub(const InfAdic& a, const InfAdic& b) { return add(a, neg(b)); }

InfAdic InfField::mul(const InfAdic& a, const InfAdic& b) {
    if (a.zero && b.zero) return zero_to_prec(sat_prec_add(a.prec, b.prec));
    if (a.zero) return zero_to_prec(a.is_exact_zero() ? kExactPrec : sat_prec_add(a.prec, b.ord_));
    if (b.zero) return zero_to_prec(b.is_exact_zero() ? kExactPrec : sat_prec_add(b.prec, a.ord_));
    int64_t prec = std::min(sat_prec_add(a.prec, b.ord_), sat_prec_add(b.prec, a.ord_));
    int64_t ord = a.ord_ + b.ord_;
    if (ord >= prec) return zero_to_prec(prec);
    int64_t len = std::min<int64_t>(prec - ord,
                                    (int64_t)a.digits.size() + (int64_t)b.digits.size() - 1);
    std::vector<FqElem> raw((size_t)len, F_->zero());
    for (size_t i = 0; i < a.digits.size(); ++i) {
        if (a.digits[i].v == 0) continue;
        size_t jmax = std::min(b.digits.size(), (size_t)std::max<int64_t>(0, len - (int64_t)i));
        for (size_t j = 0; j < jmax; ++j) {
            if (b.digits[j].v == 0) continue;
            raw[i + j] = F_->add(raw[i + j], F_->mul(a.digits[i], b.digits[j]));
        }
    }
    return make(ord, std::move(raw), prec);
}

InfAdic InfField::inv(const InfAdic& a) {
    if (a.zero) throw math_error("inverse of a value that is zero to working precision");
    int64_t ord = -a.ord_;
    int64_t prec = a.prec - 2 * a.ord_;
    int64_t len = prec - ord;
    if (len <= 0) return zero_to_prec(prec);
    if (len > kMaxWorkPrec)
        throw math_error("working precision limit exceeded at the infinite place");
    FqElem d0inv = F_->inv(a.digits[0]);
    std::vector<FqElem> q((size_t)len);
    for (int64_t k = 0; k < len; ++k) {
        FqElem acc = k == 0 ? F_->one() : F_->zero();
        for (int64_t j = std::max<int64_t>(0, k - (int64_t)a.digits.size() + 1); j < k; ++j) {
            FqElem ad = (k - j) < (int64_t)a.digits.size() ? a.digits[(size_t)(k - j)] : FqElem{0};
            acc = F_->sub(acc, F_->mul(q[(size_t)j], ad));
        }
        q[(size_t)k] = F_->mul(acc, d0inv);
    }
    return make(ord, std::move(q), prec);
}

InfAdic InfField::div(const InfAdic& a, const InfAdic& b) {
    if (b.zero) throw math_error("division by a value that is zero to working precision");
    if (a.zero) {
        if (a.is_exact_zero()) return exact_zero();
        return zero_to_prec(a.prec - b.ord_);
    }
    // inverting past the needed precision would demand unbounded digit
    // streams when b is an exact value; clamp it to the useful window
    int64_t useful = a.prec + b.ord_ - a.ord_;
    InfAdic bc = b.prec > useful ? clamp(b, std::max(b.ord_ + 1, useful)) : b;
    return mul(a, inv(bc));
}

InfAdic InfField::pow(const InfAdic& a, int64_t k) {
    if (k < 0) throw std::invalid_argument("negative exponent in local-field power");
    InfAdic acc = from_poly(poly_one(*F_), kExactPrec - 1);
    InfAdic base = a;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return acc;
}

InfAdic InfField::scale(FqElem s, const InfAdic& a) {
    if (s.v == 0) return exact_zero();
    if (a.zero) return a;
    InfAdic r = a;
    for (auto& c : r.digits) c = F_->mul(s, c);
    return r;
}

InfAdic InfField::frobenius(const InfAdic& a, int i) {
    if (i < 0) throw std::invalid_argument("negative Frobenius twist");
    if (i == 0) return a;
    int64_t qi = 1;
    for (int j = 0; j < i; ++j) qi = sat_prec_mul(qi, F_->q());
    if (a.zero) return zero_to_prec(sat_prec_mul(a.prec, qi));
    int64_t ord = a.ord_ * qi;
    int64_t prec = sat_prec_mul(a.prec, qi);
    int64_t len = std::min<int64_t>(prec - ord, ((int64_t)a.digits.size() - 1) * qi + 1);
    std::vector<FqElem> raw((size_t)len, F_->zero());
    for (size_t j = 0; j < a.digits.size(); ++j) {
        if (a.digits[j].v == 0) continue;
        int64_t pos = (int64_t)j * qi;
        if (pos < len) raw[(size_t)pos] = F_->pow(a.digits[j], qi);
    }
    return make(ord, std::move(raw), prec);
}

InfAdic InfField::frobenius_clamped(const InfAdic& a, int i, int64_t target_prec) {
    if (i == 0) return clamp(a, target_prec);
    int64_t qi = 1;
    for (int j = 0; j < i; ++j) qi = sat_prec_mul(qi, F_->q());
    int64_t need = target_prec / qi + 2;
    return clamp(frobenius(clamp(a, need), i), target_prec);
}

InfAdic InfField::clamp(const InfAdic& a, int64_t new_prec) {
    if (a.prec <= new_prec) return a;
    if (a.is_exact_zero()) return a;
    if (a.zero) return zero_to_prec(std::min(a.prec, new_prec));
    if (a.ord_ >= new_prec) return zero_to_prec(new_prec);
    return make(a.ord_, a.digits, new_prec);
}

std::vector<InfDigit> InfField::digits(const InfAdic& a) const {
    std::vector<InfDigit> out;
    if (a.zero) return out;
    for (size_t j = 0; j < a.digits.size(); ++j)
        if (a.digits[j].v != 0) out.push_back({-(a.ord_ + (int64_t)j), a.digits[j]});
    return out;
}

std::string InfField::to_string(const InfAdic& a) const {
    // polynomial term syntax with negative exponents on T
    if (a.is_exact_zero()) return "0";
    std::string out;
    for (const auto& d : digits(a)) {
        if (!out.empty()) out += " + ";
        std::string cs = fq_elem_to_string(*F_, d.c);
        bool need_paren = cs.find('+') != std::string::npos;
        if (need_paren) cs = "(" + cs + ")";
        if (d.theta_pow == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += "T";
            if (d.theta_pow != 1) out += "^" + std::to_string(d.theta_pow);
        }
    }
    if (!out.empty()) out += " + ";
    out += "O(T^" + std::to_string(-a.prec) + ")";
    return out;
}

} // namespace fqmzv
