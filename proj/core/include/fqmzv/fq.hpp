#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fqmzv {

// Element of a finite field F_q, q = p^e.  The value packs the e
// coordinates (c_0, ..., c_{e-1}) over F_p in the modulus basis as the
// integer sum c_i * p^i, so valid values are exactly 0 .. q-1.  All
// arithmetic goes through the owning Fq object.
struct FqElem {
    uint16_t v = 0;
    friend bool operator==(FqElem a, FqElem b) { return a.v == b.v; }
    friend bool operator!=(FqElem a, FqElem b) { return a.v != b.v; }
};

// The field F_q itself: multiplication via discrete-log tables over a
// fixed generator, addition coordinate-wise mod p.  For e > 1 the modulus
// comes from a built-in table (p <= 5, e <= 4); for e = 1 any prime
// p <= 509 is accepted.
class Fq {
public:
    Fq(int p, int e);
    static Fq from_order(int64_t q); // factor q = p^e, then Fq(p, e)

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    FqElem zero() const { return {0}; }
    FqElem one() const { return {1}; }
    FqElem gen() const { return gen_; }           // the table generator
    FqElem elem(uint32_t packed) const;           // validated packed value
    FqElem from_int(int64_t n) const;             // n mod p in the prime subfield

    bool is_zero(FqElem a) const { return a.v == 0; }
    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    FqElem inv(FqElem a) const;                   // throws on zero
    FqElem div(FqElem a, FqElem b) const;
    FqElem pow(FqElem a, int64_t k) const;        // k >= 0; 0^0 = 1

    // modulus coefficients over F_p, ascending, length e+1 (monic); for
    // e = 1 this is {0, 1}, i.e. the identity convention x - 0.
    const std::vector<int>& modulus() const { return modulus_; }

    bool same_field(const Fq& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

private:
    int p_, e_, q_;
    std::vector<int> modulus_;
    FqElem gen_;
    std::vector<uint16_t> exp_; // exp_[i] = gen^i, i in [0, q-1)
    std::vector<uint16_t> log_; // log_[exp_[i]] = i; log_[0] unused

    uint16_t raw_mul(uint16_t a, uint16_t b) const; // table-free, used in setup
};

} // namespace fqmzv
