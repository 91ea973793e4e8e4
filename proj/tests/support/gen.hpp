#pragma once

// Seeded random generators shared by the test binaries.  Everything is
// driven by one mt19937_64 so failures reproduce from the seed printed
// in the test name / message.

#include <cstdint>
#include <random>
#include <vector>

#include "fqmzv/carlitz.hpp"
#include "fqmzv/poly.hpp"
#include "fqmzv/rational.hpp"

namespace testgen {

struct Gen {
    std::mt19937_64 rng;

    explicit Gen(uint64_t seed) : rng(seed) {}

    int64_t pick(int64_t lo, int64_t hi) { // inclusive
        return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
    }

    fqmzv::FqElem elem(const fqmzv::Fq& F) { return F.elem((uint32_t)pick(0, F.q() - 1)); }

    fqmzv::FqElem nonzero_elem(const fqmzv::Fq& F) {
        return F.elem((uint32_t)pick(1, F.q() - 1));
    }

    // random polynomial of degree <= max_deg (zero allowed)
    fqmzv::Poly poly(const fqmzv::Fq& F, int max_deg) {
        std::vector<fqmzv::FqElem> cs;
        int d = (int)pick(-1, max_deg);
        for (int i = 0; i <= d; ++i) cs.push_back(elem(F));
        return fqmzv::poly_from_coeffs(F, std::move(cs));
    }

    fqmzv::Poly nonzero_poly(const fqmzv::Fq& F, int max_deg) {
        for (;;) {
            fqmzv::Poly p = poly(F, max_deg);
            if (!p.is_zero()) return p;
        }
    }

    // exact degree d, monic
    fqmzv::Poly monic_poly(const fqmzv::Fq& F, int d) {
        std::vector<fqmzv::FqElem> cs;
        for (int i = 0; i < d; ++i) cs.push_back(elem(F));
        cs.push_back(F.one());
        return fqmzv::poly_from_coeffs(F, std::move(cs));
    }

    fqmzv::Rational rational(const fqmzv::Fq& F, int max_deg) {
        return fqmzv::rat_make(F, poly(F, max_deg), nonzero_poly(F, max_deg));
    }

    fqmzv::Rational nonzero_rational(const fqmzv::Fq& F, int max_deg) {
        return fqmzv::rat_make(F, nonzero_poly(F, max_deg), nonzero_poly(F, max_deg));
    }

    // composition with given depth, parts in [1, max_part]
    fqmzv::IndexComposition index(int depth, int max_part) {
        fqmzv::IndexComposition s;
        for (int i = 0; i < depth; ++i) s.parts.push_back((int)pick(1, max_part));
        return s;
    }
};

// all compositions of weight exactly w (ordered parts)
inline void compositions_of(int w, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    struct Rec {
        std::vector<std::vector<int>>& out;
        std::vector<int>& cur;
        void go(int rest) {
            if (rest == 0) {
                out.push_back(cur);
                return;
            }
            for (int first = 1; first <= rest; ++first) {
                cur.push_back(first);
                go(rest - first);
                cur.pop_back();
            }
        }
    } rec{out, cur};
    rec.go(w);
}

} // namespace testgen
