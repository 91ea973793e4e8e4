#pragma once

#include <string>
#include <vector>

#include "fqmzv/bipoly.hpp"
#include "fqmzv/poly.hpp"

namespace fqmzv {

// Canonical ASCII forms.  theta renders as "T", the operator variable as
// "t", the F_q generator as "g" (non-prime fields only).  Terms print in
// descending degree; printing and parsing round-trip bit-exactly.

std::string fq_elem_to_string(const Fq& F, FqElem a);
std::string poly_to_string(const Fq& F, const Poly& p, char var = 'T');
std::string bipoly_to_string(const Fq& F, const BiPoly& p);

// Parser for the same language: sums/differences of '*'-joined factors,
// factors being integers, g/T/t with optional '^' powers, or
// parenthesized subexpressions.  Throws std::invalid_argument on junk.
BiPoly parse_bipoly(const Fq& F, const std::string& text);
Poly parse_poly_theta(const Fq& F, const std::string& text); // rejects t
Poly parse_poly_t(const Fq& F, const std::string& text);     // rejects T

// "4,1" -> {4, 1}; strictly positive entries required.
std::vector<int> parse_index(const std::string& text);
std::string index_to_string(const std::vector<int>& parts);

// Split on commas at parenthesis depth zero (point lists).
std::vector<std::string> split_top_level(const std::string& text, char sep);

} // namespace fqmzv
