#include "fqmzv/format.hpp"

#include <cctype>
#include <stdexcept>

namespace fqmzv {

namespace {

bool has_top_level_sum(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if ((c == '+' || c == '-') && depth == 0 && i > 0) return true;
    }
    return false;
}

std::string wrap_if_sum(const std::string& s) {
    return has_top_level_sum(s) ? "(" + s + ")" : s;
}

// one printed term: coefficient string (may be "1") times var^k
void append_term(std::string& out, const std::string& coeff, char var, int k) {
    if (!out.empty()) out += '+';
    if (k == 0) {
        out += coeff;
        return;
    }
    if (coeff != "1") {
        out += wrap_if_sum(coeff);
        out += '*';
    }
    out += var;
    if (k > 1) {
        out += '^';
        out += std::to_string(k);
    }
}

} // namespace

std::string fq_elem_to_string(const Fq& F, FqElem a) {
    if (F.e() == 1) return std::to_string(a.v);
    if (a.v == 0) return "0";
    std::string out;
    uint16_t x = a.v;
    std::vector<int> digits(F.e());
    for (int i = 0; i < F.e(); ++i) { digits[i] = x % F.p(); x = (uint16_t)(x / F.p()); }
    for (int i = F.e() - 1; i >= 0; --i) {
        if (digits[i] == 0) continue;
        append_term(out, std::to_string(digits[i]), 'g', i);
    }
    return out;
}

std::string poly_to_string(const Fq& F, const Poly& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.deg(); k >= 0; --k) {
        FqElem c = p.coeff(k);
        if (c.v == 0) continue;
        append_term(out, fq_elem_to_string(F, c), var, k);
    }
    return out;
}

std::string bipoly_to_string(const Fq& F, const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.deg_t(); k >= 0; --k) {
        const Poly& c = p.coeff_t(k);
        if (c.is_zero()) continue;
        append_term(out, poly_to_string(F, c, 'T'), 't', k);
    }
    return out;
}

// ---- parser ----

namespace {

class Parser {
public:
    Parser(const Fq& F, const std::string& s) : F_(F), s_(s) {}

    BiPoly parse() {
        BiPoly r = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw std::invalid_argument("trailing characters in polynomial: '" + s_.substr(pos_) + "'");
        return r;
    }

private:
    const Fq& F_;
    const std::string& s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    int64_t integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
            throw std::invalid_argument("expected integer in polynomial");
        int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) throw std::invalid_argument("integer literal too large");
            ++pos_;
        }
        return v;
    }

    int exponent() {
        if (!eat('^')) return 1;
        int64_t k = integer();
        if (k > 4096) throw std::invalid_argument("exponent too large");
        return (int)k;
    }

    BiPoly expr() {
        bool negate = eat('-');
        if (!negate) eat('+');
        BiPoly acc = term();
        if (negate) acc = bipoly_neg(F_, acc);
        for (;;) {
            if (eat('+')) acc = bipoly_add(F_, acc, term());
            else if (eat('-')) acc = bipoly_sub(F_, acc, term());
            else return acc;
        }
    }

    BiPoly term() {
        BiPoly acc = factor();
        while (eat('*')) acc = bipoly_mul(F_, acc, factor());
        return acc;
    }

    BiPoly factor() {
        char c = peek();
        if (c == '(') {
            eat('(');
            BiPoly r = expr();
            if (!eat(')')) throw std::invalid_argument("missing ')' in polynomial");
            return r;
        }
        if (std::isdigit((unsigned char)c))
            return bipoly_from_theta(poly_const(F_, F_.from_int(integer())));
        if (c == 'g') {
            ++pos_;
            if (F_.e() == 1)
                throw std::invalid_argument("generator 'g' only exists for non-prime fields");
            int k = exponent();
            return bipoly_from_theta(poly_const(F_, F_.pow(F_.gen(), k)));
        }
        if (c == 'T') {
            ++pos_;
            int k = exponent();
            return bipoly_from_theta(poly_shift(poly_one(F_), k));
        }
        if (c == 't') {
            ++pos_;
            int k = exponent();
            return bipoly_from_t(F_, poly_shift(poly_one(F_), k));
        }
        throw std::invalid_argument(std::string("unexpected character '") + c + "' in polynomial");
    }
};

} // namespace

BiPoly parse_bipoly(const Fq& F, const std::string& text) {
    return Parser(F, text).parse();
}

Poly parse_poly_theta(const Fq& F, const std::string& text) {
    BiPoly b = parse_bipoly(F, text);
    if (b.deg_t() > 0)
        throw std::invalid_argument("expected a polynomial in T only: '" + text + "'");
    return b.coeff_t(0);
}

Poly parse_poly_t(const Fq& F, const std::string& text) {
    BiPoly b = parse_bipoly(F, text);
    if (b.deg_theta() > 0)
        throw std::invalid_argument("expected a polynomial in t only: '" + text + "'");
    Poly r;
    r.c.resize(b.tc.size());
    for (size_t k = 0; k < b.tc.size(); ++k) r.c[k] = b.tc[k].coeff(0);
    r.normalize();
    return r;
}

std::vector<int> parse_index(const std::string& text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(',', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("empty entry in index '" + text + "'");
        tok = tok.substr(a, b - a + 1);
        int v = 0;
        for (char c : tok) {
            if (!std::isdigit((unsigned char)c))
                throw std::invalid_argument("index entries must be positive integers: '" + text + "'");
            v = v * 10 + (c - '0');
            if (v > 10000) throw std::invalid_argument("index entry too large");
        }
        if (v == 0) throw std::invalid_argument("index entries must be positive");
        parts.push_back(v);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return parts;
}

std::string index_to_string(const std::vector<int>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

std::vector<std::string> split_top_level(const std::string& text, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace fqmzv
