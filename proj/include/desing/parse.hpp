/*
 * parse.hpp
 * ---------
 * Recursive-descent parser turning polynomial text into canonical Poly
 * values.  Grammar (whitespace ignored):
 *
 *   expr    := ['+'|'-'] term (('+'|'-') term)*
 *   term    := factor ('*' factor)*
 *   factor  := primary ['^' nat]
 *   primary := rat | ident | '(' expr ')'
 *   rat     := nat ['/' nat]
 *
 * Exponents are nonnegative integers.  Identifiers must come from the
 * caller's variable list.  Rational literals extend the integer-only
 * input grammar so that rendered polynomials parse back exactly.
 */
#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "desing/poly.hpp"

namespace desing {

class parse_error : public error {
public:
    parse_error(const std::string& msg, size_t pos)
        : error(msg + " at position " + std::to_string(pos)), pos(pos) {}
    size_t pos;
};

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, const std::vector<std::string>& varnames)
        : text_(text), names_(varnames), nvars_(static_cast<int>(varnames.size())) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return p;
    }

private:
    Poly expr() {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (get() == '-') sign = -1;
        }
        Poly acc = term();
        if (sign < 0) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Poly t = term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            get();
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            size_t at = pos_;
            if (!std::isdigit(peek())) throw parse_error("expected nonnegative integer exponent", at);
            long k = natural();
            if (k > 4096) throw parse_error("exponent too large", at);
            base = base.pow(static_cast<int>(k));
        }
        return base;
    }

    Poly primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            Poly p = expr();
            skip_ws();
            if (peek() != ')') throw parse_error("expected ')'", pos_);
            get();
            return p;
        }
        if (std::isdigit(c)) {
            size_t at = pos_;
            long num = natural();
            skip_ws();
            if (peek() == '/') {
                get();
                skip_ws();
                if (!std::isdigit(peek())) throw parse_error("expected denominator", pos_);
                long den = natural();
                if (den == 0) throw parse_error("zero denominator", at);
                return Poly::constant(nvars_, Rat(num, den), names_);
            }
            return Poly::constant(nvars_, Rat(num), names_);
        }
        if (std::isalpha(c) || c == '_') {
            size_t at = pos_;
            std::string id = ident();
            for (int i = 0; i < nvars_; ++i)
                if (names_[static_cast<size_t>(i)] == id)
                    return Poly::variable(nvars_, i, names_);
            throw parse_error("unknown variable '" + id + "'", at);
        }
        if (c == '\0') throw parse_error("unexpected end of input", pos_);
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    long natural() {
        long v = 0;
        size_t at = pos_;
        while (std::isdigit(peek())) {
            v = v * 10 + (get() - '0');
            if (v > 1000000000L) throw parse_error("integer literal too large", at);
        }
        return v;
    }

    std::string ident() {
        std::string s;
        while (std::isalnum(peek()) || peek() == '_') s += get();
        return s;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }

    const std::string& text_;
    const std::vector<std::string>& names_;
    int nvars_;
    size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(const std::string& text, const std::vector<std::string>& varnames) {
    return detail::PolyParser(text, varnames).parse();
}

// Guess a variable list when none is given: identifiers of the form
// <stem><k> with one common stem span dimensions 1..max k; otherwise
// the distinct identifiers in sorted order.
inline std::vector<std::string> infer_varnames(const std::string& text) {
    std::vector<std::string> ids;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isalpha(c) || c == '_') {
            std::string id;
            while (i < text.size() && (std::isalnum(text[i]) || text[i] == '_')) id += text[i++];
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
        } else {
            ++i;
        }
    }
    std::sort(ids.begin(), ids.end());
    if (ids.empty()) return {"x"};
    std::string stem;
    long maxk = 0;
    bool uniform = true;
    for (const auto& id : ids) {
        size_t d = id.size();
        while (d > 0 && std::isdigit(id[d - 1])) --d;
        if (d == 0 || d == id.size()) {
            uniform = false;
            break;
        }
        std::string s = id.substr(0, d);
        long k = std::stol(id.substr(d));
        if (stem.empty()) stem = s;
        if (s != stem || k <= 0 || k > 64) {
            uniform = false;
            break;
        }
        maxk = std::max(maxk, k);
    }
    if (uniform && maxk > 0) {
        std::vector<std::string> out;
        for (long k = 1; k <= maxk; ++k) out.push_back(stem + std::to_string(k));
        return out;
    }
    return ids;
}

}  // namespace desing
