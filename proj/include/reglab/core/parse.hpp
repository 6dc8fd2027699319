#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "reglab/core/polynomial.hpp"

namespace reglab {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

namespace detail {

template <class K>
class PolyParser {
public:
    using P = Polynomial<K>;
    PolyParser(RingPtr<K> ring, const std::string& text) : ring_(std::move(ring)), s_(text) {}

    P parse_all() {
        skip();
        if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
        P p = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_primary() {
        skip();
        if (pos_ >= s_.size()) return false;
        unsigned char c = s_[pos_];
        return std::isalnum(c) || c == '_' || c == '(';
    }

    P expr() {
        P acc(ring_);
        bool neg = false;
        if (peek('+') || peek('-')) neg = s_[pos_++] == '-';
        P t = term();
        acc = neg ? acc - t : acc + t;
        while (peek('+') || peek('-')) {
            bool minus = s_[pos_++] == '-';
            P u = term();
            acc = minus ? acc - u : acc + u;
        }
        return acc;
    }

    P term() {
        P acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (peek('/')) {
                std::size_t at = ++pos_;
                P d = factor();
                if (d.is_zero() || d.size() != 1 || !d.leading_monomial().is_one())
                    throw ParseError("divisor must be a nonzero constant", at);
                acc = acc.scale(ring_->field.inv(d.leading_coefficient()));
            } else if (starts_primary()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    P factor() {
        P base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t at = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected exponent", at);
            mpz_class e = digits();
            if (e > kMaxExponent) throw ParseError("exponent overflow", at);
            unsigned ev = static_cast<unsigned>(e.get_ui());
            if (base.size() == 1) {
                const auto& t = base.leading_term();
                try {
                    return P::term(ring_, t.mono.pow(ev), ring_->field.pow(t.coeff, ev));
                } catch (const std::overflow_error&) {
                    throw ParseError("exponent overflow", at);
                }
            }
            try {
                return power(base, ev);
            } catch (const std::overflow_error&) {
                throw ParseError("exponent overflow", at);
            }
        }
        return base;
    }

    P primary() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        unsigned char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            P p = expr();
            if (!peek(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(c)) {
            mpz_class n = digits();
            return P::constant(ring_, ring_->field.from_integer(n));
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t at = pos_;
            std::string name;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            auto idx = ring_->spec.index_of(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'", at);
            return P::monomial(ring_, Monomial::variable(*idx));
        }
        throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    }

    mpz_class digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return mpz_class(s_.substr(start, pos_ - start));
    }

    RingPtr<K> ring_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <class K>
Polynomial<K> parse_polynomial(const RingPtr<K>& ring, const std::string& text) {
    return detail::PolyParser<K>(ring, text).parse_all();
}

// Splits on top-level commas (outside parentheses).
std::vector<std::string> split_top_level(const std::string& text, char sep = ',');

template <class K>
std::vector<Polynomial<K>> parse_polynomial_list(const RingPtr<K>& ring, const std::string& text) {
    std::vector<Polynomial<K>> out;
    for (const auto& piece : split_top_level(text)) out.push_back(parse_polynomial(ring, piece));
    return out;
}

}  // namespace reglab
