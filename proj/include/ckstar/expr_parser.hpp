#pragma once

/*
 * Expression grammar for algebra elements over a fixed context matrix:
 *
 *   expr    := ['-'] term (('+' | '-') term)*
 *   term    := factor (['.'] factor)*          juxtaposition is product
 *   factor  := primary '*'*                    postfix '*' is the adjoint
 *   primary := 'I' | 'i' | generator | number ['/' number] | '(' expr ')'
 *   generator := 's' digits                    s1 .. s<n>, multi-digit
 *
 * Numbers are exact rationals, 'i' the imaginary unit, 'I' the algebra
 * unit. parse(print(x)) = x on normal forms. Syntax errors carry the
 * offending position; a generator index beyond the context dimension is an
 * error (while *inadmissible* products are silently zero, as in O_A).
 */

#include "ckstar/scalar.hpp"
#include "ckstar/star_algebra.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace ckstar {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class ExprParser {
public:
    ExprParser(std::string src, ZeroOneMatrix context)
        : src_(std::move(src)), ctx_(std::move(context)) {}

    AlgebraElement parse() {
        AlgebraElement e = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    AlgebraElement expr() {
        bool neg = eat('-');
        AlgebraElement acc = term();
        if (neg) acc = acc.scaled(GaussianRational(-1));
        for (;;) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    AlgebraElement term() {
        AlgebraElement acc = factor();
        for (;;) {
            eat('.');  // optional explicit product dot
            skip_ws();
            if (pos_ >= src_.size()) return acc;
            char c = src_[pos_];
            if (c == 's' || c == 'I' || c == 'i' || c == '(' ||
                std::isdigit(static_cast<unsigned char>(c)))
                acc = acc * factor();
            else
                return acc;
        }
    }

    AlgebraElement factor() {
        AlgebraElement e = primary();
        while (eat('*')) e = e.adjoint();
        return e;
    }

    AlgebraElement primary() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            AlgebraElement e = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (c == 'I') {
            ++pos_;
            return AlgebraElement::unit(ctx_);
        }
        if (c == 'i') {
            ++pos_;
            return AlgebraElement::unit(ctx_).scaled(GaussianRational::i());
        }
        if (c == 's') {
            std::size_t at = pos_++;
            long idx = integer("generator index");
            if (idx < 1 || idx > ctx_.dim())
                throw ParseError("generator index out of range for dimension " +
                                     std::to_string(ctx_.dim()),
                                 at);
            return AlgebraElement::generator(ctx_, static_cast<int>(idx));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = big_integer();
            BigInt den = 1;
            if (eat('/')) den = big_integer();
            if (den == 0) throw ParseError("zero denominator", pos_);
            GaussianRational s(BigRational(num, den));
            if (peek('i')) {
                ++pos_;
                s *= GaussianRational::i();
            }
            return AlgebraElement::unit(ctx_).scaled(s);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    long integer(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(std::string("expected ") + what, pos_);
        return std::stol(src_.substr(start, pos_ - start));
    }

    BigInt big_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected number", pos_);
        return BigInt(src_.substr(start, pos_ - start));
    }

    std::string src_;
    ZeroOneMatrix ctx_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline AlgebraElement parse_expression(const std::string& src, const ZeroOneMatrix& context) {
    return detail::ExprParser(src, context).parse();
}

}  // namespace ckstar
