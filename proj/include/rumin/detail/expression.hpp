#pragma once

// Recursive-descent parser shared by the rational-function and PBW text forms.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '.' | '/') unary)*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'

#include "rumin/error.hpp"

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

namespace rumin::detail {

template <typename Ops>
class ExpressionParser {
public:
    using Value = typename Ops::Value;

    ExpressionParser(std::string_view text, const Ops& ops) : text_(text), ops_(ops) {}

    Value parse() {
        Value v = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        Value v = term();
        while (true) {
            if (accept('+')) {
                v = ops_.add(v, term());
            } else if (accept('-')) {
                v = ops_.sub(v, term());
            } else {
                return v;
            }
        }
    }

    Value term() {
        Value v = unary();
        while (true) {
            if (accept('*') || accept('.')) {
                v = ops_.mul(v, unary());
            } else if (accept('/')) {
                v = ops_.div(v, unary());
            } else {
                return v;
            }
        }
    }

    Value unary() {
        if (accept('-')) return ops_.neg(unary());
        if (accept('+')) return unary();
        return power();
    }

    Value power() {
        Value base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
            return ops_.pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    Value atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return ops_.integer(mpz_class(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            try {
                return ops_.identifier(name);
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                fail(e.what());
            }
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    const Ops& ops_;
    std::size_t pos_ = 0;
};

} // namespace rumin::detail
