#include <cctype>

#include "arcmot/polynomial.hpp"

namespace arcmot {

namespace {

// Grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' natural)?
//   base     := rational | variable | '(' expr ')'
//   rational := integer ('/' positive-integer)?
// Whitespace insignificant, no implicit multiplication.
class Parser {
  public:
    Parser(const std::string& text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = acc + term();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (peek() == '-') fail("negative exponent");
            if (!std::isdigit(peek())) fail("exponent must be a natural number");
            unsigned long e = read_natural();
            if (e > 0xffffu) fail("exponent too large");
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == '-' || std::isdigit(c)) return rational();
        if (std::isalpha(c) || c == '_') {
            std::string name = read_ident();
            int idx = ring_->var_index(name);
            if (idx < 0) fail("unknown identifier '" + name + "'");
            return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
        }
        fail("expected rational, variable or '('");
        return Polynomial(ring_);  // unreachable
    }

    Polynomial rational() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(peek())) fail("malformed number");
        mpz_class num(read_digits());
        mpz_class den(1);
        if (peek() == '/') {
            ++pos_;
            if (!std::isdigit(peek())) fail("malformed denominator");
            den = mpz_class(read_digits());
            if (den == 0) fail("zero denominator");
        }
        mpq_class q(num, den);
        q.canonicalize();
        if (neg) q = -q;
        return Polynomial::constant(ring_, q);
    }

    std::string read_ident() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    unsigned long read_natural() { return std::stoul(read_digits()); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    const std::string& s_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

}  // namespace arcmot
