#include "neron/parse.hpp"

#include <cctype>

namespace neron {

namespace {

class Parser {
  public:
    Parser(const std::string& text, Field F) : s_(text), F_(std::move(F)) {}

    RatFunc parse_full() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

    RatFunc expr() {
        RatFunc r = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                r = r + term();
            } else if (peek() == '-') {
                ++pos_;
                r = r - term();
            } else {
                return r;
            }
        }
    }

  private:
    RatFunc term() {
        RatFunc r = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                r = r * factor();
            } else if (peek() == '/') {
                ++pos_;
                RatFunc d = factor();
                if (d.is_zero()) fail("division by zero");
                r = r / d;
            } else {
                return r;
            }
        }
    }

    RatFunc factor() {
        RatFunc base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            long e = integer();
            if (base.is_zero() && e < 0) fail("zero raised to a negative power");
            return base.pow(e);
        }
        return base;
    }

    RatFunc atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == 't') {
            ++pos_;
            return RatFunc::t(F_);
        }
        if (c == 'g') {
            ++pos_;
            if (F_->deg() < 2) fail("generator 'g' requires an extension field");
            return RatFunc::constant(F_->gen());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc::from_int(F_, integer());
        fail("expected a value");
        return RatFunc();  // unreachable
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1L << 50)) fail("integer literal too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
    }

    const std::string& s_;
    Field F_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text, const Field& F) {
    return Parser(text, F).parse_full();
}

EqLiteral parse_equation(const std::string& text, const Field& F) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '[') throw ParseError("expected '['", i);
    ++i;
    RatFunc vals[5];
    for (int k = 0; k < 5; ++k) {
        std::size_t start = i;
        int depth = 0;
        while (i < text.size()) {
            char c = text[i];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && (c == ',' || c == ']')) break;
            ++i;
        }
        if (i >= text.size()) throw ParseError("unterminated equation literal", i);
        vals[k] = parse_ratfunc(text.substr(start, i - start), F);
        char c = text[i];
        if (k < 4 && c != ',') throw ParseError("expected ','", i);
        if (k == 4 && c != ']') throw ParseError("expected ']'", i);
        ++i;
    }
    skip();
    if (i != text.size()) throw ParseError("unexpected trailing input", i);
    return EqLiteral{vals[0], vals[1], vals[2], vals[3], vals[4]};
}

Place parse_place(const std::string& text, const Field& F) {
    if (text == "inf" || text == "infinity" || text == "oo") return Place::infinity(F);
    RatFunc v = parse_ratfunc(text, F);
    if (!v.is_constant()) throw ParseError("place must be 'inf' or a constant-field element", 0);
    return Place::at(residue_at(v, Place::origin(F)));
}

}  // namespace neron
