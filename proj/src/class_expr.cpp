#include "mdt/class_expr.hpp"

#include <cctype>

namespace mdt {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    MotWeight parse() {
        MotWeight r = expression();
        skip_space();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    MotWeight expression() {
        MotWeight r = term();
        for (;;) {
            skip_space();
            if (consume('+'))
                r += term();
            else if (consume('-'))
                r -= term();
            else
                return r;
        }
    }

    MotWeight term() {
        MotWeight r = factor();
        for (;;) {
            skip_space();
            if (consume('*'))
                r *= factor();
            else
                return r;
        }
    }

    MotWeight factor() {
        skip_space();
        if (consume('-')) return -factor();
        return atom();
    }

    MotWeight atom() {
        skip_space();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MotWeight r = expression();
            expect(')');
            return r;
        }
        if (c == 'L') {
            ++pos_;
            if (!consume('^')) return lefschetz(1);
            return lefschetz_half(exponent_halves());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return MotWeight::constant(integer());
        fail(std::string("unexpected character '") + c + "'");
    }

    // Exponent after '^': a plain integer, or (p), or (p/2); returned in
    // half-power units.
    long exponent_halves() {
        skip_space();
        if (consume('(')) {
            const long p = signed_integer();
            long halves = 2 * p;
            skip_space();
            if (consume('/')) {
                expect('2');
                halves = p;
            }
            expect(')');
            return halves;
        }
        return 2 * signed_integer();
    }

    long signed_integer() {
        skip_space();
        const bool neg = consume('-');
        const long v = integer().get_si();
        return neg ? -v : v;
    }

    Int integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return Int(s_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool consume(char c) {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("class expression error at position " +
                                    std::to_string(pos_) + ": " + why);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

MotWeight parse_class_expr(const std::string& text) { return Parser(text).parse(); }

}  // namespace mdt
