#include "padyn/expr.hpp"

#include <cctype>

#include "padyn/errors.hpp"

namespace padyn {

namespace {

constexpr unsigned max_exponent = 4096;

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    RationalPoly parse() {
        RationalPoly f = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

  private:
    [[noreturn]] void fail(const std::string &why) const {
        throw ParseError("column " + std::to_string(pos_ + 1) + ": " + why);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    bool starts_atom() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    Integer integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    unsigned small_integer(const char *what) {
        Integer n = integer();
        if (n > max_exponent)
            fail(std::string(what) + " larger than " + std::to_string(max_exponent));
        return static_cast<unsigned>(n.get_ui());
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    RationalPoly expr() {
        RationalPoly f = term();
        while (true) {
            if (accept('+'))
                f += term();
            else if (accept('-'))
                f -= term();
            else
                return f;
        }
    }

    RationalPoly term() {
        RationalPoly f = unary();
        while (true) {
            if (accept('*')) {
                f *= unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RationalPoly d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division by a non-constant or zero");
                }
                f /= d.coeff(0);
            } else if (starts_atom()) {
                f *= unary();
            } else {
                return f;
            }
        }
    }

    RationalPoly unary() {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    RationalPoly power() {
        RationalPoly base = atom();
        if (!accept('^'))
            return base;
        bool paren = accept('(');
        unsigned e = small_integer("exponent");
        if (paren)
            expect(')');
        return padyn::pow(base, e);
    }

    RationalPoly atom() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RationalPoly::constant(Rational(integer()));
        if (accept('(')) {
            RationalPoly f = expr();
            expect(')');
            return f;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string name = identifier();
            if (name == "x")
                return RationalPoly::identity();
            if (name == "binom" || name == "C") {
                expect('(');
                RationalPoly inner = expr();
                expect(',');
                unsigned n = small_integer("binomial index");
                expect(')');
                return compose(binom_poly(n), inner);
            }
            pos_ = at;
            fail("unknown name '" + name + "'");
        }
        if (c == '\0')
            fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

RationalPoly parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::string format_polynomial(const RationalPoly &f) {
    if (f.is_zero())
        return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        Rational c = f.coeff(static_cast<std::size_t>(k));
        if (c == 0)
            continue;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        c = abs(c);
        std::string mag = c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
        if (k == 0) {
            out += mag;
            continue;
        }
        if (c != 1)
            out += mag + "*";
        out += "x";
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

} // namespace padyn
