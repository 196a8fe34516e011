#include "plucker/parse.hpp"

#include "plucker/error.hpp"

#include <cctype>

namespace plucker {

namespace {

class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

    Poly run()
    {
        skip_ws();
        if (at_end())
            throw SyntaxError(pos_, "empty expression");
        Poly p = expr();
        skip_ws();
        if (!at_end()) {
            if (text_[pos_] == ')')
                throw SyntaxError(pos_, "unbalanced ')'");
            throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        }
        return p;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr()
    {
        Poly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term()
    {
        Poly acc = factor();
        while (accept('*'))
            acc *= factor();
        skip_ws();
        if (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
            throw SyntaxError(pos_, "implicit multiplication is not allowed");
        return acc;
    }

    BigInt integer()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    long exponent()
    {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError(pos_, "expected unsigned exponent after '^'");
        const std::size_t start = pos_;
        BigInt e = integer();
        if (e > 4096)
            throw SyntaxError(start, "exponent too large");
        return e.get_si();
    }

    Poly factor()
    {
        skip_ws();
        if (at_end())
            throw SyntaxError(pos_, "unexpected end of input");
        const char c = text_[pos_];
        const std::size_t start = pos_;
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            skip_ws();
            if (at_end())
                throw SyntaxError(start, "unbalanced '('");
            Poly inner = expr();
            if (!accept(')')) {
                if (at_end())
                    throw SyntaxError(start, "unbalanced '('");
                throw SyntaxError(pos_, "expected ')'");
            }
            if (accept('^'))
                inner = pow(inner, exponent());
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = integer();
            BigInt den = 1;
            if (accept('/')) {
                skip_ws();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw SyntaxError(pos_, "expected denominator after '/'");
                const std::size_t dpos = pos_;
                den = integer();
                if (den == 0)
                    throw SyntaxError(dpos, "zero denominator");
            }
            return Poly::constant(ring_, Rat(num, den));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            const auto idx = ring_->index_of(name);
            if (!idx)
                throw Error(ErrorKind::UnknownVariable,
                            "'" + name + "' at offset " + std::to_string(start));
            Poly v = Poly::variable(ring_, *idx);
            if (accept('^'))
                v = pow(v, exponent());
            return v;
        }
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_polynomial(std::string_view text, const RingPtr& ring)
{
    return Parser(text, ring).run();
}

Poly parse_polynomial(std::string_view text, const std::vector<std::string>& vars)
{
    return parse_polynomial(text, PolyRing::make(vars));
}

} // namespace plucker
