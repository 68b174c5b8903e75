#include "aluffi/parse.hpp"

#include "aluffi/errors.hpp"

#include <cctype>
#include <cstdint>
#include <vector>

namespace aluffi {

namespace {

struct Token {
    enum class Type { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };
    Type type;
    std::size_t pos;
    std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            out.push_back({Token::Type::number, i, std::string(s.substr(i, j - i))});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Type::ident, i, std::string(s.substr(i, j - i))});
            i = j;
            continue;
        }
        Token::Type t;
        switch (c) {
        case '+': t = Token::Type::plus; break;
        case '-': t = Token::Type::minus; break;
        case '*': t = Token::Type::star; break;
        case '^': t = Token::Type::caret; break;
        case '/': t = Token::Type::slash; break;
        case '(': t = Token::Type::lparen; break;
        case ')': t = Token::Type::rparen; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({t, i, std::string(1, c)});
        ++i;
    }
    out.push_back({Token::Type::end, s.size(), ""});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring)
        : tokens_(tokenize(text)), ring_(ring) {}

    Polynomial run() {
        Polynomial p = parse_expr();
        if (peek().type != Token::Type::end)
            throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
        return p;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& advance() { return tokens_[index_++]; }

    Polynomial parse_expr() {
        bool negative = false;
        std::size_t anchor = peek().pos;
        if (peek().type == Token::Type::plus || peek().type == Token::Type::minus) {
            negative = advance().type == Token::Type::minus;
        }
        Polynomial acc = parse_term(anchor);
        if (negative)
            acc = -acc;
        while (peek().type == Token::Type::plus || peek().type == Token::Type::minus) {
            const Token& op = advance();
            Polynomial t = parse_term(op.pos);
            acc = (op.type == Token::Type::plus) ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial parse_term(std::size_t anchor) {
        Polynomial acc = parse_power(anchor);
        while (peek().type == Token::Type::star) {
            const Token& op = advance();
            acc *= parse_power(op.pos);
        }
        return acc;
    }

    Polynomial parse_power(std::size_t anchor) {
        Polynomial base = parse_primary(anchor);
        if (peek().type == Token::Type::caret) {
            const Token& op = advance();
            if (peek().type != Token::Type::number) {
                throw_expected("exponent", op.pos);
            }
            const Token& e = advance();
            unsigned long exp = 0;
            try {
                exp = std::stoul(e.text);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", e.pos);
            }
            if (exp > 100000)
                throw ParseError("exponent out of range", e.pos);
            return base.pow(static_cast<std::uint32_t>(exp));
        }
        return base;
    }

    Polynomial parse_primary(std::size_t anchor) {
        const Token& t = peek();
        switch (t.type) {
        case Token::Type::number: {
            advance();
            Integer num(t.text);
            if (peek().type == Token::Type::slash) {
                advance();
                if (peek().type != Token::Type::number)
                    throw_expected("denominator", peek().pos);
                const Token& d = advance();
                Integer den(d.text);
                if (den == 0)
                    throw ParseError("zero denominator", d.pos);
                return Polynomial::constant(ring_, make_rational(num, den));
            }
            return Polynomial::constant(ring_, Rational(num));
        }
        case Token::Type::ident: {
            advance();
            auto idx = ring_->var_index(t.text);
            if (!idx)
                throw ParseError("unknown variable '" + t.text + "'", t.pos);
            return Polynomial::variable(ring_, *idx);
        }
        case Token::Type::lparen: {
            advance();
            Polynomial inner = parse_expr();
            if (peek().type != Token::Type::rparen)
                throw ParseError("unclosed parenthesis", t.pos);
            advance();
            return inner;
        }
        case Token::Type::end:
            // A missing operand is reported at the operator that wanted it.
            throw ParseError("missing operand", anchor);
        default:
            throw ParseError("unexpected token '" + t.text + "'", t.pos);
        }
    }

    [[noreturn]] void throw_expected(const std::string& what, std::size_t pos) {
        if (peek().type == Token::Type::end)
            throw ParseError("missing " + what, pos);
        throw ParseError("expected " + what + ", got '" + peek().text + "'", peek().pos);
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    RingPtr ring_;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

} // namespace aluffi
