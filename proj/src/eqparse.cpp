#include "octlin/eqparse.hpp"

#include <cctype>
#include <vector>

namespace octlin {

namespace {

struct Token {
    enum class Kind { Ident, Star, LParen, RParen, Equals, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '*') out.push_back({Token::Kind::Star, "*", i++});
        else if (c == '(') out.push_back({Token::Kind::LParen, "(", i++});
        else if (c == ')') out.push_back({Token::Kind::RParen, ")", i++});
        else if (c == '=') out.push_back({Token::Kind::Equals, "=", i++});
        else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Kind::Ident, s.substr(start, i - start), start});
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", i);
        }
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

class Parser {
  public:
    Parser(std::vector<Token> tokens, const EquationSource& src)
        : tokens_(std::move(tokens)), src_(src) {}

    // expr := atom | "(" expr "*" expr ")" ; a single product is allowed
    // without parentheses at the top level of each equation side.
    MonomialTree parse_side() {
        MonomialTree first = parse_primary();
        if (peek().kind != Token::Kind::Star) return first;
        advance();
        MonomialTree second = parse_primary();
        if (peek().kind == Token::Kind::Star)
            throw SyntaxError("unparenthesized product chain is ambiguous", peek().pos);
        return MonomialTree::product(std::move(first), std::move(second));
    }

    void expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind) throw SyntaxError("expected " + what, peek().pos);
        advance();
    }

    const Token& peek() const { return tokens_[idx_]; }

  private:
    MonomialTree parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Ident: {
                advance();
                if (t.text == "x") return MonomialTree::variable();
                auto it = src_.bindings.find(t.text);
                if (it == src_.bindings.end())
                    throw UnboundIdentifier("identifier '" + t.text + "' has no binding");
                return MonomialTree::constant(t.text, it->second);
            }
            case Token::Kind::LParen: {
                std::size_t open = t.pos;
                advance();
                MonomialTree left = parse_primary();
                expect(Token::Kind::Star, "'*' inside parentheses");
                MonomialTree right = parse_primary();
                if (peek().kind != Token::Kind::RParen)
                    throw SyntaxError("unmatched parenthesis", open);
                advance();
                return MonomialTree::product(std::move(left), std::move(right));
            }
            default:
                throw SyntaxError("expected identifier or '('", t.pos);
        }
    }

    void advance() { ++idx_; }

    std::vector<Token> tokens_;
    const EquationSource& src_;
    std::size_t idx_ = 0;
};

void check_left_constants(const MonomialTree& t) {
    if (t.is_product()) {
        check_left_constants(t.left());
        check_left_constants(t.right());
    } else if (t.is_constant() && t.constant_value().is_zero()) {
        throw ZeroCoefficient("constant '" + t.constant_name() + "' is zero");
    }
}

Octonion evaluate_constant_side(const MonomialTree& t, const Field& f) {
    return t.evaluate(Octonion::zero(f)); // no variable leaf by construction
}

} // namespace

std::pair<MonomialTree, Octonion> parse_equation(const EquationSource& src) {
    Parser parser(tokenize(src.text), src);
    MonomialTree lhs = parser.parse_side();
    parser.expect(Token::Kind::Equals, "'='");
    MonomialTree rhs = parser.parse_side();
    if (parser.peek().kind != Token::Kind::End)
        throw SyntaxError("trailing input after equation", parser.peek().pos);

    if (lhs.variable_count() == 0) throw NoVariable("no variable on the left side");
    if (lhs.variable_count() > 1 || rhs.variable_count() > 0)
        throw MultipleVariables("the variable must occur exactly once, on the left side");
    check_left_constants(lhs);
    return {lhs, evaluate_constant_side(rhs, src.field)};
}

std::string format_equation(const MonomialTree& lhs, const Octonion& rhs) {
    return lhs.format() + " = " + rhs.to_string();
}

} // namespace octlin
