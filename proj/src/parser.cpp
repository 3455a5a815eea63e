#include "gasprove/parser.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace gasprove {

namespace {

enum class Tok { number, variable, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
    std::size_t var = 0;
};

bool ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                ++i;
            }
            if (i < s.size() && (s[i] == '.' || s[i] == 'e' || s[i] == 'E')) {
                throw ParseError("floating-point literals are not allowed; write p/q", start);
            }
            out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (c == '.') {
            throw ParseError("floating-point literals are not allowed; write p/q", start);
        }
        if (ident_start(c)) {
            while (i < s.size() && ident_char(s[i])) {
                ++i;
            }
            std::string word(s.substr(start, i - start));
            const bool is_var = word.size() > 1 && word[0] == 'x'
                && std::all_of(word.begin() + 1, word.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
            if (is_var) {
                Token t{Tok::variable, word, start};
                t.var = std::stoul(word.substr(1));
                out.push_back(t);
            } else {
                out.push_back({Tok::ident, word, start});
            }
            continue;
        }
        Tok k;
        switch (c) {
        case '+': k = Tok::plus; break;
        case '-': k = Tok::minus; break;
        case '*': k = Tok::star; break;
        case '/': k = Tok::slash; break;
        case '^': k = Tok::caret; break;
        case '(': k = Tok::lparen; break;
        case ')': k = Tok::rparen; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({k, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, std::size_t nvars, const std::map<std::string, Rational>& params)
        : toks_(std::move(toks)), nvars_(nvars), params_(params)
    {
    }

    ParsedExpr parse()
    {
        ParsedExpr e = expr();
        if (peek().kind != Tok::end) {
            throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        }
        return e;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }

    bool accept(Tok k)
    {
        if (peek().kind == k) {
            ++i_;
            return true;
        }
        return false;
    }

    ParsedExpr constant(const Rational& c) const
    {
        return {MultiPoly::constant(nvars_, c), MultiPoly::constant(nvars_, Rational(1))};
    }

    static ParsedExpr add(const ParsedExpr& a, const ParsedExpr& b, bool subtract)
    {
        if (a.den == b.den) {
            return {subtract ? a.num - b.num : a.num + b.num, a.den};
        }
        MultiPoly lhs = a.num * b.den;
        MultiPoly rhs = b.num * a.den;
        return {subtract ? lhs - rhs : lhs + rhs, a.den * b.den};
    }

    ParsedExpr expr()
    {
        ParsedExpr acc = term();
        for (;;) {
            if (accept(Tok::plus)) {
                acc = add(acc, term(), false);
            } else if (accept(Tok::minus)) {
                acc = add(acc, term(), true);
            } else {
                return acc;
            }
        }
    }

    ParsedExpr term()
    {
        ParsedExpr acc = unary();
        for (;;) {
            if (accept(Tok::star)) {
                ParsedExpr rhs = unary();
                acc = {acc.num * rhs.num, acc.den * rhs.den};
            } else if (peek().kind == Tok::slash) {
                const auto pos = next().pos;
                ParsedExpr rhs = unary();
                if (rhs.num.is_zero()) {
                    throw ParseError("division by zero", pos);
                }
                acc = {acc.num * rhs.den, acc.den * rhs.num};
            } else {
                break;
            }
            simplify_constant_den(acc);
        }
        return acc;
    }

    static void simplify_constant_den(ParsedExpr& e)
    {
        if (e.den.is_constant() && e.den.constant_term() != Rational(1)) {
            e.num *= e.den.constant_term().inverse();
            e.den = MultiPoly::constant(e.den.nvars(), Rational(1));
        }
    }

    ParsedExpr unary()
    {
        if (accept(Tok::minus)) {
            ParsedExpr e = unary();
            return {-e.num, e.den};
        }
        if (accept(Tok::plus)) {
            return unary();
        }
        return power();
    }

    ParsedExpr power()
    {
        ParsedExpr base = atom();
        if (peek().kind == Tok::caret) {
            next();
            const Token& t = next();
            if (t.kind != Tok::number) {
                throw ParseError("exponent must be a non-negative integer literal", t.pos);
            }
            const unsigned long e = std::stoul(t.text);
            if (e > 4096) {
                throw ParseError("exponent too large", t.pos);
            }
            return {pow(base.num, static_cast<unsigned>(e)), pow(base.den, static_cast<unsigned>(e))};
        }
        return base;
    }

    ParsedExpr atom()
    {
        const Token& t = next();
        switch (t.kind) {
        case Tok::number:
            return constant(Rational(mpz_class(t.text)));
        case Tok::variable:
            return {MultiPoly::variable(nvars_, t.var), MultiPoly::constant(nvars_, Rational(1))};
        case Tok::ident: {
            const auto it = params_.find(t.text);
            if (it == params_.end()) {
                throw ParseError("unknown identifier '" + t.text + "' (variables are x0, x1, ...)", t.pos);
            }
            return constant(it->second);
        }
        case Tok::lparen: {
            ParsedExpr e = expr();
            if (!accept(Tok::rparen)) {
                throw ParseError("expected ')'", peek().pos);
            }
            return e;
        }
        default:
            throw ParseError(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    std::size_t nvars_;
    const std::map<std::string, Rational>& params_;
};

} // namespace

ParsedExpr parse_expression(std::string_view text, const ParseOptions& opts)
{
    auto toks = tokenize(text);
    std::size_t nvars = opts.min_vars;
    for (const auto& t : toks) {
        if (t.kind == Tok::variable) {
            nvars = std::max(nvars, t.var + 1);
        }
    }
    ParsedExpr e = Parser(std::move(toks), nvars, opts.params).parse();
    if (e.den.is_constant()) {
        const Rational d = e.den.constant_term();
        e.num *= d.inverse();
        e.den = MultiPoly::constant(nvars, Rational(1));
    }
    return e;
}

MultiPoly parse_polynomial(std::string_view text, const ParseOptions& opts)
{
    ParsedExpr e = parse_expression(text, opts);
    if (!e.den.is_constant()) {
        throw ParseError("expected a polynomial, got a rational function", 0);
    }
    return e.num;
}

} // namespace gasprove
