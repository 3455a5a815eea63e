#ifndef GASPROVE_PARSER_HPP
#define GASPROVE_PARSER_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gasprove/multipoly.hpp"

namespace gasprove {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos)
    {
    }
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

struct ParseOptions {
    /// Lower bound on the variable count; the parser raises it to one past
    /// the highest x<i> that occurs.
    std::size_t min_vars = 0;
    /// Named parameters substituted as exact constants.
    std::map<std::string, Rational> params;
};

/// A quotient num/den as written, with no sign or positivity invariant.
struct ParsedExpr {
    MultiPoly num;
    MultiPoly den;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | x<digits> | identifier | '(' expr ')'
/// Rationals are written as integer divisions ("3/4"). Floating-point
/// literals are rejected.
ParsedExpr parse_expression(std::string_view text, const ParseOptions& opts = {});

/// Parses and requires a polynomial result (constant denominator).
MultiPoly parse_polynomial(std::string_view text, const ParseOptions& opts = {});

} // namespace gasprove

#endif // GASPROVE_PARSER_HPP
