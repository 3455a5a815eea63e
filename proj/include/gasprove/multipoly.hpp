#ifndef GASPROVE_MULTIPOLY_HPP
#define GASPROVE_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gasprove/rational.hpp"

namespace gasprove {

using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

/// Graded lexicographic order, largest first: total degree descending,
/// ties broken lexicographically with x0 > x1 > ...
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by exponent vector, iterated in graded
/// lexicographic order (largest term first). Zero coefficients are never
/// stored, so two polynomials are equal iff their term maps are equal.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t var);
    static MultiPoly monomial(Exponents exps, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Exponents& e) const;
    Rational constant_term() const;
    /// Largest total degree; 0 for the zero polynomial.
    std::uint32_t total_degree() const;

    /// Adds c * x^e in place, pruning the term if it cancels.
    void add_term(const Exponents& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    std::size_t nvars_;
    TermMap terms_;
};

enum class ArithKind { add, sub, mul };

MultiPoly arith(const MultiPoly& p, const MultiPoly& q, ArithKind kind);
MultiPoly pow(const MultiPoly& p, unsigned e);

Rational evaluate(const MultiPoly& p, std::span<const Rational> point);

/// Max exponent of `var`; 0 for the zero polynomial.
std::uint32_t degree_in(const MultiPoly& p, std::size_t var);

MultiPoly derivative(const MultiPoly& p, std::size_t var);

/// x_i -> x_i + offsets[i] for every i.
MultiPoly shift(const MultiPoly& p, std::span<const Rational> offsets);
MultiPoly shift_var(const MultiPoly& p, std::size_t var, const Rational& offset);

/// P(.., 1/x_var, ..) * x_var^deg_var(P). The zero polynomial maps to zero.
MultiPoly invert_var(const MultiPoly& p, std::size_t var);

/// Maps the half-open box prod (a_i, b_i] onto the positive orthant:
/// x_i -> 1/(x_i + 1/(b_i - a_i)) + a_i, clearing denominators with the
/// degree of the intermediate polynomial in x_i.
MultiPoly box_map(const MultiPoly& p, std::span<const std::pair<Rational, Rational>> bounds);

/// Substitutes x_i = 0 for every i in `vars`.
MultiPoly set_zero(const MultiPoly& p, std::span<const std::size_t> vars);

/// Positive rational c such that p / c has coprime integer coefficients.
Rational content(const MultiPoly& p);
/// p / content(p); preserves sign.
MultiPoly primitive_part(const MultiPoly& p);

/// Canonical text in graded lexicographic order, e.g. "x0^2-x0*x1+x1^2".
std::string to_string(const MultiPoly& p);
std::string to_string(const MultiPoly& p, std::span<const std::string> names);

} // namespace gasprove

#endif // GASPROVE_MULTIPOLY_HPP
