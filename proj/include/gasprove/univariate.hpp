#ifndef GASPROVE_UNIVARIATE_HPP
#define GASPROVE_UNIVARIATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gasprove/multipoly.hpp"

namespace gasprove {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly monomial(unsigned degree, const Rational& c);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    /// As a one-variable MultiPoly.
    MultiPoly to_multipoly() const;
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

UniPoly derivative(const UniPoly& p);
/// Euclidean division; throws on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& p);

/// Collapses every variable of p onto a single variable: p(x, x, ..., x).
UniPoly diagonal(const MultiPoly& p);

/// Sturm chain of a nonzero polynomial.
class SturmChain {
public:
    explicit SturmChain(const UniPoly& p);

    /// Number of distinct real roots in (lo, hi].
    int count(const Rational& lo, const Rational& hi) const;
    /// Number of distinct real roots in (lo, +inf).
    int count_above(const Rational& lo) const;

private:
    int variations_at(const Rational& x) const;
    int variations_at_infinity() const;
    std::vector<UniPoly> chain_;
};

/// Upper bound on the absolute value of every real root (Cauchy bound).
Rational root_bound(const UniPoly& p);

/// Simplest rational (smallest denominator) strictly between lo and hi,
/// 0 <= lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Given a squarefree polynomial with exactly one real root in (lo, hi],
/// returns that root if it is rational, otherwise nullopt.
std::optional<Rational> rational_root_in(const UniPoly& p, Rational lo, Rational hi);

} // namespace gasprove

#endif // GASPROVE_UNIVARIATE_HPP
