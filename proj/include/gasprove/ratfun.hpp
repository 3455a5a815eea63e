#ifndef GASPROVE_RATFUN_HPP
#define GASPROVE_RATFUN_HPP

#include <span>

#include "gasprove/multipoly.hpp"

namespace gasprove {

/// Quotient num/den whose denominator has only positive coefficients, so
/// it is strictly positive on the open positive orthant.
///
/// The representation is scaled so the leading (grlex) coefficient of den
/// is 1. No common factors are cancelled here.
class RatFun {
public:
    /// Throws std::invalid_argument if den is zero or has a non-positive
    /// coefficient.
    RatFun(MultiPoly num, MultiPoly den);

    static RatFun polynomial(MultiPoly p);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    std::size_t nvars() const { return num_.nvars(); }

    /// Throws std::domain_error if den vanishes at the point.
    Rational evaluate(std::span<const Rational> point) const;

    friend bool operator==(const RatFun& a, const RatFun& b) = default;

private:
    MultiPoly num_;
    MultiPoly den_;
};

/// True if every stored coefficient is > 0 and p is nonzero.
bool has_positive_coefficients(const MultiPoly& p);
/// True if every stored coefficient is >= 0.
bool has_nonnegative_coefficients(const MultiPoly& p);

} // namespace gasprove

#endif // GASPROVE_RATFUN_HPP
