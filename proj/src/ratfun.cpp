#include "gasprove/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace gasprove {

bool has_positive_coefficients(const MultiPoly& p)
{
    return !p.is_zero()
        && std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second.sign() > 0; });
}

bool has_nonnegative_coefficients(const MultiPoly& p)
{
    return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second.sign() >= 0; });
}

RatFun::RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (num_.nvars() != den_.nvars()) {
        throw std::invalid_argument("numerator and denominator variable counts differ");
    }
    if (!has_positive_coefficients(den_)) {
        throw std::invalid_argument("denominator must be nonzero with all coefficients positive");
    }
    const Rational lead = den_.terms().begin()->second;
    if (lead != Rational(1)) {
        num_ *= lead.inverse();
        den_ *= lead.inverse();
    }
}

RatFun RatFun::polynomial(MultiPoly p)
{
    const auto n = p.nvars();
    return RatFun(std::move(p), MultiPoly::constant(n, Rational(1)));
}

Rational RatFun::evaluate(std::span<const Rational> point) const
{
    const Rational d = gasprove::evaluate(den_, point);
    if (d.is_zero()) {
        throw std::domain_error("denominator vanishes at evaluation point");
    }
    return gasprove::evaluate(num_, point) / d;
}

} // namespace gasprove
