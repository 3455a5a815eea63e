#ifndef GASPROVE_TESTS_SUPPORT_HPP
#define GASPROVE_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "gasprove/multipoly.hpp"

namespace gasprove::testing {

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 8)
{
    std::uniform_int_distribution<long> den(1, max_den);
    const long q = den(rng);
    std::uniform_int_distribution<long> num(lo * q, hi * q);
    return Rational(mpz_class(num(rng)), mpz_class(q));
}

inline Rational random_positive(std::mt19937_64& rng, long hi = 4, long max_den = 8)
{
    std::uniform_int_distribution<long> den(1, max_den);
    const long q = den(rng);
    std::uniform_int_distribution<long> num(1, hi * q);
    return Rational(mpz_class(num(rng)), mpz_class(q));
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n, long lo, long hi)
{
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) {
        v.push_back(random_rational(rng, lo, hi));
    }
    return v;
}

inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_deg, unsigned terms)
{
    std::uniform_int_distribution<unsigned> exp(0, max_deg);
    MultiPoly p(nvars);
    for (unsigned t = 0; t < terms; ++t) {
        Exponents e(nvars);
        for (auto& x : e) {
            x = exp(rng);
        }
        p.add_term(e, random_rational(rng, -5, 5));
    }
    return p;
}

} // namespace gasprove::testing

#endif // GASPROVE_TESTS_SUPPORT_HPP
