#include "gasprove/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace gasprove {

std::string to_string(LasOutcome o)
{
    switch (o) {
    case LasOutcome::las:
        return "LAS";
    case LasOutcome::unstable:
        return "unstable";
    case LasOutcome::inconclusive:
        return "inconclusive";
    }
    return "?";
}

bool schur_stable(const UniPoly& p, std::vector<std::string>* table)
{
    if (p.is_zero()) {
        throw std::invalid_argument("stability of the zero polynomial");
    }
    UniPoly cur = p;
    while (cur.degree() > 0) {
        const auto& c = cur.coeffs();
        const Rational a0 = c.front();
        const Rational am = c.back();
        if (table != nullptr) {
            table->push_back("degree " + std::to_string(cur.degree()) + ": " + cur.str("z") + ", |a0| = "
                             + a0.abs().str() + ", |am| = " + am.abs().str());
        }
        if (!(a0.abs() < am.abs())) {
            return false;
        }
        // (am p - a0 p*) / z, where p* has the coefficients reversed
        std::vector<Rational> next(c.size() - 1);
        const std::size_t m = c.size() - 1;
        for (std::size_t i = 1; i <= m; ++i) {
            next[i - 1] = am * c[i] - a0 * c[m - i];
        }
        cur = UniPoly(std::move(next));
    }
    return true;
}

UniPoly root_products(const UniPoly& p)
{
    const int m = p.degree();
    if (m < 1) {
        return UniPoly::monomial(0, Rational(1));
    }
    const UniPoly monic = p.leading().inverse() * p;
    // p = z^m + e[1] z^(m-1) + ... + e[m]
    std::vector<Rational> e(m + 1);
    for (int j = 0; j <= m; ++j) {
        e[j] = monic.coeff(static_cast<unsigned>(m - j));
    }
    const int big = m * m;
    std::vector<Rational> s(big + 1);
    for (int k = 1; k <= big; ++k) {
        Rational acc;
        for (int j = 1; j < k && j <= m; ++j) {
            acc += e[j] * s[k - j];
        }
        if (k <= m) {
            acc += Rational(k) * e[k];
        }
        s[k] = -acc;
    }
    // power sums of the products are squares of the power sums of p
    std::vector<Rational> t(big + 1);
    for (int k = 1; k <= big; ++k) {
        t[k] = s[k] * s[k];
    }
    std::vector<Rational> f(big + 1);
    f[0] = Rational(1);
    for (int k = 1; k <= big; ++k) {
        Rational acc = t[k];
        for (int j = 1; j < k; ++j) {
            acc += f[j] * t[k - j];
        }
        f[k] = -acc / Rational(k);
    }
    std::vector<Rational> coeffs(big + 1);
    for (int j = 0; j <= big; ++j) {
        coeffs[big - j] = f[j];
    }
    return UniPoly(std::move(coeffs));
}

bool has_root_outside_unit_disk(const UniPoly& p)
{
    // a root z with |z| > 1 gives the real root z * conj(z) > 1 of the
    // product polynomial, and any real product > 1 needs a factor of modulus > 1
    const UniPoly r = squarefree_part(root_products(p));
    if (r.degree() < 1) {
        return false;
    }
    return SturmChain(r).count_above(Rational(1)) > 0;
}

LasVerdict las_check(const RecurrenceSpec& spec, const Equilibrium& eq)
{
    const std::size_t n = spec.order;
    const MultiPoly& num = spec.rhs.num();
    const MultiPoly& den = spec.rhs.den();
    const Rational dv = evaluate(den, eq.vector);
    const Rational nv = evaluate(num, eq.vector);
    if (dv.is_zero()) {
        throw std::domain_error("R is undefined at the equilibrium");
    }
    LasVerdict v{LasOutcome::inconclusive, {}, {}, {}};
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = Rational(1);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational dn = evaluate(derivative(num, i), eq.vector);
        const Rational dd = evaluate(derivative(den, i), eq.vector);
        const Rational c = (dn * dv - nv * dd) / (dv * dv);
        v.partials.push_back(c);
        coeffs[n - 1 - i] = -c;
    }
    v.characteristic = UniPoly(std::move(coeffs));
    if (schur_stable(v.characteristic, &v.table)) {
        v.outcome = LasOutcome::las;
    } else if (has_root_outside_unit_disk(v.characteristic)) {
        v.outcome = LasOutcome::unstable;
    } else {
        v.outcome = LasOutcome::inconclusive;
    }
    return v;
}

} // namespace gasprove
