#include "gasprove/univariate.hpp"

#include <sstream>
#include <stdexcept>

namespace gasprove {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

UniPoly UniPoly::monomial(unsigned degree, const Rational& c)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

Rational UniPoly::operator()(const Rational& x) const
{
    Rational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * x + *it;
    }
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b)
{
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = a.coeff(static_cast<unsigned>(i)) + b.coeff(static_cast<unsigned>(i));
    }
    return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b)
{
    return a + Rational(-1) * b;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return UniPoly(std::move(r));
}

UniPoly operator*(const Rational& s, const UniPoly& a)
{
    std::vector<Rational> r = a.c_;
    for (auto& c : r) {
        c *= s;
    }
    return UniPoly(std::move(r));
}

MultiPoly UniPoly::to_multipoly() const
{
    MultiPoly p(1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        p.add_term({static_cast<std::uint32_t>(i)}, c_[i]);
    }
    return p;
}

std::string UniPoly::str(const std::string& var) const
{
    const std::string name = var;
    return to_string(to_multipoly(), std::span<const std::string>(&name, 1));
}

UniPoly derivative(const UniPoly& p)
{
    if (p.degree() < 1) {
        return {};
    }
    std::vector<Rational> r(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
        r[i - 1] = p.coeffs()[i] * Rational(static_cast<unsigned long>(i));
    }
    return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<Rational> rem = a.coeffs();
    if (a.degree() < b.degree()) {
        return {UniPoly(), a};
    }
    std::vector<Rational> quot(a.degree() - b.degree() + 1);
    const Rational lead = b.leading();
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        const Rational f = rem[k] / lead;
        if (f.is_zero()) {
            continue;
        }
        quot[k - db] = f;
        for (int j = 0; j <= db; ++j) {
            rem[k - db + j] -= f * b.coeffs()[j];
        }
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly x = a;
    UniPoly y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) {
        return x;
    }
    return x.leading().inverse() * x;
}

UniPoly squarefree_part(const UniPoly& p)
{
    if (p.degree() < 1) {
        return p;
    }
    const UniPoly g = gcd(p, derivative(p));
    return divmod(p, g).first;
}

UniPoly diagonal(const MultiPoly& p)
{
    std::vector<Rational> c(p.total_degree() + 1);
    for (const auto& [e, v] : p.terms()) {
        c[total_degree(e)] += v;
    }
    return UniPoly(std::move(c));
}

SturmChain::SturmChain(const UniPoly& p)
{
    if (p.is_zero()) {
        throw std::invalid_argument("Sturm chain of the zero polynomial");
    }
    chain_.push_back(p);
    chain_.push_back(derivative(p));
    while (!chain_.back().is_zero()) {
        const UniPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
        chain_.push_back(Rational(-1) * r);
    }
    chain_.pop_back();
}

namespace {

int count_sign_changes(const std::vector<int>& signs)
{
    int changes = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) {
            continue;
        }
        if (prev != 0 && s != prev) {
            ++changes;
        }
        prev = s;
    }
    return changes;
}

} // namespace

int SturmChain::variations_at(const Rational& x) const
{
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) {
        signs.push_back(q(x).sign());
    }
    return count_sign_changes(signs);
}

int SturmChain::variations_at_infinity() const
{
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) {
        signs.push_back(q.leading().sign());
    }
    return count_sign_changes(signs);
}

int SturmChain::count(const Rational& lo, const Rational& hi) const
{
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_above(const Rational& lo) const
{
    return variations_at(lo) - variations_at_infinity();
}

Rational root_bound(const UniPoly& p)
{
    if (p.degree() < 1) {
        return Rational(1);
    }
    Rational m;
    for (int i = 0; i < p.degree(); ++i) {
        m = std::max(m, (p.coeffs()[i] / p.leading()).abs());
    }
    return Rational(1) + m;
}

namespace {

// Simplest rational in the open interval (lo, hi) with 0 <= lo < hi, where
// hi may be +infinity.
Rational simplest_nonneg(const Rational& lo, const std::optional<Rational>& hi)
{
    const Rational candidate = Rational(mpz_class(lo.floor() + 1));
    if (!hi || candidate < *hi) {
        return candidate;
    }
    // lo and hi share the integer part n, with hi <= n + 1
    const Rational n(lo.floor());
    const Rational lo_frac = lo - n;
    const Rational hi_frac = *hi - n;
    std::optional<Rational> upper;
    if (!lo_frac.is_zero()) {
        upper = lo_frac.inverse();
    }
    return n + simplest_nonneg(hi_frac.inverse(), upper).inverse();
}

} // namespace

Rational simplest_between(const Rational& lo, const Rational& hi)
{
    if (!(lo < hi)) {
        throw std::invalid_argument("simplest_between needs lo < hi");
    }
    if (lo.sign() < 0 && hi.sign() > 0) {
        return Rational(0);
    }
    if (hi.sign() <= 0) {
        return -simplest_nonneg(-hi, -lo);
    }
    return simplest_nonneg(lo, hi);
}

std::optional<Rational> rational_root_in(const UniPoly& p, Rational lo, Rational hi)
{
    if (p(hi).is_zero()) {
        return hi;
    }
    // rational roots of the primitive integer form have denominators dividing its leading coefficient
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    const UniPoly scaled = Rational(lcm_den) * p;
    mpz_class g = 0;
    for (const auto& c : scaled.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.raw().get_num_mpz_t());
    }
    const Rational lead = (scaled.leading() / Rational(g)).abs();
    const Rational width = (lead * lead).inverse();

    const SturmChain sturm(p);
    while (!(hi - lo < width)) {
        const Rational mid = (lo + hi) / Rational(2);
        if (p(mid).is_zero()) {
            return mid;
        }
        if (sturm.count(lo, mid) > 0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if (p(hi).is_zero()) {
        return hi;
    }
    const Rational s = simplest_between(lo, hi);
    if (p(s).is_zero()) {
        return s;
    }
    return std::nullopt;
}

} // namespace gasprove
