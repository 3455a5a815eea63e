#include "gasprove/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gasprove {

namespace {

void require_same_nvars(const MultiPoly& p, const MultiPoly& q)
{
    if (p.nvars() != q.nvars()) {
        throw std::invalid_argument("variable count mismatch: " + std::to_string(p.nvars()) + " vs "
                                    + std::to_string(q.nvars()));
    }
}

void require_var(const MultiPoly& p, std::size_t var)
{
    if (var >= p.nvars()) {
        throw std::out_of_range("variable index " + std::to_string(var) + " out of range for "
                                + std::to_string(p.nvars()) + " variables");
    }
}

void require_length(const MultiPoly& p, std::size_t n)
{
    if (n != p.nvars()) {
        throw std::invalid_argument("expected " + std::to_string(p.nvars()) + " values, got " + std::to_string(n));
    }
}

} // namespace

std::uint32_t total_degree(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const
{
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) {
        return da > db;
    }
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c)
{
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t var)
{
    if (var >= nvars) {
        throw std::out_of_range("variable index out of range");
    }
    Exponents e(nvars, 0);
    e[var] = 1;
    return monomial(std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(Exponents exps, const Rational& c)
{
    MultiPoly p(exps.size());
    p.add_term(exps, c);
    return p;
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && gasprove::total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::coefficient(const Exponents& e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const
{
    return coefficient(Exponents(nvars_, 0));
}

std::uint32_t MultiPoly::total_degree() const
{
    // grlex puts the largest total degree first
    return terms_.empty() ? 0 : gasprove::total_degree(terms_.begin()->first);
}

void MultiPoly::add_term(const Exponents& e, const Rational& c)
{
    if (e.size() != nvars_) {
        throw std::invalid_argument("exponent vector length does not match variable count");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    require_same_nvars(*this, o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    require_same_nvars(*this, o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

MultiPoly operator-(const MultiPoly& a)
{
    return a * Rational(-1);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    require_same_nvars(a, b);
    MultiPoly r(a.nvars());
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly arith(const MultiPoly& p, const MultiPoly& q, ArithKind kind)
{
    switch (kind) {
    case ArithKind::add:
        return p + q;
    case ArithKind::sub:
        return p - q;
    case ArithKind::mul:
        return p * q;
    }
    throw std::invalid_argument("unknown arithmetic kind");
}

MultiPoly pow(const MultiPoly& p, unsigned e)
{
    MultiPoly result = MultiPoly::constant(p.nvars(), Rational(1));
    MultiPoly base = p;
    while (e > 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> point)
{
    require_length(p, point.size());
    std::vector<std::vector<Rational>> powers(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        const auto d = degree_in(p, i);
        powers[i].reserve(d + 1);
        powers[i].emplace_back(1);
        for (std::uint32_t k = 1; k <= d; ++k) {
            powers[i].push_back(powers[i].back() * point[i]);
        }
    }
    Rational sum;
    for (const auto& [e, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                t *= powers[i][e[i]];
            }
        }
        sum += t;
    }
    return sum;
}

std::uint32_t degree_in(const MultiPoly& p, std::size_t var)
{
    require_var(p, var);
    std::uint32_t d = 0;
    for (const auto& [e, c] : p.terms()) {
        d = std::max(d, e[var]);
    }
    return d;
}

MultiPoly derivative(const MultiPoly& p, std::size_t var)
{
    require_var(p, var);
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0) {
            continue;
        }
        Exponents d = e;
        --d[var];
        r.add_term(d, c * Rational(static_cast<unsigned long>(e[var])));
    }
    return r;
}

MultiPoly shift_var(const MultiPoly& p, std::size_t var, const Rational& offset)
{
    require_var(p, var);
    if (offset.is_zero()) {
        return p;
    }
    const auto d = degree_in(p, var);
    std::vector<Rational> mu_pow{Rational(1)};
    for (std::uint32_t k = 1; k <= d; ++k) {
        mu_pow.push_back(mu_pow.back() * offset);
    }
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents out = e;
        const auto k = e[var];
        for (std::uint32_t j = 0; j <= k; ++j) {
            out[var] = j;
            r.add_term(out, c * Rational(binomial(k, j)) * mu_pow[k - j]);
        }
    }
    return r;
}

MultiPoly shift(const MultiPoly& p, std::span<const Rational> offsets)
{
    require_length(p, offsets.size());
    MultiPoly r = p;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        r = shift_var(r, i, offsets[i]);
    }
    return r;
}

MultiPoly invert_var(const MultiPoly& p, std::size_t var)
{
    const auto d = degree_in(p, var);
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents out = e;
        out[var] = d - e[var];
        r.add_term(out, c);
    }
    return r;
}

MultiPoly box_map(const MultiPoly& p, std::span<const std::pair<Rational, Rational>> bounds)
{
    require_length(p, bounds.size());
    for (const auto& [a, b] : bounds) {
        if (a.sign() < 0 || !(a < b)) {
            throw std::invalid_argument("degenerate box: need 0 <= a < b, got [" + a.str() + ", " + b.str() + "]");
        }
    }
    MultiPoly r = p;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        const auto& [a, b] = bounds[i];
        // degrees are taken from the current intermediate polynomial
        r = shift_var(r, i, a);
        r = invert_var(r, i);
        r = shift_var(r, i, (b - a).inverse());
    }
    return r;
}

MultiPoly set_zero(const MultiPoly& p, std::span<const std::size_t> vars)
{
    for (auto v : vars) {
        require_var(p, v);
    }
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        const bool vanishes = std::any_of(vars.begin(), vars.end(), [&e = e](std::size_t v) { return e[v] != 0; });
        if (!vanishes) {
            r.add_term(e, c);
        }
    }
    return r;
}

Rational content(const MultiPoly& p)
{
    if (p.is_zero()) {
        return Rational(1);
    }
    mpz_class g = 0;
    mpz_class l = 1;
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.raw().get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    return Rational(g, l);
}

MultiPoly primitive_part(const MultiPoly& p)
{
    return p * content(p).inverse();
}

std::string to_string(const MultiPoly& p)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        names.push_back("x" + std::to_string(i));
    }
    return to_string(p, names);
}

std::string to_string(const MultiPoly& p, std::span<const std::string> names)
{
    if (names.size() < p.nvars()) {
        throw std::invalid_argument("not enough variable names");
    }
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool is_const = total_degree(e) == 0;
        Rational mag = c.abs();
        if (c.sign() < 0) {
            os << "-";
        } else if (!first) {
            os << "+";
        }
        first = false;
        bool need_star = false;
        if (is_const || mag != Rational(1)) {
            os << mag;
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (need_star) {
                os << "*";
            }
            os << names[i];
            if (e[i] > 1) {
                os << "^" << e[i];
            }
            need_star = true;
        }
    }
    return os.str();
}

} // namespace gasprove
