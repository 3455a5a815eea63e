#include "gasprove/recurrence.hpp"

#include <algorithm>

#include "gasprove/parser.hpp"
#include "gasprove/univariate.hpp"

namespace gasprove {

std::string to_string(Domain d)
{
    return d == Domain::closed ? "closed" : "open";
}

RecurrenceSpec parse_rde(const std::string& text, const std::map<std::string, Rational>& params)
{
    ParseOptions opts;
    opts.min_vars = 1;
    opts.params = params;
    ParsedExpr e = parse_expression(text, opts);
    for (const MultiPoly* p : {&e.num, &e.den}) {
        if (!has_nonnegative_coefficients(*p)) {
            throw UnsupportedInput("negative coefficient in '" + text + "': the method needs R with non-negative coefficients");
        }
    }
    if (e.num.is_zero()) {
        throw UnsupportedInput("R is identically zero");
    }
    const std::size_t order = e.num.nvars();
    const Domain domain = e.den.constant_term().sign() > 0 ? Domain::closed : Domain::open;
    return RecurrenceSpec{order, RatFun(std::move(e.num), std::move(e.den)), domain, text};
}

Equilibrium find_equilibrium(const RecurrenceSpec& spec)
{
    // E(x) = x * den(x, ..., x) - num(x, ..., x)
    const UniPoly e = UniPoly::monomial(1, Rational(1)) * diagonal(spec.rhs.den()) - diagonal(spec.rhs.num());
    if (e.is_zero()) {
        throw EquilibriumError(EquilibriumError::Kind::not_unique, "every point is an equilibrium of " + spec.source);
    }
    const bool zero_root = e(Rational(0)).is_zero();
    UniPoly positive_part = squarefree_part(e);
    if (zero_root) {
        positive_part = divmod(positive_part, UniPoly::monomial(1, Rational(1))).first;
    }
    const int positive_roots = positive_part.degree() < 1 ? 0 : SturmChain(positive_part).count_above(Rational(0));

    auto make = [&spec](const Rational& v, Domain d) {
        return Equilibrium{v, std::vector<Rational>(spec.order, v), d};
    };
    auto positive_root = [&]() {
        auto r = rational_root_in(positive_part, Rational(0), root_bound(positive_part));
        if (!r) {
            throw EquilibriumError(EquilibriumError::Kind::irrational,
                                   "the unique equilibrium of " + spec.source + " is irrational (root of "
                                       + e.str() + ")");
        }
        return *r;
    };

    if (spec.domain == Domain::closed) {
        if (zero_root && positive_roots == 0) {
            return make(Rational(0), Domain::closed);
        }
        if (!zero_root && positive_roots == 1) {
            return make(positive_root(), Domain::closed);
        }
        if (zero_root && positive_roots == 1) {
            // (0, inf) is invariant for positive-coefficient R, and there the fixed point is unique
            return make(positive_root(), Domain::open);
        }
    } else if (positive_roots == 1) {
        return make(positive_root(), Domain::open);
    }
    if (positive_roots == 0 && !zero_root) {
        throw EquilibriumError(EquilibriumError::Kind::no_root, "no equilibrium of " + spec.source + " in the domain");
    }
    throw EquilibriumError(EquilibriumError::Kind::not_unique,
                           "equilibrium of " + spec.source + " is not unique in the domain ("
                               + std::to_string(positive_roots + (zero_root ? 1 : 0)) + " roots of " + e.str() + ")");
}

namespace {

/// scale * prod(num factors) / prod(den factors); factors are primitive
/// integer polynomials with positive leading coefficient.
struct FactoredRatFun {
    Rational scale{1};
    std::vector<std::pair<MultiPoly, unsigned>> num;
    std::vector<std::pair<MultiPoly, unsigned>> den;
};

using FactorList = std::vector<std::pair<MultiPoly, unsigned>>;

void add_factor(FactorList& list, const MultiPoly& f, unsigned mult)
{
    if (mult == 0) {
        return;
    }
    for (auto& [g, m] : list) {
        if (g == f) {
            m += mult;
            return;
        }
    }
    list.emplace_back(f, mult);
}

/// Splits p into (scalar, normalized factor). The factor is empty for constants.
Rational normalize_into(FactorList& list, const MultiPoly& p)
{
    if (p.is_constant()) {
        return p.constant_term();
    }
    Rational c = content(p);
    if (p.terms().begin()->second.sign() < 0) {
        c = -c;
    }
    add_factor(list, p * c.inverse(), 1);
    return c;
}

void cancel_common(FactoredRatFun& f)
{
    for (auto& [g, m] : f.num) {
        for (auto& [h, n] : f.den) {
            if (m > 0 && n > 0 && g == h) {
                const unsigned k = std::min(m, n);
                m -= k;
                n -= k;
            }
        }
    }
    auto empty = [](const auto& fm) { return fm.second == 0; };
    std::erase_if(f.num, empty);
    std::erase_if(f.den, empty);
}

MultiPoly expand(const FactorList& list, std::size_t nvars)
{
    MultiPoly r = MultiPoly::constant(nvars, Rational(1));
    for (const auto& [f, m] : list) {
        r = r * pow(f, m);
    }
    return r;
}

class PowerCache {
public:
    explicit PowerCache(MultiPoly base) : pows_{MultiPoly::constant(base.nvars(), Rational(1)), std::move(base)} {}

    const MultiPoly& operator[](std::uint32_t e)
    {
        while (pows_.size() <= e) {
            pows_.push_back(pows_.back() * pows_[1]);
        }
        return pows_[e];
    }

private:
    std::vector<MultiPoly> pows_;
};

/// Homogenized substitution sum c * prod N_i^a_i * D_i^(deg_i - a_i).
MultiPoly homogenize(const MultiPoly& poly, std::vector<PowerCache>& num_pows, std::vector<PowerCache>& den_pows,
                     std::size_t nvars)
{
    std::vector<std::uint32_t> deg(poly.nvars());
    for (std::size_t i = 0; i < poly.nvars(); ++i) {
        deg[i] = degree_in(poly, i);
    }
    MultiPoly acc(nvars);
    for (const auto& [e, c] : poly.terms()) {
        MultiPoly t = MultiPoly::constant(nvars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                t = t * num_pows[i][e[i]];
            }
            if (deg[i] > e[i]) {
                t = t * den_pows[i][deg[i] - e[i]];
            }
        }
        acc += t;
    }
    return acc;
}

FactoredRatFun compose(const RatFun& r, const std::vector<const FactoredRatFun*>& args, std::size_t nvars)
{
    std::vector<PowerCache> num_pows;
    std::vector<PowerCache> den_pows;
    for (const auto* a : args) {
        num_pows.emplace_back(expand(a->num, nvars) * a->scale);
        den_pows.emplace_back(expand(a->den, nvars));
    }
    const MultiPoly hnum = homogenize(r.num(), num_pows, den_pows, nvars);
    const MultiPoly hden = homogenize(r.den(), num_pows, den_pows, nvars);

    FactoredRatFun out;
    out.scale = normalize_into(out.num, hnum) / normalize_into(out.den, hden);
    for (std::size_t i = 0; i < args.size(); ++i) {
        const auto a_i = degree_in(r.num(), i);
        const auto b_i = degree_in(r.den(), i);
        for (const auto& [f, m] : args[i]->den) {
            add_factor(out.num, f, m * b_i);
            add_factor(out.den, f, m * a_i);
        }
    }
    cancel_common(out);
    for (const auto& [f, m] : out.den) {
        if (!has_positive_coefficients(f)) {
            throw std::logic_error("composition produced a denominator factor with a non-positive coefficient: "
                                   + to_string(f));
        }
    }
    return out;
}

/// Returns y_K, y_{K-1}, ..., y_{K-k} where y_{-j} = x_j.
std::vector<FactoredRatFun> q_power_factored(const RecurrenceSpec& spec, unsigned k)
{
    const std::size_t n = spec.order;
    std::vector<FactoredRatFun> seq;
    for (std::size_t j = n; j-- > 0;) {
        FactoredRatFun v;
        v.num.emplace_back(MultiPoly::variable(n, j), 1);
        seq.push_back(std::move(v));
    }
    // seq holds y_{-k}, ..., y_0 (oldest first)
    for (unsigned step = 0; step < k; ++step) {
        std::vector<const FactoredRatFun*> args;
        for (std::size_t i = 0; i < n; ++i) {
            args.push_back(&seq[seq.size() - 1 - i]);
        }
        FactoredRatFun next = compose(spec.rhs, args, n);
        seq.push_back(std::move(next));
    }
    std::vector<FactoredRatFun> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(seq[seq.size() - 1 - i]);
    }
    return out;
}

RatFun to_ratfun(const FactoredRatFun& f, std::size_t nvars)
{
    return RatFun(expand(f.num, nvars) * f.scale, expand(f.den, nvars));
}

} // namespace

VectorMap vector_map(const RecurrenceSpec& spec)
{
    return VectorMap{q_power(spec, 1)};
}

std::vector<RatFun> q_power(const RecurrenceSpec& spec, unsigned k)
{
    if (k == 0) {
        throw std::invalid_argument("K must be >= 1");
    }
    std::vector<RatFun> out;
    for (const auto& f : q_power_factored(spec, k)) {
        out.push_back(to_ratfun(f, spec.order));
    }
    return out;
}

MultiPoly build_contraction_poly(const RecurrenceSpec& spec, const Equilibrium& eq, unsigned k)
{
    if (k == 0) {
        throw std::invalid_argument("K must be >= 1");
    }
    const std::size_t n = spec.order;
    const auto comps = q_power_factored(spec, k);

    // least common multiple of the squared component denominators
    FactorList lcm;
    for (const auto& c : comps) {
        for (const auto& [f, m] : c.den) {
            auto it = std::find_if(lcm.begin(), lcm.end(), [&f = f](const auto& fm) { return fm.first == f; });
            if (it == lcm.end()) {
                lcm.emplace_back(f, 2 * m);
            } else {
                it->second = std::max(it->second, 2 * m);
            }
        }
    }

    const MultiPoly xbar = MultiPoly::constant(n, eq.value);
    MultiPoly dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        const MultiPoly d = MultiPoly::variable(n, i) - xbar;
        dist += d * d;
    }
    MultiPoly p = expand(lcm, n) * dist;

    for (const auto& c : comps) {
        FactorList rest = lcm;
        for (const auto& [f, m] : c.den) {
            for (auto& [g, r] : rest) {
                if (g == f) {
                    r -= 2 * m;
                }
            }
        }
        const MultiPoly den = expand(c.den, n);
        const MultiPoly diff = expand(c.num, n) * c.scale - den * eq.value;
        p -= diff * diff * expand(rest, n);
    }
    if (p.is_zero()) {
        return p;
    }
    return primitive_part(p);
}

std::vector<Rational> iterate_map(const RecurrenceSpec& spec, std::vector<Rational> state, unsigned k)
{
    if (state.size() != spec.order) {
        throw std::invalid_argument("state length does not match recurrence order");
    }
    for (unsigned step = 0; step < k; ++step) {
        const Rational next = spec.rhs.evaluate(state);
        state.insert(state.begin(), next);
        state.pop_back();
    }
    return state;
}

} // namespace gasprove
