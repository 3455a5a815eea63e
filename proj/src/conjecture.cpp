#include "gasprove/conjecture.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace gasprove {

namespace {

class MeshEvaluator {
public:
    MeshEvaluator(const MultiPoly& p, const Rational& eps) : nvars_(p.nvars())
    {
        // P(eps * i) = sum (c eps^|e|) i^e, so every term becomes integer-valued
        // up to one common scale
        for (const auto& [e, c] : p.terms()) {
            terms_.emplace_back(e, c * eps.pow(total_degree(e)));
        }
    }

    const Rational& operator()(const std::vector<unsigned>& idx)
    {
        auto it = cache_.find(idx);
        if (it != cache_.end()) {
            return it->second;
        }
        Rational sum;
        for (const auto& [e, c] : terms_) {
            mpz_class m = 1;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] != 0) {
                    mpz_class pw;
                    mpz_ui_pow_ui(pw.get_mpz_t(), idx[i], e[i]);
                    m *= pw;
                }
            }
            sum += c * Rational(m);
        }
        return cache_.emplace(idx, std::move(sum)).first->second;
    }

private:
    std::size_t nvars_;
    std::vector<std::pair<Exponents, Rational>> terms_;
    std::map<std::vector<unsigned>, Rational> cache_;
};

std::vector<std::vector<unsigned>> start_points(std::size_t nvars, const MeshParams& params)
{
    std::set<std::vector<unsigned>> starts;
    const unsigned lattice_budget = std::max(1U, params.restarts / 2);
    unsigned per_axis = 2;
    while (std::pow(per_axis + 1, static_cast<double>(nvars)) <= lattice_budget && per_axis + 1 <= params.n) {
        ++per_axis;
    }
    per_axis = std::min(per_axis, params.n);
    std::vector<unsigned> ticks;
    for (unsigned j = 0; j < per_axis; ++j) {
        ticks.push_back(per_axis == 1 ? 1 : 1 + static_cast<unsigned>((static_cast<std::uint64_t>(j) * (params.n - 1)) / (per_axis - 1)));
    }
    std::vector<unsigned> digit(nvars, 0);
    while (starts.size() < lattice_budget) {
        std::vector<unsigned> idx(nvars);
        for (std::size_t i = 0; i < nvars; ++i) {
            idx[i] = ticks[digit[i]];
        }
        starts.insert(idx);
        std::size_t pos = 0;
        while (pos < nvars && ++digit[pos] == ticks.size()) {
            digit[pos++] = 0;
        }
        if (pos == nvars) {
            break;
        }
    }
    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<unsigned> pick(1, params.n);
    for (unsigned r = 0; r < params.restarts; ++r) {
        std::vector<unsigned> idx(nvars);
        for (auto& v : idx) {
            v = pick(rng);
        }
        starts.insert(std::move(idx));
        if (starts.size() >= params.restarts) {
            break;
        }
    }
    return {starts.begin(), starts.end()};
}

} // namespace

std::vector<MeshPoint> mesh_minimize(const MultiPoly& p, const MeshParams& params)
{
    if (params.eps.sign() <= 0 || params.n == 0 || params.restarts == 0) {
        throw std::invalid_argument("mesh needs eps > 0, N >= 1 and restarts >= 1");
    }
    const std::size_t nvars = p.nvars();
    MeshEvaluator eval(p, params.eps);
    std::set<std::vector<unsigned>> minima;
    for (auto cur : start_points(nvars, params)) {
        Rational cur_val = eval(cur);
        for (;;) {
            std::vector<unsigned> best;
            Rational best_val = cur_val;
            for (std::size_t i = 0; i < nvars; ++i) {
                for (int step : {-1, 1}) {
                    const long next = static_cast<long>(cur[i]) + step;
                    if (next < 1 || next > static_cast<long>(params.n)) {
                        continue;
                    }
                    std::vector<unsigned> nb = cur;
                    nb[i] = static_cast<unsigned>(next);
                    const Rational& v = eval(nb);
                    if (v < best_val) {
                        best_val = v;
                        best = std::move(nb);
                    }
                }
            }
            if (best.empty()) {
                break;
            }
            cur = std::move(best);
            cur_val = best_val;
        }
        minima.insert(cur);
    }
    std::vector<MeshPoint> out;
    for (const auto& idx : minima) {
        MeshPoint m{idx, {}, eval(idx)};
        for (auto i : idx) {
            m.point.push_back(params.eps * Rational(i));
        }
        out.push_back(std::move(m));
    }
    std::stable_sort(out.begin(), out.end(), [](const MeshPoint& a, const MeshPoint& b) { return a.value < b.value; });
    return out;
}

Conjecture conjecture_k(const RecurrenceSpec& spec, const Equilibrium& eq, const MeshParams& params, unsigned first_k)
{
    Conjecture c;
    for (unsigned k = std::max(1U, first_k); k <= params.max_k; ++k) {
        const MultiPoly p = build_contraction_poly(spec, eq, k);
        KTrial trial{k, std::nullopt};
        if (p.is_zero()) {
            c.trials.push_back(std::move(trial));
            continue;
        }
        const auto minima = mesh_minimize(p, params);
        trial.best = minima.front();
        const bool ok = trial.best->value.sign() >= 0;
        c.trials.push_back(std::move(trial));
        if (ok) {
            c.k = k;
            break;
        }
    }
    return c;
}

} // namespace gasprove
