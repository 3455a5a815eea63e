#include "gasprove/pipeline.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gasprove/parser.hpp"

namespace gasprove {

namespace {

class Stopwatch {
public:
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::gas_true:
        return "true";
    case Outcome::gas_false:
        return "false";
    case Outcome::fail:
        return "FAIL";
    }
    return "?";
}

int exit_code(Outcome o)
{
    switch (o) {
    case Outcome::gas_true:
        return 0;
    case Outcome::gas_false:
        return 1;
    case Outcome::fail:
        return 2;
    }
    return 2;
}

PipelineResult prove_k(const RecurrenceSpec& spec, unsigned k, unsigned depth_limit)
{
    PipelineResult r;
    r.equilibrium = find_equilibrium(spec);
    r.k = k;
    Stopwatch sw;
    const MultiPoly p = build_contraction_poly(spec, r.equilibrium, k);
    ProveOptions opts;
    opts.depth_limit = depth_limit;
    r.certificate = prove_nonneg(p, r.equilibrium.value, opts);
    r.timings.prove_ms = sw.ms();
    switch (r.certificate->verdict) {
    case Verdict::proven:
        r.outcome = Outcome::gas_true;
        r.reason = "K = " + std::to_string(k) + " contracts";
        break;
    case Verdict::disproven:
        r.outcome = Outcome::gas_false;
        r.reason = "K = " + std::to_string(k) + " does not contract: " + r.certificate->reason;
        break;
    case Verdict::fail:
        r.outcome = Outcome::fail;
        r.reason = r.certificate->reason;
        break;
    }
    return r;
}

PipelineResult prove(const RecurrenceSpec& spec, const ProveConfig& config)
{
    if (config.max_k == 0) {
        throw std::invalid_argument("max K must be >= 1");
    }
    PipelineResult r;
    r.equilibrium = find_equilibrium(spec);

    Stopwatch las_sw;
    r.las = las_check(spec, r.equilibrium);
    r.timings.las_ms = las_sw.ms();
    if (r.las->outcome == LasOutcome::unstable) {
        r.outcome = Outcome::gas_false;
        r.reason = "equilibrium is not LAS: a characteristic root lies outside the unit disk";
        return r;
    }
    if (r.las->outcome == LasOutcome::inconclusive) {
        r.outcome = Outcome::fail;
        r.reason = "linearization inconclusive: largest characteristic root modulus is 1";
        return r;
    }

    auto attempt = [&](unsigned k) {
        PipelineResult step = prove_k(spec, k, config.depth_limit);
        r.timings.prove_ms += step.timings.prove_ms;
        r.k = k;
        r.certificate = std::move(step.certificate);
        if (step.outcome == Outcome::gas_true) {
            r.outcome = Outcome::gas_true;
            r.reason = step.reason;
            return true;
        }
        r.reason = step.reason;
        return false;
    };

    if (config.prove_each_k) {
        for (unsigned k = 1; k <= config.max_k; ++k) {
            if (attempt(k)) {
                return r;
            }
        }
        r.outcome = Outcome::fail;
        r.reason = "no K <= " + std::to_string(config.max_k) + " proven; last: " + r.reason;
        return r;
    }

    MeshParams mesh = config.mesh;
    mesh.max_k = config.max_k;
    r.conjecture = Conjecture{};
    unsigned first = 1;
    while (first <= config.max_k) {
        Stopwatch sw;
        Conjecture c = conjecture_k(spec, r.equilibrium, mesh, first);
        r.timings.conjecture_ms += sw.ms();
        for (auto& t : c.trials) {
            r.conjecture->trials.push_back(std::move(t));
        }
        if (!c.k) {
            break;
        }
        r.conjecture->k = c.k;
        if (attempt(*c.k)) {
            return r;
        }
        first = *c.k + 1;
    }
    r.outcome = Outcome::fail;
    r.reason = "no K <= " + std::to_string(config.max_k) + " proven"
             + (r.certificate ? "; last attempt: " + r.reason : std::string("; no K passed the mesh test"));
    return r;
}

ParamRange parse_range(const std::string& text)
{
    const auto eq = text.find('=');
    const auto dots = text.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq || eq == 0) {
        throw std::invalid_argument("range must look like NAME=LO..HI, got '" + text + "'");
    }
    ParamRange r{text.substr(0, eq), Rational::parse(text.substr(eq + 1, dots - eq - 1)),
                 Rational::parse(text.substr(dots + 2))};
    if (!(r.lo < r.hi)) {
        throw std::invalid_argument("empty range for " + r.name);
    }
    return r;
}

namespace {

Rational sample(const ParamRange& range, std::mt19937_64& rng)
{
    std::uniform_int_distribution<unsigned> pick_den(1, 64);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const mpz_class q = pick_den(rng);
        const mpz_class lo = (range.lo * Rational(q)).floor() + 1;
        const mpz_class hi = (range.hi * Rational(q)).floor();
        if (hi < lo) {
            continue;
        }
        const mpz_class span = hi - lo + 1;
        std::uniform_int_distribution<unsigned long> pick_num(0, span.get_ui() - 1);
        return Rational(mpz_class(lo + pick_num(rng)), q);
    }
    throw std::invalid_argument("range for " + range.name + " holds no rational with denominator <= 64");
}

} // namespace

WebBookReport webbook(const std::string& templ, const std::vector<ParamRange>& ranges, unsigned count,
                      std::uint64_t seed, const ProveConfig& config)
{
    if (count == 0) {
        throw std::invalid_argument("count must be >= 1");
    }
    WebBookReport rep;
    std::mt19937_64 rng(seed);
    for (unsigned i = 0; i < count; ++i) {
        WebBookRow row;
        for (const auto& range : ranges) {
            row.params[range.name] = sample(range, rng);
        }
        std::ostringstream tag;
        for (const auto& [name, v] : row.params) {
            tag << name << '=' << v << ' ';
        }
        std::optional<RecurrenceSpec> spec;
        try {
            spec = parse_rde(templ, row.params);
        } catch (const UnsupportedInput& e) {
            rep.log.push_back("skipped " + tag.str() + ": " + e.what());
            continue;
        }
        row.rde = to_string(spec->rhs.num()) + " / (" + to_string(spec->rhs.den()) + ")";
        try {
            const PipelineResult r = prove(*spec, config);
            row.xbar = r.equilibrium.value;
            row.k = r.k;
            row.verdict = to_string(r.outcome);
            row.reason = r.reason;
        } catch (const EquilibriumError& e) {
            row.verdict = "unsupported";
            row.reason = e.what();
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string WebBookReport::table() const
{
    std::ostringstream os;
    os << "params\txbar\tK\tverdict\n";
    for (const auto& row : rows) {
        std::string params;
        for (const auto& [name, v] : row.params) {
            params += (params.empty() ? "" : ",") + name + "=" + v.str();
        }
        os << params << '\t' << (row.xbar ? row.xbar->str() : "-") << '\t'
           << (row.k ? std::to_string(*row.k) : "-") << '\t' << row.verdict << '\n';
    }
    return os.str();
}

} // namespace gasprove
