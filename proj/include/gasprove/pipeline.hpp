#ifndef GASPROVE_PIPELINE_HPP
#define GASPROVE_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gasprove/conjecture.hpp"
#include "gasprove/positivity.hpp"
#include "gasprove/stability.hpp"

namespace gasprove {

enum class Outcome { gas_true, gas_false, fail };
std::string to_string(Outcome o);
/// 0 = true, 1 = false, 2 = FAIL.
int exit_code(Outcome o);

struct Timings {
    double las_ms = 0;
    double conjecture_ms = 0;
    double prove_ms = 0;
};

struct PipelineResult {
    Outcome outcome = Outcome::fail;
    Equilibrium equilibrium;
    std::optional<unsigned> k;
    std::optional<LasVerdict> las;
    std::optional<Conjecture> conjecture;
    /// Certificate of the last K attempted.
    std::optional<ProofCertificate> certificate;
    std::string reason;
    Timings timings;
};

struct ProveConfig {
    unsigned max_k = 8;
    unsigned depth_limit = 12;
    MeshParams mesh;
    bool prove_each_k = false;
};

/// Equilibrium failures propagate as EquilibriumError.
PipelineResult prove_k(const RecurrenceSpec& spec, unsigned k, unsigned depth_limit = 12);

/// LAS check, K conjecture, positivity proof, incrementing K up to max_k.
PipelineResult prove(const RecurrenceSpec& spec, const ProveConfig& config);

struct ParamRange {
    std::string name;
    Rational lo;
    Rational hi;
};

/// Parses "NAME=LO..HI".
ParamRange parse_range(const std::string& text);

struct WebBookRow {
    std::map<std::string, Rational> params;
    std::string rde;
    std::optional<Rational> xbar;
    std::optional<unsigned> k;
    /// "true", "false", "FAIL" or "unsupported".
    std::string verdict;
    std::string reason;
};

struct WebBookReport {
    std::vector<WebBookRow> rows;
    /// Skipped instantiations.
    std::vector<std::string> log;

    std::string table() const;
};

/// Samples `count` parameter vectors in (lo, hi] with denominators <= 64
/// and runs prove on each instantiation.
WebBookReport webbook(const std::string& templ, const std::vector<ParamRange>& ranges, unsigned count,
                      std::uint64_t seed, const ProveConfig& config);

} // namespace gasprove

#endif // GASPROVE_PIPELINE_HPP
