#ifndef GASPROVE_POSITIVITY_HPP
#define GASPROVE_POSITIVITY_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gasprove/multipoly.hpp"

namespace gasprove {

enum class Side { low, high };

/// One of the 2^n regions around the split point: low is 0 <= x_i <= xbar,
/// high is xbar <= x_i.
struct RegionSpec {
    std::vector<Side> sides;
    Rational xbar;

    /// Compass name for two variables (x0 east/west, x1 north/south),
    /// otherwise one H or L per variable.
    std::string label() const;
    friend bool operator==(const RegionSpec&, const RegionSpec&) = default;
};

/// Half-open box prod (lo_i, hi_i] in finitized coordinates.
struct BoxSpec {
    std::vector<std::pair<Rational, Rational>> bounds;

    /// The 2^n halves; child index bit i selects the upper half of axis i.
    std::vector<BoxSpec> halve() const;
    friend bool operator==(const BoxSpec&, const BoxSpec&) = default;
};

enum class TestKind { pos_coeffs, subpoly_n, lcoeff, constant, zero_only_at_origin, none };
enum class TestResult { pass, fail, refute };

std::string to_string(TestKind k);
std::string to_string(TestResult r);

struct TestOutcome {
    TestKind test = TestKind::none;
    TestResult result = TestResult::fail;
    std::string detail;
    /// 4ac - b^2 for a binary quadratic form.
    std::optional<Rational> discriminant;
    /// Leading principal minors of the quadratic-form matrix.
    std::vector<Rational> minors;
    /// Point (node coordinates) where the node polynomial is negative.
    std::vector<Rational> witness;
};

using QuadMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Symmetric matrix of the degree-2 part of p, off-diagonal entries halved.
QuadMatrix quadratic_matrix(const MultiPoly& p);
MultiPoly quadratic_part(const MultiPoly& p);
/// Leading principal minors by fraction-exact elimination; stops after the
/// first non-positive one.
std::vector<Rational> sylvester_minors(const QuadMatrix& a);
bool is_positive_definite(const QuadMatrix& a);

std::vector<RegionSpec> regions(std::size_t nvars, const Rational& xbar);
MultiPoly region_poly(const MultiPoly& p, const RegionSpec& region);
std::vector<std::pair<RegionSpec, MultiPoly>> orthant_split(const MultiPoly& p, const Rational& xbar);

/// Pass iff all coefficients >= 0 and the constant is > 0. A zero constant
/// with otherwise non-negative coefficients fails with detail "zero constant".
TestOutcome test_poscoeffs(const MultiPoly& p);
TestOutcome zero_only_at_origin(const MultiPoly& p);
TestOutcome test_subpoly_n(const MultiPoly& p);
TestOutcome test_lcoeff(const MultiPoly& p);
TestOutcome test_const(const MultiPoly& p);

/// Runs the tests in order PosCoeffs, ZeroOnlyAtOrigin (top level only),
/// SubPolyN, Const, LCoeff. Below the top level a zero constant with
/// non-negative coefficients passes and sets `audit`.
TestOutcome decide_node(const MultiPoly& p, bool top_level, bool& audit);

/// P with every high variable inverted, on the box low: (0, xbar],
/// high: (0, 1/xbar]. Throws std::domain_error when xbar = 0.
std::pair<MultiPoly, BoxSpec> finitize(const MultiPoly& p, const RegionSpec& region);

/// Maps a point of a region polynomial's orthant back to original coordinates.
std::vector<Rational> region_to_original(const RegionSpec& region, std::span<const Rational> v);
/// Maps a point of a box polynomial's orthant back to original coordinates.
std::vector<Rational> box_to_original(const RegionSpec& region, const BoxSpec& box, std::span<const Rational> v);

enum class NodeKind { region, finitize, box };
std::string to_string(NodeKind k);

struct CertNode {
    std::string path;
    NodeKind kind = NodeKind::region;
    RegionSpec region;
    /// Empty for region nodes.
    BoxSpec box;
    MultiPoly poly;
    std::string digest;
    TestOutcome outcome;
    /// Box-level pass with a zero constant term.
    bool audit = false;
};

enum class Verdict { proven, disproven, fail };
std::string to_string(Verdict v);

struct ProofCertificate {
    MultiPoly input;
    std::string input_digest;
    Rational xbar;
    unsigned depth_limit = 12;
    Verdict verdict = Verdict::fail;
    std::vector<Rational> witness;
    Rational witness_value;
    std::string reason;
    std::vector<CertNode> tree;

    std::size_t subdivisions() const;
};

struct ProveOptions {
    unsigned depth_limit = 12;
    bool parallel = true;
};

ProofCertificate prove_nonneg(const MultiPoly& p, const Rational& xbar, const ProveOptions& opts = {});

/// Hex SHA-256 of the canonical text of p.
std::string digest(const MultiPoly& p);

} // namespace gasprove

#endif // GASPROVE_POSITIVITY_HPP
