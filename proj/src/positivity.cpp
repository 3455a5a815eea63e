#include "gasprove/positivity.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "gasprove/ratfun.hpp"
#include "gasprove/univariate.hpp"

namespace gasprove {

std::string to_string(TestKind k)
{
    switch (k) {
    case TestKind::pos_coeffs:
        return "PosCoeffs";
    case TestKind::subpoly_n:
        return "SubPolyN";
    case TestKind::lcoeff:
        return "LCoeff";
    case TestKind::constant:
        return "Const";
    case TestKind::zero_only_at_origin:
        return "ZeroOnlyAtOrigin";
    case TestKind::none:
        return "none";
    }
    return "?";
}

std::string to_string(TestResult r)
{
    switch (r) {
    case TestResult::pass:
        return "pass";
    case TestResult::fail:
        return "fail";
    case TestResult::refute:
        return "refute";
    }
    return "?";
}

std::string to_string(NodeKind k)
{
    switch (k) {
    case NodeKind::region:
        return "orthant_split";
    case NodeKind::finitize:
        return "finitize";
    case NodeKind::box:
        return "box_map";
    }
    return "?";
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::proven:
        return "Proven";
    case Verdict::disproven:
        return "Disproven";
    case Verdict::fail:
        return "Fail";
    }
    return "?";
}

std::string digest(const MultiPoly& p)
{
    const std::string text = to_string(p);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    std::ostringstream os;
    os << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < len; ++i) {
        os << std::setw(2) << static_cast<unsigned>(md[i]);
    }
    return os.str();
}

std::string RegionSpec::label() const
{
    if (sides.size() == 2) {
        std::string s;
        s += sides[1] == Side::high ? 'N' : 'S';
        s += sides[0] == Side::high ? 'E' : 'W';
        return s;
    }
    std::string s;
    for (auto side : sides) {
        s += side == Side::high ? 'H' : 'L';
    }
    return s;
}

std::vector<BoxSpec> BoxSpec::halve() const
{
    const std::size_t n = bounds.size();
    std::vector<BoxSpec> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        BoxSpec child;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& [a, b] = bounds[i];
            const Rational mid = (a + b) / Rational(2);
            if (mask >> i & 1U) {
                child.bounds.emplace_back(mid, b);
            } else {
                child.bounds.emplace_back(a, mid);
            }
        }
        out.push_back(std::move(child));
    }
    return out;
}

QuadMatrix quadratic_matrix(const MultiPoly& p)
{
    const auto n = static_cast<Eigen::Index>(p.nvars());
    QuadMatrix a = QuadMatrix::Constant(n, n, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        if (total_degree(e) != 2) {
            continue;
        }
        std::vector<Eigen::Index> idx;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::uint32_t k = 0; k < e[i]; ++k) {
                idx.push_back(static_cast<Eigen::Index>(i));
            }
        }
        if (idx[0] == idx[1]) {
            a(idx[0], idx[0]) = c;
        } else {
            a(idx[0], idx[1]) = c / Rational(2);
            a(idx[1], idx[0]) = c / Rational(2);
        }
    }
    return a;
}

MultiPoly quadratic_part(const MultiPoly& p)
{
    MultiPoly q(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (total_degree(e) == 2) {
            q.add_term(e, c);
        }
    }
    return q;
}

std::vector<Rational> sylvester_minors(const QuadMatrix& a)
{
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("matrix is not square");
    }
    QuadMatrix m = a;
    const Eigen::Index n = m.rows();
    std::vector<Rational> minors;
    Rational minor(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        // with all previous pivots positive the k-th minor is their product
        const Rational pivot = m(k, k);
        minor *= pivot;
        minors.push_back(minor);
        if (pivot.sign() <= 0) {
            break;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            const Rational f = m(i, k) / pivot;
            if (f.is_zero()) {
                continue;
            }
            for (Eigen::Index j = k + 1; j < n; ++j) {
                m(i, j) -= f * m(k, j);
            }
        }
    }
    return minors;
}

bool is_positive_definite(const QuadMatrix& a)
{
    const auto minors = sylvester_minors(a);
    return static_cast<Eigen::Index>(minors.size()) == a.rows()
        && std::all_of(minors.begin(), minors.end(), [](const Rational& m) { return m.sign() > 0; });
}

std::vector<RegionSpec> regions(std::size_t nvars, const Rational& xbar)
{
    if (xbar.sign() < 0) {
        throw std::invalid_argument("split point must be >= 0");
    }
    if (xbar.is_zero()) {
        return {RegionSpec{std::vector<Side>(nvars, Side::high), xbar}};
    }
    std::vector<RegionSpec> out;
    // all-high first; bit i set means x_i is low
    for (std::size_t mask = 0; mask < (std::size_t{1} << nvars); ++mask) {
        RegionSpec r{std::vector<Side>(nvars), xbar};
        for (std::size_t i = 0; i < nvars; ++i) {
            r.sides[i] = (mask >> i & 1U) ? Side::low : Side::high;
        }
        out.push_back(std::move(r));
    }
    return out;
}

MultiPoly region_poly(const MultiPoly& p, const RegionSpec& region)
{
    MultiPoly r = p;
    for (std::size_t i = 0; i < region.sides.size(); ++i) {
        if (region.sides[i] == Side::high) {
            r = shift_var(r, i, region.xbar);
        } else {
            r = shift_var(invert_var(r, i), i, region.xbar.inverse());
        }
    }
    return r;
}

std::vector<std::pair<RegionSpec, MultiPoly>> orthant_split(const MultiPoly& p, const Rational& xbar)
{
    if (p.is_zero()) {
        throw std::invalid_argument("orthant_split of the zero polynomial");
    }
    std::vector<std::pair<RegionSpec, MultiPoly>> out;
    for (auto& r : regions(p.nvars(), xbar)) {
        MultiPoly q = region_poly(p, r);
        out.emplace_back(std::move(r), std::move(q));
    }
    return out;
}

TestOutcome test_poscoeffs(const MultiPoly& p)
{
    TestOutcome o;
    o.test = TestKind::pos_coeffs;
    if (!has_nonnegative_coefficients(p)) {
        o.detail = "negative coefficient";
        return o;
    }
    if (p.constant_term().is_zero()) {
        o.detail = "zero constant";
        return o;
    }
    o.result = TestResult::pass;
    return o;
}

TestOutcome zero_only_at_origin(const MultiPoly& p)
{
    if (!has_nonnegative_coefficients(p) || !p.constant_term().is_zero()) {
        throw std::invalid_argument("zero_only_at_origin needs non-negative coefficients and a zero constant");
    }
    TestOutcome o;
    o.test = TestKind::zero_only_at_origin;
    if (p.is_zero()) {
        o.detail = "identically zero";
        return o;
    }
    // zeroing more variables only removes terms, so the maximal proper
    // subsets decide: each variable needs a pure power term
    for (std::size_t j = 0; j < p.nvars(); ++j) {
        const bool pure = std::any_of(p.terms().begin(), p.terms().end(), [j](const auto& t) {
            return t.first[j] > 0 && total_degree(t.first) == t.first[j];
        });
        if (!pure) {
            o.detail = "vanishes when every variable except x" + std::to_string(j) + " is zero";
            return o;
        }
    }
    o.result = TestResult::pass;
    return o;
}

namespace {

bool is_cross_quadratic(const Exponents& e)
{
    return total_degree(e) == 2 && std::count(e.begin(), e.end(), 1U) == 2;
}

} // namespace

TestOutcome test_subpoly_n(const MultiPoly& p)
{
    TestOutcome o;
    o.test = TestKind::subpoly_n;
    for (const auto& [e, c] : p.terms()) {
        if (c.sign() < 0 && !is_cross_quadratic(e)) {
            o.detail = "not applicable: negative coefficient off the mixed quadratic terms";
            return o;
        }
    }
    const QuadMatrix a = quadratic_matrix(p);
    o.minors = sylvester_minors(a);
    std::ostringstream os;
    os << "quadratic form " << to_string(quadratic_part(p));
    if (p.nvars() == 2) {
        const Rational qa = a(0, 0);
        const Rational qb = a(0, 1) * Rational(2);
        const Rational qc = a(1, 1);
        o.discriminant = Rational(4) * qa * qc - qb * qb;
        os << ", d = " << *o.discriminant;
    }
    os << ", minors";
    for (const auto& m : o.minors) {
        os << ' ' << m;
    }
    o.detail = os.str();
    if (is_positive_definite(a)) {
        o.result = TestResult::pass;
    }
    return o;
}

TestOutcome test_lcoeff(const MultiPoly& p)
{
    TestOutcome o;
    o.test = TestKind::lcoeff;
    if (p.is_zero()) {
        return o;
    }
    const auto top = p.total_degree();
    for (const auto& [e, c] : p.terms()) {
        if (total_degree(e) != top) {
            break;
        }
        if (c.sign() >= 0) {
            o.detail = "a top-degree coefficient is non-negative";
            return o;
        }
    }
    // P(t, ..., t) has a negative leading coefficient
    const UniPoly ray = diagonal(p);
    const Rational bound = root_bound(ray);
    Rational t(1);
    while (!(ray(t).sign() < 0)) {
        if (t > bound) {
            throw std::logic_error("no negative value along the diagonal beyond the root bound");
        }
        t *= Rational(2);
    }
    o.result = TestResult::refute;
    o.witness.assign(p.nvars(), t);
    o.detail = "every top-degree coefficient is negative; P(" + t.str() + ", ...) = " + ray(t).str();
    return o;
}

TestOutcome test_const(const MultiPoly& p)
{
    TestOutcome o;
    o.test = TestKind::constant;
    if (p.constant_term().sign() >= 0) {
        return o;
    }
    const UniPoly ray = diagonal(p);
    Rational t(1);
    for (int m = 0; m < 4096; ++m) {
        if (ray(t).sign() < 0) {
            o.result = TestResult::refute;
            o.witness.assign(p.nvars(), t);
            o.detail = "negative constant; P(" + t.str() + ", ...) = " + ray(t).str();
            return o;
        }
        t /= Rational(2);
    }
    throw std::logic_error("no negative value found near the origin");
}

std::pair<MultiPoly, BoxSpec> finitize(const MultiPoly& p, const RegionSpec& region)
{
    if (region.xbar.is_zero()) {
        throw std::domain_error("cannot finitize a region with split point 0");
    }
    MultiPoly r = p;
    BoxSpec box;
    for (std::size_t i = 0; i < region.sides.size(); ++i) {
        if (region.sides[i] == Side::high) {
            r = invert_var(r, i);
            box.bounds.emplace_back(Rational(0), region.xbar.inverse());
        } else {
            box.bounds.emplace_back(Rational(0), region.xbar);
        }
    }
    return {std::move(r), std::move(box)};
}

std::vector<Rational> region_to_original(const RegionSpec& region, std::span<const Rational> v)
{
    std::vector<Rational> x(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        x[i] = region.sides[i] == Side::high ? v[i] + region.xbar : (v[i] + region.xbar.inverse()).inverse();
    }
    return x;
}

std::vector<Rational> box_to_original(const RegionSpec& region, const BoxSpec& box, std::span<const Rational> v)
{
    std::vector<Rational> x(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& [a, b] = box.bounds[i];
        const Rational z = (v[i] + (b - a).inverse()).inverse() + a;
        x[i] = region.sides[i] == Side::high ? z.inverse() : z;
    }
    return x;
}

std::size_t ProofCertificate::subdivisions() const
{
    return static_cast<std::size_t>(
        std::count_if(tree.begin(), tree.end(), [](const CertNode& n) { return n.kind == NodeKind::box; }));
}

TestOutcome decide_node(const MultiPoly& p, bool top_level, bool& audit)
{
    TestOutcome pc = test_poscoeffs(p);
    if (pc.result == TestResult::pass) {
        return pc;
    }
    if (pc.detail == "zero constant") {
        if (!top_level) {
            pc.result = TestResult::pass;
            pc.detail = "zero constant at box level";
            audit = true;
            return pc;
        }
        TestOutcome z = zero_only_at_origin(p);
        if (z.result == TestResult::pass) {
            return z;
        }
    }
    TestOutcome sp = test_subpoly_n(p);
    if (sp.result == TestResult::pass) {
        if (!top_level && p.constant_term().is_zero()) {
            audit = true;
        }
        return sp;
    }
    TestOutcome c = test_const(p);
    if (c.result == TestResult::refute) {
        return c;
    }
    TestOutcome l = test_lcoeff(p);
    if (l.result == TestResult::refute) {
        return l;
    }
    TestOutcome none;
    none.test = TestKind::none;
    none.detail = "no test decides";
    return none;
}

namespace {

struct RegionResult {
    Verdict verdict = Verdict::proven;
    std::vector<Rational> witness;
    Rational value;
    std::string reason;
    std::vector<CertNode> nodes;
};

class RegionProver {
public:
    RegionProver(const MultiPoly& original, RegionSpec region, unsigned depth_limit)
        : original_(original), region_(std::move(region)), depth_limit_(depth_limit)
    {
    }

    RegionResult run()
    {
        const std::string label = region_.label();
        CertNode node = make_node(label, NodeKind::region, {}, region_poly(original_, region_));
        bool audit = false;
        node.outcome = decide_node(node.poly, true, audit);
        const TestOutcome outcome = node.outcome;
        out_.nodes.push_back(std::move(node));
        if (settle(outcome, region_to_original(region_, outcome.witness))) {
            return std::move(out_);
        }
        if (region_.xbar.is_zero()) {
            out_.verdict = Verdict::fail;
            out_.reason = "region " + label + " undecided and cannot be finitized with split point 0";
            return std::move(out_);
        }
        auto [fin, box] = finitize(original_, region_);
        CertNode fnode = make_node(label + "/f", NodeKind::finitize, box, fin);
        fnode.outcome.detail = "subdivide";
        out_.nodes.push_back(std::move(fnode));
        explore(fin, box, 1, label);
        return std::move(out_);
    }

private:
    CertNode make_node(std::string path, NodeKind kind, BoxSpec box, MultiPoly poly) const
    {
        CertNode n;
        n.path = std::move(path);
        n.kind = kind;
        n.region = region_;
        n.box = std::move(box);
        n.digest = digest(poly);
        n.poly = std::move(poly);
        return n;
    }

    /// Records a pass or refutation; returns true when the node is decided.
    bool settle(const TestOutcome& o, const std::vector<Rational>& witness)
    {
        if (o.result == TestResult::pass) {
            return true;
        }
        if (o.result != TestResult::refute) {
            return false;
        }
        const Rational value = evaluate(original_, witness);
        if (value.sign() < 0) {
            out_.verdict = Verdict::disproven;
            out_.witness = witness;
            out_.value = value;
            out_.reason = to_string(o.test) + " refutation in " + out_.nodes.back().path;
        } else {
            out_.verdict = Verdict::fail;
            out_.reason = "witness from " + out_.nodes.back().path + " did not verify";
        }
        return true;
    }

    /// Returns false once a non-pass leaf has been recorded.
    bool explore(const MultiPoly& fin, const BoxSpec& box, unsigned depth, const std::string& path)
    {
        const auto children = box.halve();
        for (std::size_t c = 0; c < children.size(); ++c) {
            const BoxSpec& child = children[c];
            CertNode node = make_node(path + "/" + std::to_string(c + 1), NodeKind::box, child,
                                      box_map(fin, child.bounds));
            node.outcome = decide_node(node.poly, false, node.audit);
            const TestOutcome outcome = node.outcome;
            const std::string child_path = node.path;
            out_.nodes.push_back(std::move(node));
            if (settle(outcome, box_to_original(region_, child, outcome.witness))) {
                if (out_.verdict != Verdict::proven) {
                    return false;
                }
                continue;
            }
            if (depth >= depth_limit_) {
                out_.verdict = Verdict::fail;
                out_.reason = "depth limit " + std::to_string(depth_limit_) + " reached at " + child_path;
                return false;
            }
            if (!explore(fin, child, depth + 1, child_path)) {
                return false;
            }
        }
        return true;
    }

    const MultiPoly& original_;
    RegionSpec region_;
    unsigned depth_limit_;
    RegionResult out_;
};

} // namespace

ProofCertificate prove_nonneg(const MultiPoly& p, const Rational& xbar, const ProveOptions& opts)
{
    if (opts.depth_limit == 0) {
        throw std::invalid_argument("depth limit must be positive");
    }
    ProofCertificate cert;
    cert.input = p;
    cert.input_digest = digest(p);
    cert.xbar = xbar;
    cert.depth_limit = opts.depth_limit;
    if (p.is_zero()) {
        cert.verdict = Verdict::disproven;
        cert.witness.assign(p.nvars(), xbar + Rational(1));
        cert.witness_value = Rational(0);
        cert.reason = "identically zero";
        return cert;
    }

    const auto specs = regions(p.nvars(), xbar);
    std::vector<RegionResult> results;
    if (opts.parallel && specs.size() > 1) {
        std::vector<std::future<RegionResult>> jobs;
        for (const auto& r : specs) {
            jobs.push_back(std::async(std::launch::async, [&p, r, &opts] {
                return RegionProver(p, r, opts.depth_limit).run();
            }));
        }
        for (auto& j : jobs) {
            results.push_back(j.get());
        }
    } else {
        for (const auto& r : specs) {
            results.push_back(RegionProver(p, r, opts.depth_limit).run());
        }
    }

    cert.verdict = Verdict::proven;
    const RegionResult* decisive = nullptr;
    for (const auto& r : results) {
        if (r.verdict == Verdict::disproven) {
            decisive = &r;
            break;
        }
        if (r.verdict == Verdict::fail && decisive == nullptr) {
            decisive = &r;
        }
    }
    if (decisive != nullptr) {
        cert.verdict = decisive->verdict;
        cert.witness = decisive->witness;
        cert.witness_value = decisive->value;
        cert.reason = decisive->reason;
    }
    for (auto& r : results) {
        for (auto& n : r.nodes) {
            cert.tree.push_back(std::move(n));
        }
    }
    return cert;
}

} // namespace gasprove
