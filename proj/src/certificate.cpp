#include "gasprove/certificate.hpp"

#include <map>

#include "gasprove/parser.hpp"

namespace gasprove {

namespace {

using nlohmann::json;

std::string sides_text(const RegionSpec& r)
{
    std::string s;
    for (auto side : r.sides) {
        s += side == Side::high ? 'H' : 'L';
    }
    return s;
}

json point_json(const std::vector<Rational>& v)
{
    json a = json::array();
    for (const auto& x : v) {
        a.push_back(x.str());
    }
    return a;
}

std::vector<Rational> point_from(const json& a)
{
    std::vector<Rational> v;
    for (const auto& x : a) {
        v.push_back(Rational::parse(x.get<std::string>()));
    }
    return v;
}

} // namespace

json to_json(const ProofCertificate& cert)
{
    json j;
    j["input_digest"] = cert.input_digest;
    j["input"] = to_string(cert.input);
    j["nvars"] = cert.input.nvars();
    j["xbar"] = cert.xbar.str();
    j["depth_limit"] = cert.depth_limit;
    j["verdict"] = to_string(cert.verdict);
    j["reason"] = cert.reason;
    if (cert.verdict == Verdict::disproven) {
        j["witness"] = point_json(cert.witness);
        j["witness_value"] = cert.witness_value.str();
    }
    json tree = json::array();
    for (const auto& n : cert.tree) {
        json node;
        node["path"] = n.path;
        node["transform"] = to_string(n.kind);
        node["region"] = sides_text(n.region);
        if (n.kind != NodeKind::region) {
            json box = json::array();
            for (const auto& [a, b] : n.box.bounds) {
                box.push_back(json::array({a.str(), b.str()}));
            }
            node["box"] = std::move(box);
        }
        node["digest"] = n.digest;
        node["test"] = to_string(n.outcome.test);
        node["result"] = to_string(n.outcome.result);
        node["detail"] = n.outcome.detail;
        if (n.audit) {
            node["audit"] = true;
        }
        tree.push_back(std::move(node));
    }
    j["tree"] = std::move(tree);
    return j;
}

ReplayReport replay(const json& cert)
{
    ReplayReport rep;
    auto problem = [&rep](std::string what) {
        rep.ok = false;
        rep.problems.push_back(std::move(what));
    };

    ParseOptions opts;
    opts.min_vars = cert.at("nvars").get<std::size_t>();
    const MultiPoly input = parse_polynomial(cert.at("input").get<std::string>(), opts);
    if (digest(input) != cert.at("input_digest").get<std::string>()) {
        problem("input digest mismatch");
    }
    const Rational xbar = Rational::parse(cert.at("xbar").get<std::string>());
    const std::string verdict = cert.at("verdict").get<std::string>();

    std::map<std::string, MultiPoly> finitized;
    std::vector<std::pair<std::string, std::string>> results;
    for (const auto& node : cert.at("tree")) {
        const std::string path = node.at("path").get<std::string>();
        RegionSpec region{{}, xbar};
        for (char c : node.at("region").get<std::string>()) {
            region.sides.push_back(c == 'H' ? Side::high : Side::low);
        }
        const std::string transform = node.at("transform").get<std::string>();
        MultiPoly poly;
        bool tested = true;
        if (transform == to_string(NodeKind::region)) {
            poly = region_poly(input, region);
        } else {
            const std::string key = node.at("region").get<std::string>();
            if (!finitized.contains(key)) {
                finitized.emplace(key, finitize(input, region).first);
            }
            if (transform == to_string(NodeKind::finitize)) {
                poly = finitized.at(key);
                tested = false;
            } else if (transform == to_string(NodeKind::box)) {
                BoxSpec box;
                for (const auto& b : node.at("box")) {
                    box.bounds.emplace_back(Rational::parse(b.at(0).get<std::string>()),
                                            Rational::parse(b.at(1).get<std::string>()));
                }
                poly = box_map(finitized.at(key), box.bounds);
            } else {
                problem(path + ": unknown transform " + transform);
                continue;
            }
        }
        ++rep.nodes_checked;
        if (digest(poly) != node.at("digest").get<std::string>()) {
            problem(path + ": polynomial digest mismatch");
        }
        if (!tested) {
            continue;
        }
        bool audit = false;
        const TestOutcome o = decide_node(poly, transform == to_string(NodeKind::region), audit);
        if (to_string(o.test) != node.at("test").get<std::string>()
            || to_string(o.result) != node.at("result").get<std::string>()) {
            problem(path + ": test outcome differs on replay");
        }
        if (audit != node.value("audit", false)) {
            problem(path + ": audit flag differs on replay");
        }
        results.emplace_back(path, to_string(o.result));
    }

    if (verdict == to_string(Verdict::proven)) {
        for (const auto& [path, result] : results) {
            if (result == to_string(TestResult::pass)) {
                continue;
            }
            const bool has_children = std::any_of(results.begin(), results.end(), [&path = path](const auto& r) {
                return r.first.starts_with(path + "/");
            });
            if (result == to_string(TestResult::refute) || !has_children) {
                problem(path + ": undecided leaf under a Proven verdict");
            }
        }
    } else if (verdict == to_string(Verdict::disproven)) {
        const auto witness = point_from(cert.at("witness"));
        const Rational value = Rational::parse(cert.at("witness_value").get<std::string>());
        if (witness.size() != input.nvars() || evaluate(input, witness) != value) {
            problem("witness does not evaluate to the recorded value");
        } else if (!(value.sign() < 0) && !(input.is_zero() && value.is_zero())) {
            problem("witness value is not negative");
        }
        for (const auto& x : witness) {
            if (x.sign() <= 0) {
                problem("witness outside the open orthant");
                break;
            }
        }
    }
    return rep;
}

} // namespace gasprove
