#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gasprove/certificate.hpp"
#include "gasprove/parser.hpp"
#include "gasprove/pipeline.hpp"

using namespace gasprove;

namespace {

constexpr int exit_unsupported = 3;

void print_point(std::ostream& os, const std::vector<Rational>& v)
{
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? ", " : "") << v[i];
    }
    os << ')';
}

void print_certificate(const ProofCertificate& cert, bool verbose)
{
    std::cout << "positivity: " << to_string(cert.verdict);
    if (!cert.reason.empty()) {
        std::cout << " (" << cert.reason << ")";
    }
    std::cout << "\n";
    std::cout << "nodes: " << cert.tree.size() << ", subdivided boxes: " << cert.subdivisions() << "\n";
    if (cert.verdict == Verdict::disproven) {
        std::cout << "witness: ";
        print_point(std::cout, cert.witness);
        std::cout << " value " << cert.witness_value << "\n";
    }
    for (const auto& n : cert.tree) {
        std::cout << "  " << n.path << " [" << to_string(n.kind) << "] " << to_string(n.outcome.test) << " "
                  << to_string(n.outcome.result);
        if (!n.outcome.detail.empty()) {
            std::cout << ": " << n.outcome.detail;
        }
        if (n.audit) {
            std::cout << " (audit)";
        }
        std::cout << "\n";
        if (verbose) {
            std::cout << "    " << to_string(n.poly) << "\n";
        }
    }
}

void write_certificate(const ProofCertificate& cert, const std::string& path)
{
    if (path.empty()) {
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << to_json(cert).dump(2) << "\n";
}

void print_header(const RecurrenceSpec& spec, const Equilibrium& eq)
{
    std::cout << "rde: (" << to_string(spec.rhs.num()) << ") / (" << to_string(spec.rhs.den()) << ")\n";
    std::cout << "order: " << spec.order << ", domain: " << to_string(spec.domain) << "\n";
    std::cout << "equilibrium: " << eq.value << " (unique on the " << to_string(eq.domain) << " domain)\n";
}

void print_result(const RecurrenceSpec& spec, const PipelineResult& r, bool verbose)
{
    print_header(spec, r.equilibrium);
    if (r.las) {
        std::cout << "LAS: " << to_string(r.las->outcome) << ", characteristic " << r.las->characteristic.str("z")
                  << "\n";
    }
    if (r.conjecture) {
        for (const auto& t : r.conjecture->trials) {
            std::cout << "mesh K=" << t.k << ": ";
            if (!t.best) {
                std::cout << "P identically zero\n";
                continue;
            }
            std::cout << "min " << t.best->value << " at ";
            print_point(std::cout, t.best->point);
            std::cout << "\n";
        }
    }
    if (r.certificate) {
        if (verbose) {
            std::cout << "P: " << to_string(r.certificate->input) << "\n";
        }
        print_certificate(*r.certificate, verbose);
    }
    if (r.k) {
        std::cout << "K: " << *r.k << "\n";
    }
    std::cout << "reason: " << r.reason << "\n";
    std::cout << "timings: las " << r.timings.las_ms << " ms, conjecture " << r.timings.conjecture_ms
              << " ms, prove " << r.timings.prove_ms << " ms\n";
    std::cout << "verdict: " << to_string(r.outcome) << "\n";
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"GAS prover for rational difference equations"};
    app.require_subcommand(1);
    app.fallthrough();
    bool verbose = false;
    app.add_flag("--verbose", verbose, "Print every region and box polynomial");

    std::string rde;
    std::string cert_path;
    unsigned max_k = 8;
    unsigned k = 1;
    unsigned depth = 12;
    std::string eps = "1/10";
    unsigned mesh_n = 100;
    unsigned restarts = 200;
    bool prove_each_k = false;

    auto* prove_cmd = app.add_subcommand("prove", "Run the full pipeline");
    prove_cmd->add_option("--rde", rde, "Right-hand side R in x0..xk")->required();
    prove_cmd->add_option("--max-k", max_k, "Largest K to try")->required();
    prove_cmd->add_option("--depth", depth, "Subdivision depth limit");
    prove_cmd->add_option("--eps", eps, "Mesh step p/q");
    prove_cmd->add_option("--mesh-n", mesh_n, "Mesh points per axis");
    prove_cmd->add_option("--restarts", restarts, "Descent starts");
    prove_cmd->add_flag("--prove-each-k", prove_each_k, "Use the prover instead of the mesh for every K");
    prove_cmd->add_option("--cert", cert_path, "Write the certificate as JSON");

    auto* prove_k_cmd = app.add_subcommand("prove-k", "Prove that a given K contracts");
    prove_k_cmd->add_option("--rde", rde, "Right-hand side R in x0..xk")->required();
    prove_k_cmd->add_option("--k", k, "Iteration count K")->required();
    prove_k_cmd->add_option("--depth", depth, "Subdivision depth limit");
    prove_k_cmd->add_option("--cert", cert_path, "Write the certificate as JSON");

    std::string poly_text;
    std::string poly_file;
    std::string xbar_text;
    auto* pos_cmd = app.add_subcommand("positivity", "Decide positivity of a polynomial on the orthant");
    auto* poly_opt = pos_cmd->add_option("--poly", poly_text, "Polynomial in x0..xn");
    auto* file_opt = pos_cmd->add_option("--poly-file", poly_file, "File holding the polynomial");
    poly_opt->excludes(file_opt);
    pos_cmd->add_option("--xbar", xbar_text, "Split point p/q")->required();
    pos_cmd->add_option("--depth", depth, "Subdivision depth limit");
    pos_cmd->add_option("--cert", cert_path, "Write the certificate as JSON");

    std::string templ;
    std::vector<std::string> ranges;
    unsigned count = 0;
    std::uint64_t seed = 1;
    auto* wb_cmd = app.add_subcommand("webbook", "Prove random instantiations of a template");
    wb_cmd->add_option("--template", templ, "R with named parameters")->required();
    wb_cmd->add_option("--range", ranges, "NAME=LO..HI, sampled in (LO, HI]")->required();
    wb_cmd->add_option("--count", count, "Number of samples")->required();
    wb_cmd->add_option("--seed", seed, "RNG seed")->required();
    wb_cmd->add_option("--max-k", max_k, "Largest K to try");
    wb_cmd->add_option("--depth", depth, "Subdivision depth limit");

    std::string replay_path;
    auto* replay_cmd = app.add_subcommand("replay", "Check a certificate");
    replay_cmd->add_option("--cert", replay_path, "Certificate JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (prove_cmd->parsed()) {
            const RecurrenceSpec spec = parse_rde(rde);
            ProveConfig config;
            config.max_k = max_k;
            config.depth_limit = depth;
            config.mesh.eps = Rational::parse(eps);
            config.mesh.n = mesh_n;
            config.mesh.restarts = restarts;
            config.prove_each_k = prove_each_k;
            const PipelineResult r = prove(spec, config);
            print_result(spec, r, verbose);
            if (r.certificate) {
                write_certificate(*r.certificate, cert_path);
            }
            return exit_code(r.outcome);
        }
        if (prove_k_cmd->parsed()) {
            const RecurrenceSpec spec = parse_rde(rde);
            const PipelineResult r = prove_k(spec, k, depth);
            print_result(spec, r, verbose);
            write_certificate(*r.certificate, cert_path);
            return exit_code(r.outcome);
        }
        if (pos_cmd->parsed()) {
            if (poly_text.empty() && poly_file.empty()) {
                std::cerr << "one of --poly or --poly-file is required\n";
                return exit_unsupported;
            }
            ParseOptions opts;
            opts.min_vars = 1;
            const MultiPoly p = parse_polynomial(poly_text.empty() ? read_file(poly_file) : poly_text, opts);
            const Rational xbar = Rational::parse(xbar_text);
            ProveOptions popts;
            popts.depth_limit = depth;
            const ProofCertificate cert = prove_nonneg(p, xbar, popts);
            if (verbose) {
                std::cout << "P: " << to_string(p) << "\n";
            }
            print_certificate(cert, verbose);
            write_certificate(cert, cert_path);
            std::cout << "verdict: " << to_string(cert.verdict) << "\n";
            switch (cert.verdict) {
            case Verdict::proven:
                return 0;
            case Verdict::disproven:
                return 1;
            case Verdict::fail:
                return 2;
            }
        }
        if (wb_cmd->parsed()) {
            std::vector<ParamRange> parsed;
            for (const auto& r : ranges) {
                parsed.push_back(parse_range(r));
            }
            ProveConfig config;
            config.max_k = max_k;
            config.depth_limit = depth;
            const WebBookReport rep = webbook(templ, parsed, count, seed, config);
            for (const auto& line : rep.log) {
                std::cerr << line << "\n";
            }
            std::cout << rep.table();
            return 0;
        }
        if (replay_cmd->parsed()) {
            const ReplayReport rep = replay(nlohmann::json::parse(read_file(replay_path)));
            for (const auto& p : rep.problems) {
                std::cout << "problem: " << p << "\n";
            }
            std::cout << "replayed " << rep.nodes_checked << " nodes: " << (rep.ok ? "ok" : "MISMATCH") << "\n";
            return rep.ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const UnsupportedInput& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const EquilibriumError& e) {
        std::cerr << "unsupported equilibrium: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
