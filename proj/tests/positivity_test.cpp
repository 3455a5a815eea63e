#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "gasprove/certificate.hpp"
#include "gasprove/parser.hpp"
#include "gasprove/recurrence.hpp"
#include "gasprove/univariate.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace gasprove;

namespace {

MultiPoly P(const char* text, std::size_t nvars = 2)
{
    ParseOptions o;
    o.min_vars = nvars;
    return parse_polynomial(text, o);
}

const MultiPoly& region_of(const std::vector<std::pair<RegionSpec, MultiPoly>>& split, const std::string& label)
{
    for (const auto& [r, p] : split) {
        if (r.label() == label) {
            return p;
        }
    }
    throw std::runtime_error("no region " + label);
}

/// Characteristic polynomial by Faddeev-LeVerrier.
UniPoly charpoly(const QuadMatrix& a)
{
    const Eigen::Index n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    QuadMatrix m = QuadMatrix::Constant(n, n, Rational(0));
    const QuadMatrix id = QuadMatrix::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        m = QuadMatrix(a * m) + id * c[n - k + 1];
        const QuadMatrix am = a * m;
        c[n - k] = -am.trace() / Rational(static_cast<long>(k));
    }
    return UniPoly(std::move(c));
}

/// Oracle: a symmetric matrix is PD iff its characteristic polynomial has no root <= 0.
bool pd_by_charpoly(const QuadMatrix& a)
{
    const UniPoly cp = squarefree_part(charpoly(a));
    const Rational bound = root_bound(cp);
    return SturmChain(cp).count(-bound - Rational(1), Rational(0)) == 0;
}

Rational quad(const QuadMatrix& a, const std::vector<Rational>& v)
{
    Rational s;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            s += v[i] * a(i, j) * v[j];
        }
    }
    return s;
}

} // namespace

TEST_SUITE("positivity")
{
    TEST_CASE("orthant_split")
    {
        const auto s1 = orthant_split(P(golden::example1), Rational(1));
        REQUIRE(s1.size() == 4);
        CHECK(region_of(s1, "NE") == P(golden::example1_ne));
        CHECK(region_of(s1, "SW") == P(golden::example1_ne));
        CHECK(region_of(s1, "NW") == P(golden::example1_nw));
        CHECK(region_of(s1, "SE") == P(golden::example1_nw));

        const auto s2 = orthant_split(P(golden::example2), Rational(1));
        CHECK(region_of(s2, "NE") == P(golden::example2_ne));
        CHECK(region_of(s2, "SW") == P(golden::example2_sw));
        CHECK(region_of(s2, "NW") == P(golden::example2_nw));
        CHECK(region_of(s2, "SE") == P(golden::example2_se));

        const auto s0 = orthant_split(P("x0+x1"), Rational(0));
        REQUIRE(s0.size() == 1);
        CHECK(s0[0].second == P("x0+x1"));
        CHECK_THROWS(orthant_split(MultiPoly(2), Rational(1)));
        CHECK(regions(3, Rational(1)).size() == 8);
    }

    TEST_CASE("test_poscoeffs")
    {
        CHECK(test_poscoeffs(P(golden::example1_nw)).result == TestResult::pass);
        CHECK(test_poscoeffs(P(golden::example2_ne)).result == TestResult::fail);
        CHECK(test_poscoeffs(P("x0+1", 1)).result == TestResult::pass);
        const TestOutcome z = test_poscoeffs(P("x0+x1"));
        CHECK(z.result == TestResult::fail);
        CHECK(z.detail == "zero constant");
    }

    TEST_CASE("zero_only_at_origin")
    {
        const auto split = orthant_split(P(golden::running_example_k5), Rational(2));
        const MultiPoly& nw = region_of(split, "NW");
        REQUIRE(nw.constant_term().is_zero());
        CHECK(zero_only_at_origin(nw).result == TestResult::pass);
        CHECK(zero_only_at_origin(P("x0*x1")).result == TestResult::fail);
        CHECK(zero_only_at_origin(P("x0+x1")).result == TestResult::pass);
        CHECK(zero_only_at_origin(P("x0^3", 1)).result == TestResult::pass);
        CHECK_THROWS(zero_only_at_origin(P("x0+1")));
    }

    TEST_CASE("test_subpoly_n")
    {
        const TestOutcome e1 = test_subpoly_n(P(golden::example1_ne));
        CHECK(e1.result == TestResult::pass);
        CHECK(e1.discriminant == Rational(3));

        const auto split = orthant_split(P(golden::running_example_k5), Rational(2));
        const MultiPoly& ne = region_of(split, "NE");
        CHECK(quadratic_part(ne) == P("349366689*x1^2-6980904*x0*x1+318700575*x0^2"));
        const TestOutcome one = test_subpoly_n(ne);
        CHECK(one.result == TestResult::pass);
        CHECK(one.discriminant == Rational::parse("445324725659927484"));
        const TestOutcome sw = test_subpoly_n(region_of(split, "SW"));
        CHECK(sw.result == TestResult::pass);
        CHECK(sw.discriminant == Rational::parse("111331181414981871/67108864"));

        CHECK(test_subpoly_n(P("x0^2-3*x0*x1+x1^2+1")).result == TestResult::fail);
        const TestOutcome na = test_subpoly_n(P(golden::example2_ne));
        CHECK(na.result == TestResult::fail);
        CHECK(na.minors.empty());
        CHECK(test_subpoly_n(P("x0^2+x1^2-x0*x1-x0*x2+x2^2", 3)).result == TestResult::pass);
    }

    TEST_CASE("test_lcoeff and test_const")
    {
        const TestOutcome l = test_lcoeff(P("-x0^2*x1^2+x0+x1+3"));
        CHECK(l.result == TestResult::refute);
        CHECK(evaluate(P("-x0^2*x1^2+x0+x1+3"), l.witness).sign() < 0);
        CHECK(test_lcoeff(P(golden::example1_ne)).result == TestResult::fail);
        CHECK(test_lcoeff(P("3*x0^4+x1-7")).result == TestResult::fail);

        const TestOutcome c = test_const(P("x0+x1-1"));
        CHECK(c.result == TestResult::refute);
        CHECK(evaluate(P("x0+x1-1"), c.witness) == Rational(-1, 2));
        CHECK(test_const(P("x0+x1+8")).result == TestResult::fail);
        const auto split = orthant_split(P(golden::running_example_k5), Rational(2));
        CHECK(test_const(region_of(split, "NW")).result == TestResult::fail);
    }

    TEST_CASE("finitize")
    {
        const MultiPoly p = P(golden::example2);
        const auto rs = regions(2, Rational(1));
        auto find = [&rs](const std::string& label) {
            return *std::find_if(rs.begin(), rs.end(), [&](const RegionSpec& r) { return r.label() == label; });
        };
        const auto [se, se_box] = finitize(p, find("SE"));
        CHECK(se == P(golden::example2_fin_se));
        CHECK(se_box.bounds == std::vector<std::pair<Rational, Rational>>{{0, 1}, {0, 1}});
        CHECK(finitize(p, find("NE")).first == P("x0^4+x0^2*x1+10*x0^2-5*x0+1"));
        CHECK(finitize(p, find("SW")).first == p);
        const auto half = finitize(p, RegionSpec{{Side::high, Side::low}, Rational(2)}).second;
        CHECK(half.bounds == std::vector<std::pair<Rational, Rational>>{{0, Rational(1, 2)}, {0, 2}});
        CHECK_THROWS_AS(finitize(p, RegionSpec{{Side::high, Side::high}, Rational(0)}), std::domain_error);
    }

    TEST_CASE("prove_nonneg on the worked examples")
    {
        const ProofCertificate e1 = prove_nonneg(P(golden::example1), Rational(1));
        CHECK(e1.verdict == Verdict::proven);
        CHECK(e1.subdivisions() == 0);

        const ProofCertificate e2 = prove_nonneg(P(golden::example2), Rational(1), {10, true});
        CHECK(e2.verdict == Verdict::proven);
        CHECK(e2.subdivisions() == 8);
        std::vector<MultiPoly> se_boxes;
        for (const auto& n : e2.tree) {
            if (n.kind == NodeKind::box && n.path.starts_with("SE/")) {
                se_boxes.push_back(n.poly);
                CHECK(n.outcome.test == TestKind::pos_coeffs);
            }
        }
        REQUIRE(se_boxes.size() == 4);
        for (const char* g : golden::example2_se_boxes) {
            CHECK(std::find(se_boxes.begin(), se_boxes.end(), P(g)) != se_boxes.end());
        }

        const ProofCertificate k5 = prove_nonneg(P(golden::running_example_k5), Rational(2), {10, true});
        CHECK(k5.verdict == Verdict::proven);
        CHECK(k5.subdivisions() == 0);

        const ProofCertificate neg = prove_nonneg(P("x0+x1-1"), Rational(1), {10, true});
        CHECK(neg.verdict == Verdict::disproven);
        CHECK(evaluate(P("x0+x1-1"), neg.witness).sign() < 0);
        CHECK(neg.witness_value == evaluate(P("x0+x1-1"), neg.witness));

        const ProofCertificate zero = prove_nonneg(MultiPoly(1), Rational(1));
        CHECK(zero.verdict == Verdict::disproven);
        CHECK(zero.reason == "identically zero");
    }

    TEST_CASE("depth limit and zero split point")
    {
        // touches zero at (1, 1), which no finite subdivision separates
        const ProofCertificate f = prove_nonneg(P("(x0-1)^2*(x1+1)+(x1-1)^2*(x0+1)-x0*x1+1"), Rational(1, 3), {3, true});
        CHECK(f.verdict != Verdict::proven);
        const ProofCertificate axis = prove_nonneg(P("x0*x1"), Rational(0));
        CHECK(axis.verdict == Verdict::fail);
    }

    TEST_CASE("sequential and parallel runs agree")
    {
        const MultiPoly p = P(golden::example2);
        const auto a = to_json(prove_nonneg(p, Rational(1), {10, true}));
        const auto b = to_json(prove_nonneg(p, Rational(1), {10, false}));
        CHECK(a == b);
    }

    TEST_CASE("certificate replay")
    {
        for (const char* text : {golden::example1, golden::example2, golden::running_example_k5, "x0+x1-1"}) {
            const MultiPoly p = P(text);
            const Rational xbar = text == golden::running_example_k5 ? Rational(2) : Rational(1);
            auto j = to_json(prove_nonneg(p, xbar));
            const ReplayReport ok = replay(j);
            CHECK(ok.ok);
            CHECK(ok.nodes_checked == j["tree"].size());
            j["tree"][0]["digest"] = std::string(64, '0');
            CHECK_FALSE(replay(j).ok);
        }
        auto j = to_json(prove_nonneg(P("x0+x1-1"), Rational(1)));
        j["witness_value"] = "1";
        CHECK_FALSE(replay(j).ok);
    }

    TEST_CASE("property: Sylvester agrees with the spectrum")
    {
        std::mt19937_64 rng(31);
        int pd = 0;
        int not_pd = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const Eigen::Index n = 1 + trial % 5;
            QuadMatrix b(n, n);
            for (Eigen::Index i = 0; i < n; ++i) {
                for (Eigen::Index j = 0; j < n; ++j) {
                    b(i, j) = testing::random_rational(rng, -3, 3, 4);
                }
            }
            QuadMatrix a = QuadMatrix(b.transpose() * b);
            const Rational shift = testing::random_rational(rng, -2, 2, 4);
            for (Eigen::Index i = 0; i < n; ++i) {
                a(i, i) += shift;
            }
            if (trial % 7 == 0) {
                a.row(n - 1) = a.row(0);
                a.col(n - 1) = a.col(0);
            }
            const bool claimed = is_positive_definite(a);
            CHECK(claimed == pd_by_charpoly(a));
            if (claimed) {
                ++pd;
                for (int k = 0; k < 1000; ++k) {
                    auto v = testing::random_point(rng, static_cast<std::size_t>(n), -4, 4);
                    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); })) {
                        continue;
                    }
                    CHECK(quad(a, v).sign() > 0);
                }
            } else {
                ++not_pd;
                Eigen::MatrixXd ad(n, n);
                for (Eigen::Index i = 0; i < n; ++i) {
                    for (Eigen::Index j = 0; j < n; ++j) {
                        ad(i, j) = a(i, j).to_double();
                    }
                }
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ad);
                if (es.eigenvalues()(0) < -1e-6) {
                    std::vector<Rational> v;
                    for (Eigen::Index i = 0; i < n; ++i) {
                        v.push_back(Rational(mpz_class(static_cast<long>(es.eigenvectors()(i, 0) * 1e6)), mpz_class(1000000)));
                    }
                    CHECK(quad(a, v).sign() < 0);
                }
            }
        }
        CHECK(pd > 20);
        CHECK(not_pd > 20);
    }

    TEST_CASE("property: binary discriminant")
    {
        std::mt19937_64 rng(32);
        for (int trial = 0; trial < 200; ++trial) {
            const Rational a = testing::random_rational(rng, -2, 4);
            const Rational b = testing::random_rational(rng, -4, 0);
            const Rational c = testing::random_rational(rng, 0, 4);
            MultiPoly p(2);
            p.add_term({2, 0}, a);
            p.add_term({1, 1}, b);
            p.add_term({0, 2}, c);
            p.add_term({1, 0}, Rational(1));
            p.add_term({3, 1}, Rational(2));
            const TestOutcome o = test_subpoly_n(p);
            if (a.sign() < 0) {
                CHECK(o.result == TestResult::fail);
                continue;
            }
            REQUIRE(o.discriminant);
            CHECK(*o.discriminant == Rational(4) * a * c - b * b);
            CHECK((o.result == TestResult::pass) == (a.sign() > 0 && o.discriminant->sign() > 0));
        }
    }

    TEST_CASE("property: soundness against grid sampling")
    {
        std::mt19937_64 rng(33);
        int proven = 0;
        int disproven = 0;
        for (int trial = 0; trial < 50; ++trial) {
            MultiPoly p(2);
            std::uniform_int_distribution<unsigned> deg(0, 3);
            for (int t = 0; t < 8; ++t) {
                p.add_term({deg(rng), deg(rng)}, testing::random_positive(rng, 5, 4));
            }
            for (int t = 0; t < 2; ++t) {
                p.add_term({deg(rng), deg(rng)}, -testing::random_positive(rng, trial % 2 ? 2 : 12, 4));
            }
            if (p.is_zero()) {
                continue;
            }
            const Rational xbar = std::vector<Rational>{Rational(1, 2), Rational(1), Rational(2)}[trial % 3];
            const ProofCertificate cert = prove_nonneg(p, xbar, {6, false});
            if (cert.verdict == Verdict::proven) {
                ++proven;
                const Rational step = std::max(Rational(1), Rational(2) * xbar) / Rational(50);
                for (int i = 0; i <= 50; ++i) {
                    for (int j = 0; j <= 50; ++j) {
                        const std::vector<Rational> v{step * Rational(i), step * Rational(j)};
                        CHECK(evaluate(p, v).sign() >= 0);
                    }
                }
                for (int k = 0; k < 50; ++k) {
                    CHECK(evaluate(p, testing::random_point(rng, 2, 0, 40)).sign() >= 0);
                }
            } else if (cert.verdict == Verdict::disproven) {
                ++disproven;
                CHECK(evaluate(p, cert.witness) == cert.witness_value);
                CHECK(cert.witness_value.sign() < 0);
                for (const auto& x : cert.witness) {
                    CHECK(x.sign() > 0);
                }
            }
        }
        CHECK(proven >= 5);
        CHECK(disproven >= 5);
    }

    TEST_CASE("property: regions cover the orthant and halves tile the box")
    {
        const Rational xbar(3, 2);
        const auto rs = regions(2, xbar);
        for (int i = 0; i <= 12; ++i) {
            for (int j = 0; j <= 12; ++j) {
                const std::vector<Rational> v{Rational(i, 4), Rational(j, 4)};
                int hits = 0;
                for (const auto& r : rs) {
                    bool in = true;
                    for (std::size_t k = 0; k < 2; ++k) {
                        in = in && (r.sides[k] == Side::high ? v[k] >= xbar : v[k] <= xbar);
                    }
                    hits += in ? 1 : 0;
                }
                CHECK(hits >= 1);
            }
        }
        const BoxSpec parent{{{Rational(0), Rational(1)}, {Rational(1, 3), Rational(2)}}};
        const auto kids = parent.halve();
        REQUIRE(kids.size() == 4);
        for (int i = 1; i <= 24; ++i) {
            for (int j = 1; j <= 24; ++j) {
                const std::vector<Rational> v{Rational(i, 24), Rational(1, 3) + Rational(j, 24) * Rational(5, 3)};
                int hits = 0;
                for (const auto& k : kids) {
                    bool in = true;
                    for (std::size_t d = 0; d < 2; ++d) {
                        in = in && k.bounds[d].first < v[d] && v[d] <= k.bounds[d].second;
                    }
                    hits += in ? 1 : 0;
                }
                CHECK(hits == 1);
            }
        }
    }

    TEST_CASE("property: witness maps back")
    {
        std::mt19937_64 rng(34);
        const MultiPoly p = P("x0^3*x1-4*x0*x1^2+x1+2");
        for (const auto& r : regions(2, Rational(2, 3))) {
            const MultiPoly rp = region_poly(p, r);
            const auto v = testing::random_point(rng, 2, 0, 5);
            const auto x = region_to_original(r, v);
            CHECK(evaluate(rp, v).sign() == evaluate(p, x).sign());
            const auto [fin, box] = finitize(p, r);
            for (const auto& child : box.halve()) {
                const auto y = box_to_original(r, child, v);
                CHECK(evaluate(box_map(fin, child.bounds), v).sign() == evaluate(p, y).sign());
            }
        }
    }
}
