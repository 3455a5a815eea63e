#include <doctest.h>

#include "gasprove/conjecture.hpp"
#include "gasprove/parser.hpp"
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

MeshParams mesh(Rational eps, unsigned n, unsigned restarts = 50)
{
    MeshParams m;
    m.eps = eps;
    m.n = n;
    m.restarts = restarts;
    return m;
}

} // namespace

TEST_SUITE("conjecture")
{
    TEST_CASE("mesh_minimize examples")
    {
        const auto sq = mesh_minimize(P("(x0-1)^2+(x1-1)^2"), mesh(Rational(1, 4), 8));
        REQUIRE_FALSE(sq.empty());
        CHECK(sq.front().point == std::vector<Rational>{Rational(1), Rational(1)});
        CHECK(sq.front().value == Rational(0));
        CHECK(sq.front().index == std::vector<unsigned>{4, 4});

        const auto lin = mesh_minimize(P("x0+x1"), mesh(Rational(1, 5), 20));
        CHECK(lin.front().point == std::vector<Rational>{Rational(1, 5), Rational(1, 5)});
        CHECK(lin.front().value == Rational(2, 5));

        const auto k5 = mesh_minimize(P(golden::running_example_k5), MeshParams{});
        CHECK(k5.front().value == Rational(0));
        CHECK(k5.front().point == std::vector<Rational>{Rational(2), Rational(2)});

        CHECK_THROWS(mesh_minimize(P("x0"), mesh(Rational(0), 10)));
    }

    TEST_CASE("conjecture_k examples")
    {
        const RecurrenceSpec s = parse_rde("(4+x0)/(1+x1)");
        const Conjecture c = conjecture_k(s, find_equilibrium(s), MeshParams{});
        REQUIRE(c.k);
        CHECK(*c.k == 5);
        REQUIRE(c.trials.size() == 5);
        for (int k = 0; k < 4; ++k) {
            REQUIRE(c.trials[k].best);
            CHECK(c.trials[k].best->value.sign() < 0);
        }

        const RecurrenceSpec half = parse_rde("1/2*x0");
        const Conjecture h = conjecture_k(half, find_equilibrium(half), MeshParams{});
        REQUIRE(h.k);
        CHECK(*h.k == 1);

        const RecurrenceSpec inv = parse_rde("1/x0");
        MeshParams m;
        m.max_k = 4;
        const Conjecture i = conjecture_k(inv, find_equilibrium(inv), m);
        CHECK_FALSE(i.k);
        REQUIRE(i.trials.size() == 4);
        CHECK_FALSE(i.trials[1].best);
        CHECK_FALSE(i.trials[3].best);
        CHECK(i.trials[0].best->value.sign() < 0);

        const Conjecture later = conjecture_k(s, find_equilibrium(s), MeshParams{}, 6);
        REQUIRE(later.k);
        CHECK(*later.k >= 6);
    }

    TEST_CASE("property: descent ends in mesh-local minima with exact values")
    {
        std::mt19937_64 rng(51);
        for (int trial = 0; trial < 30; ++trial) {
            const MultiPoly p = testing::random_poly(rng, 2, 3, 6);
            if (p.is_zero()) {
                continue;
            }
            const MeshParams m = mesh(Rational(1, 3), 12, 20);
            const auto minima = mesh_minimize(p, m);
            REQUIRE_FALSE(minima.empty());
            for (std::size_t i = 1; i < minima.size(); ++i) {
                CHECK(minima[i - 1].value <= minima[i].value);
            }
            for (const auto& mp : minima) {
                CHECK(evaluate(p, mp.point) == mp.value);
                for (std::size_t v = 0; v < 2; ++v) {
                    CHECK(mp.point[v] == m.eps * Rational(static_cast<long>(mp.index[v])));
                    for (int step : {-1, 1}) {
                        const long next = static_cast<long>(mp.index[v]) + step;
                        if (next < 1 || next > 12) {
                            continue;
                        }
                        auto pt = mp.point;
                        pt[v] = m.eps * Rational(next);
                        CHECK(evaluate(p, pt) >= mp.value);
                    }
                }
            }
        }
    }

    TEST_CASE("property: a negative reported minimum is a real counterexample")
    {
        std::mt19937_64 rng(52);
        for (int trial = 0; trial < 30; ++trial) {
            const MultiPoly p = testing::random_poly(rng, 2, 3, 6);
            if (p.is_zero()) {
                continue;
            }
            const MeshParams m = mesh(Rational(1, 2), 10, 20);
            const auto minima = mesh_minimize(p, m);
            Rational exhaustive = evaluate(p, minima.front().point);
            for (unsigned i = 1; i <= 10; ++i) {
                for (unsigned j = 1; j <= 10; ++j) {
                    const std::vector<Rational> pt{m.eps * Rational(i), m.eps * Rational(j)};
                    exhaustive = std::min(exhaustive, evaluate(p, pt));
                }
            }
            CHECK(exhaustive <= minima.front().value);
            if (minima.front().value.sign() < 0) {
                CHECK(exhaustive.sign() < 0);
            }
        }
    }

    TEST_CASE("determinism")
    {
        const MultiPoly p = P("x0^3-3*x0*x1+x1^3+1/2");
        const auto a = mesh_minimize(p, MeshParams{});
        const auto b = mesh_minimize(p, MeshParams{});
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].index == b[i].index);
        }
    }
}
