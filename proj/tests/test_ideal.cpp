#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace mfmc;
using fixtures::as_set;

namespace {

std::set<IntVector> gens(const MonomialIdealGens &g) { return as_set(g.gens); }

/// Direct definition of I^(i) through the minimal primes (covers from the
/// brute-force oracle).
bool in_symbolic(const IntVector &a, const std::vector<std::vector<std::size_t>> &covers,
                 std::size_t i) {
    for (const auto &cover : covers) {
        Int s = 0;
        for (auto v : cover)
            s += a[v];
        if (s < static_cast<Int>(i))
            return false;
    }
    return true;
}

} // namespace

TEST(OrdinaryPower, Examples) {
    const auto ex = fixtures::example().matrix();
    EXPECT_EQ(gens(ordinary_power(ex, 1)), as_set(ex.columns()));
    EXPECT_EQ(gens(ordinary_power(fixtures::triangle().matrix(), 2)),
              (std::set<IntVector>{{2, 2, 0}, {0, 2, 2}, {2, 0, 2},
                                   {1, 2, 1}, {2, 1, 1}, {1, 1, 2}}));
    EXPECT_EQ(ordinary_power(fixtures::single_edge().matrix(), 3).gens,
              std::vector<IntVector>{{3}});
}

TEST(OrdinaryPower, DropsNonMinimalSums) {
    // (x1^2, x1x2, x2^2)^2 = (x1^4, x1^3x2, x1^2x2^2, x1x2^3, x2^4)
    const auto g = ordinary_power(fixtures::matrix({{2, 0}, {1, 1}, {0, 2}}), 2);
    EXPECT_EQ(g.gens.size(), 5u);
}

TEST(SymbolicPower, Examples) {
    EXPECT_EQ(gens(symbolic_power(fixtures::triangle(), 2)),
              (std::set<IntVector>{{1, 1, 1}, {2, 2, 0}, {0, 2, 2}, {2, 0, 2}}));
    EXPECT_EQ(gens(symbolic_power(fixtures::triangle(), 1)),
              as_set(fixtures::triangle().matrix().columns()));
    EXPECT_EQ(symbolic_power(fixtures::single_edge(), 5).gens, std::vector<IntVector>{{5}});
}

TEST(SymbolicPower, RequiresSquareFree) {
    EXPECT_THROW(symbolic_power(fixtures::matrix({{2, 1}, {1, 2}}), 2), NotSquareFreeError);
    EXPECT_NO_THROW(symbolic_power(fixtures::triangle().matrix(), 2));
}

TEST(ClosurePower, Examples) {
    const auto tri = fixtures::triangle().matrix();
    const auto closed = closure_power(tri, 2);
    EXPECT_TRUE(ideal_equal(closed, ordinary_power(tri, 2)));
    EXPECT_FALSE(membership({1, 1, 1}, closed));

    const auto ex = fixtures::example().matrix();
    EXPECT_EQ(gens(closure_power(ex, 1)), as_set(ex.columns()));

    // (x1^2x2, x1x2^2) = x1x2 (x1, x2) is integrally closed: (x1x2)^2 is
    // not in I^2, so x1x2 is not integral over I.
    const auto shifted = fixtures::matrix({{2, 1}, {1, 2}});
    EXPECT_EQ(gens(closure_power(shifted, 1)), (std::set<IntVector>{{2, 1}, {1, 2}}));
    EXPECT_FALSE(oracle::closure_by_powers({{2, 1}, {1, 2}}, {1, 1}, 1, 3));

    // (x1^2, x2^2): the closure adds x1x2 since (x1x2)^2 = x1^2 x2^2 is in I^2.
    const auto squares = fixtures::matrix({{2, 0}, {0, 2}});
    EXPECT_EQ(gens(closure_power(squares, 1)), (std::set<IntVector>{{2, 0}, {0, 2}, {1, 1}}));
    EXPECT_TRUE(oracle::closure_by_powers({{2, 0}, {0, 2}}, {1, 1}, 1, 2));
}

TEST(IdealEqual, Examples) {
    const auto ex = fixtures::example().matrix();
    EXPECT_TRUE(ideal_equal(ordinary_power(ex, 2), closure_power(ex, 2)));
    const auto tri = fixtures::triangle();
    EXPECT_FALSE(ideal_equal(ordinary_power(tri.matrix(), 2), symbolic_power(tri, 2)));
    EXPECT_TRUE(ideal_equal(symbolic_power(tri, 2), symbolic_power(tri, 2)));
}

TEST(Membership, Examples) {
    const auto tri = fixtures::triangle();
    EXPECT_TRUE(membership({1, 1, 1}, symbolic_power(tri, 2)));
    EXPECT_FALSE(membership({1, 1, 1}, ordinary_power(tri.matrix(), 2)));
    EXPECT_FALSE(membership({0, 0, 0}, ideal_of(tri.matrix())));
}

TEST(Minimalize, KeepsAntichain) {
    EXPECT_EQ(as_set(minimalize({{1, 1}, {2, 1}, {1, 1}, {0, 3}})),
              (std::set<IntVector>{{1, 1}, {0, 3}}));
}

TEST(IdealProperties, ContainmentChainAndBounds) {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 4, q = 1 + rng() % 5;
        const auto c = clutter_from_edges(oracle::random_clutter(rng, n, q), n);
        const auto &m = c.matrix();
        SCOPED_TRACE(trial);
        EXPECT_EQ(gens(ordinary_power(m, 1)), as_set(m.columns()));
        for (std::size_t i = 1; i <= 4; ++i) {
            const auto ord = ordinary_power(m, i);
            const auto clo = closure_power(m, i);
            const auto sym = symbolic_power(c, i);
            for (const auto &g : ord.gens) {
                EXPECT_TRUE(membership(g, clo));
                for (Int x : g)
                    EXPECT_LE(x, static_cast<Int>(i) * m.max_entry());
            }
            for (const auto &g : clo.gens) {
                EXPECT_TRUE(membership(g, sym));
                for (Int x : g)
                    EXPECT_LE(x, static_cast<Int>(i) * m.max_entry());
            }
            for (const auto &g : sym.gens)
                for (Int x : g)
                    EXPECT_LE(x, static_cast<Int>(i));
        }
    }
}

TEST(IdealProperties, SymbolicMembershipMatchesPrimes) {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 5, q = 1 + rng() % 6;
        const auto edges = oracle::random_clutter(rng, n, q);
        const auto c = clutter_from_edges(edges, n);
        const auto covers = oracle::minimal_covers(edges, n);
        const std::size_t i = 1 + rng() % 3;
        const auto sym = symbolic_power(c, i);
        std::uniform_int_distribution<Int> entry(0, static_cast<Int>(i));
        for (int sample = 0; sample < 50; ++sample) {
            IntVector a(n);
            for (auto &x : a)
                x = entry(rng);
            EXPECT_EQ(membership(a, sym), in_symbolic(a, covers, i)) << join(a);
        }
    }
}

TEST(IdealProperties, ClosureMatchesPowerWitnesses) {
    // x^a is in the closure of I^i iff (x^a)^p lies in I^{p i} for some p;
    // p <= 3 suffices on these small instances.
    std::mt19937 rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 3, q = 1 + rng() % 3;
        const auto cols = oracle::random_exponents(rng, n, q, 2);
        const auto m = ExponentMatrix::from_rows(cols);
        for (std::size_t i = 1; i <= 2; ++i) {
            const auto clo = closure_power(m, i);
            IntVector a(n, 0);
            const Int top = static_cast<Int>(i) * m.max_entry();
            while (true) {
                EXPECT_EQ(membership(a, clo), oracle::closure_by_powers(cols, a, i, 3))
                    << "trial " << trial << " i " << i << " a " << join(a);
                std::size_t k = 0;
                while (k < n && a[k] == top)
                    a[k++] = 0;
                if (k == n)
                    break;
                ++a[k];
            }
        }
    }
}
