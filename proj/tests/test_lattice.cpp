#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace mfmc;
using fixtures::as_set;

namespace {

/// Hilbert basis recomputed by brute force: irreducible cone points in a
/// box that contains every basis element (degree <= `t`, entries <= t*M).
std::set<IntVector> brute_hilbert(const ExponentMatrix &m, Int t) {
    const auto gens = rees_cone(m).cone.generators;
    IntVector box(m.n() + 1, t * m.max_entry());
    box[m.n()] = t;
    return oracle::irreducibles(oracle::facets(gens), box);
}

} // namespace

TEST(HilbertBasis, ExampleIsThePublishedList) {
    const auto hb = hilbert_basis(fixtures::example().matrix());
    EXPECT_EQ(hb.elements.size(), 9u);
    EXPECT_EQ(as_set(hb.elements), fixtures::example_hilbert_basis());
}

TEST(HilbertBasis, TriangleHasNoNewElements) {
    const auto m = fixtures::triangle().matrix();
    const auto hb = hilbert_basis(m);
    EXPECT_EQ(as_set(hb.elements), as_set(rees_cone(m).cone.generators));
    EXPECT_EQ(as_set(hb.elements), brute_hilbert(m, 2));
}

TEST(HilbertBasis, SingleEdge) {
    EXPECT_EQ(as_set(hilbert_basis(fixtures::single_edge().matrix()).elements),
              (std::set<IntVector>{{1, 0}, {1, 1}}));
}

TEST(HilbertBasis, NonNormalIdealGainsAnElement) {
    const auto m = fixtures::matrix({{2, 0}, {0, 2}});
    const auto hb = hilbert_basis(m);
    EXPECT_TRUE(as_set(hb.elements).count({1, 1, 1}));
    EXPECT_EQ(as_set(hb.elements), brute_hilbert(m, 2));
}

TEST(HilbertBasis, OutputIsCanonical) {
    auto elems = hilbert_basis(fixtures::example().matrix()).elements;
    auto sorted = elems;
    sort_canonical(sorted);
    EXPECT_EQ(elems, sorted);
}

TEST(HilbertBasis, ParallelepipedCap) {
    Limits tight;
    tight.parallelepiped = 1;
    EXPECT_THROW(hilbert_basis(fixtures::matrix({{2, 0}, {0, 2}}), tight), SizeLimitError);
}

TEST(Semigroup, Membership) {
    const auto ex = fixtures::example().matrix();
    EXPECT_TRUE(semigroup_member({2, 0, 0, 0, 2, 2}, ex));
    EXPECT_TRUE(semigroup_member({0, 0, 0, 0, 0, 0}, ex));
    EXPECT_FALSE(semigroup_member({1, 1, 1, 2}, fixtures::triangle().matrix()));
    EXPECT_TRUE(semigroup_member({2, 2, 1, 2}, fixtures::triangle().matrix()));
    EXPECT_THROW(semigroup_member({1, 1}, ex), InvalidInputError);
}

TEST(Normality, Fixtures) {
    EXPECT_TRUE(is_normal(fixtures::example().matrix()).normal);
    EXPECT_TRUE(is_normal(fixtures::triangle().matrix()).normal);
    // x1x2 (x1, x2) is normal; (1,1,1) is not even in its Rees cone.
    EXPECT_TRUE(is_normal(fixtures::matrix({{2, 1}, {1, 2}})).normal);
    const auto bad = is_normal(fixtures::matrix({{2, 0}, {0, 2}}));
    EXPECT_FALSE(bad.normal);
    EXPECT_EQ(bad.witness, (IntVector{1, 1, 1}));
}

TEST(Normality, WitnessIsLexicographicallyLeast) {
    // x1^3, x2^3: the closure adds x1^2x2 and x1x2^2 in degree 1.
    const auto m = fixtures::matrix({{3, 0}, {0, 3}});
    const auto r = is_normal(m);
    ASSERT_FALSE(r.normal);
    std::optional<IntVector> least;
    for (const auto &h : hilbert_basis(m).elements)
        if (!semigroup_member(h, m) && (!least || h < *least))
            least = h;
    EXPECT_EQ(r.witness, least);
    EXPECT_EQ(r.witness, (IntVector{1, 2, 1}));
}

TEST(Smith, SingleColumns) {
    const auto one = smith_invariants(fixtures::single_edge().matrix());
    EXPECT_EQ(one.factors, std::vector<Int>{1});
    EXPECT_TRUE(one.torsion_free());
    const auto two = smith_invariants(fixtures::matrix({{2}}));
    EXPECT_EQ(two.factors, std::vector<Int>{1});
    EXPECT_EQ(two.rank, 1u);
}

TEST(Smith, ExampleHasA2TorsionFactor) {
    // The lifted 6x4 matrix has rank 4 and the gcd of its 4x4 minors is 2.
    const auto s = smith_invariants(fixtures::example().matrix());
    EXPECT_EQ(s.factors, (std::vector<Int>{1, 1, 1, 2}));
    EXPECT_EQ(s.rank, 4u);
    EXPECT_FALSE(s.torsion_free());
    std::vector<IntVector> b;
    for (const auto &row : linalg::BigMatrix(lifted_matrix(fixtures::example().matrix())))
        b.push_back(narrow(row));
    EXPECT_EQ(oracle::determinantal_factors(b), s.factors);
}

TEST(Smith, TriangleIsTorsionFree) {
    EXPECT_TRUE(smith_invariants(fixtures::triangle().matrix()).torsion_free());
}

TEST(Smith, GeneralMatrixAndZeroFactors) {
    linalg::BigMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    const auto s = smith_normal_form(a);
    EXPECT_EQ(s.factors, (std::vector<Int>{2, 6, 12}));
    const auto z = smith_normal_form({{1, 2}, {2, 4}});
    EXPECT_EQ(z.factors, (std::vector<Int>{1, 0}));
    EXPECT_EQ(z.rank, 1u);
    EXPECT_TRUE(z.torsion_free());
}

TEST(LatticeProperties, SmithAgreesWithDeterminantalDivisors) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<Int> entry(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        std::vector<IntVector> m(r, IntVector(c));
        for (auto &row : m)
            for (auto &x : row)
                x = entry(rng);
        SCOPED_TRACE(trial);
        const auto s = smith_normal_form(linalg::to_big(m));
        EXPECT_EQ(s.factors, oracle::determinantal_factors(m));
        for (std::size_t k = 1; k < s.factors.size(); ++k)
            if (s.factors[k] != 0)
                EXPECT_EQ(s.factors[k] % s.factors[k - 1], 0);
    }
}

TEST(LatticeProperties, SmithIsPermutationInvariant) {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng() % 4, q = 1 + rng() % 6;
        const auto m = ExponentMatrix::from_rows(
            oracle::edges_to_rows(oracle::random_clutter(rng, n, q), n));
        auto b = lifted_matrix(m);
        const auto base = smith_normal_form(b).factors;
        std::shuffle(b.begin(), b.end(), rng);
        EXPECT_EQ(smith_normal_form(b).factors, base);
        std::vector<std::size_t> perm(b.front().size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto &row : b) {
            auto copy = row;
            for (std::size_t j = 0; j < perm.size(); ++j)
                row[j] = copy[perm[j]];
        }
        EXPECT_EQ(smith_normal_form(b).factors, base);
    }
}

TEST(LatticeProperties, HilbertBasisIsSoundAndComplete) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 4, q = 1 + rng() % 4;
        const auto m = ExponentMatrix::from_rows(oracle::random_exponents(rng, n, q, 3));
        SCOPED_TRACE(trial);
        const auto cone = with_facets(rees_cone(m).cone);
        const auto hb = hilbert_basis(cone);
        for (const auto &h : hb.elements)
            EXPECT_TRUE(cone_member(h, cone));
        const auto facet_set = oracle::facets(cone.generators);
        IntVector box(n + 1, 3 * m.max_entry());
        box[n] = 3;
        std::map<IntVector, bool> memo;
        for (const auto &p : oracle::box_points(facet_set, box))
            EXPECT_TRUE(oracle::decomposes(p, hb.elements, memo)) << join(p);
    }
}

TEST(LatticeProperties, NormalityMatchesPowersUpToThree) {
    std::mt19937 rng(22);
    std::size_t checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 3, q = 1 + rng() % 4;
        const auto m = ExponentMatrix::from_rows(oracle::random_exponents(rng, n, q, 3));
        const auto hb = hilbert_basis(m);
        Int top = 0;
        for (const auto &h : hb.elements)
            top = std::max(top, h.back());
        if (top > 3)
            continue;
        ++checked;
        bool powers_closed = true;
        for (std::size_t i = 1; i <= 3; ++i)
            powers_closed = powers_closed &&
                            ideal_equal(ordinary_power(m, i), closure_power(m, i));
        EXPECT_EQ(is_normal(m, hb).normal, powers_closed) << trial;
    }
    EXPECT_GT(checked, 20u);
}
