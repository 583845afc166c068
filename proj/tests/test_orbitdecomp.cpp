#include <gtest/gtest.h>

#include <set>

#include "orbitdecomp.hpp"
#include "verify.hpp"

using namespace demazure;

namespace {

std::set<std::vector<RootPos>> root_sets(const std::vector<RootTuple>& ts) {
    std::set<std::vector<RootPos>> out;
    for (auto t : ts) {
        std::sort(t.roots.begin(), t.roots.end());
        out.insert(t.roots);
    }
    return out;
}

}  // namespace

TEST(OrbitDecomp, ChiMuRoundTrip) {
    for (int n = 1; n <= 5; ++n)
        for (int i = 1; i <= n; ++i)
            for (auto& chi : orbit_fundamental(n, i)) {
                const auto mu = varpi_minus_chi(chi, i);
                EXPECT_EQ(chi_from_mu(n, i, mu), chi);
                EXPECT_EQ(nested_decomposition(chi, i).sum, mu);
            }
    EXPECT_THROW(chi_from_mu(2, 1, QPlusVector(std::vector<Int>{2, 0})), Error);
}

TEST(OrbitDecomp, NestedExamples) {
    EXPECT_TRUE(nested_decomposition(highest_eps(3, 2), 2).roots.empty());
    const auto a = nested_decomposition(EpsSet{3, {3, 4}}, 2);
    EXPECT_EQ(a.roots, (std::vector<RootPos>{{2, 2}, {1, 3}}));
    const auto b = nested_decomposition(EpsSet{5, {5}}, 1);
    EXPECT_EQ(b.roots, (std::vector<RootPos>{{1, 4}}));
}

TEST(OrbitDecomp, NestedInvariants) {
    for (int n = 1; n <= 6; ++n)
        for (int i = 1; i <= n; ++i)
            for (auto& chi : orbit_fundamental(n, i)) {
                const auto t = nested_decomposition(chi, i);
                const auto mu = varpi_minus_chi(chi, i);
                // k is the alpha_i coefficient of mu
                EXPECT_EQ(Int(t.size()), mu[i]);
                for (std::size_t p = 0; p < t.roots.size(); ++p) {
                    EXPECT_TRUE(in_Ri(n, i, t.roots[p]));
                    if (p > 0) {
                        EXPECT_LT(t.roots[p].i, t.roots[p - 1].i);
                        EXPECT_GT(t.roots[p].j, t.roots[p - 1].j);
                    }
                }
            }
}

TEST(OrbitDecomp, MinimizerTie) {
    const LevelContext ctx(Weight({2, 3, 4}), 5);
    const auto base = nested_decomposition(EpsSet{3, {3, 4}}, 2);
    EXPECT_EQ(s_sum(ctx, base.roots), 3);
    EXPECT_EQ(s_sum(ctx, {{1, 2}, {2, 3}}), 3);
    const auto n_mu = minimizer_set(ctx, base);
    EXPECT_EQ(root_sets(n_mu), (std::set<std::vector<RootPos>>{{{1, 2}, {2, 3}}, {{1, 3}, {2, 2}}}));
    for (auto& t : n_mu) EXPECT_EQ(t.sum, base.sum);
    // the chosen representative is one of the two, shift unaffected
    const auto o = orbit_decomposition(ctx, 2, EpsSet{3, {3, 4}});
    auto roots = o.roots;
    std::sort(roots.begin(), roots.end());
    EXPECT_TRUE(root_sets(n_mu).count(roots));
    EXPECT_EQ(grading_shift(ctx, 2, EpsSet{3, {3, 4}}), 3);
}

TEST(OrbitDecomp, SingleRootHasNoChoice) {
    const LevelContext ctx(Weight({2, 3, 4, 2, 2}), 4);
    const auto base = nested_decomposition(EpsSet{5, {5}}, 1);
    EXPECT_EQ(minimizer_set(ctx, base).size(), 1u);
    EXPECT_EQ(orbit_decomposition(ctx, 1, EpsSet{5, {5}}).roots, (std::vector<RootPos>{{1, 4}}));
    EXPECT_TRUE(orbit_decomposition(ctx, 1, highest_eps(5, 1)).roots.empty());
}

TEST(OrbitDecomp, GradingShiftExamples) {
    const LevelContext a(Weight({2, 3, 4}), 5);
    EXPECT_EQ(grading_shift(a, 2, highest_eps(3, 2)), 0);
    EXPECT_EQ(grading_shift(a, 2, EpsSet{3, {1, 3}}), 1);
    EXPECT_EQ(grading_shift(a, 2, EpsSet{3, {1, 4}}), 2);
    EXPECT_EQ(grading_shift(a, 2, EpsSet{3, {2, 4}}), 2);
    const LevelContext b(Weight({2, 3, 4, 2, 2}), 4);
    EXPECT_EQ(grading_shift(b, 1, EpsSet{5, {2}}), 1);
    EXPECT_EQ(grading_shift(b, 1, EpsSet{5, {3}}), 2);
    EXPECT_EQ(grading_shift(b, 1, EpsSet{5, {5}}), 3);
}

TEST(OrbitDecomp, MinimizerIsMinimal) {
    // brute force over all start reassignments for small ranks
    for (int n = 1; n <= 4; ++n)
        for (Int level = 1; level <= 4; ++level)
            for_each_weight(n, 3, [&](const Weight& lambda) {
                const LevelContext ctx(lambda, level);
                for (int i = 1; i <= n; ++i)
                    for (auto& chi : orbit_fundamental(n, i)) {
                        const auto base = nested_decomposition(chi, i);
                        const auto n_mu = minimizer_set(ctx, base);
                        ASSERT_FALSE(n_mu.empty());
                        const Int best = s_sum(ctx, n_mu.front().roots);
                        for (auto& t : n_mu) EXPECT_EQ(s_sum(ctx, t.roots), best);
                        EXPECT_LE(best, s_sum(ctx, base.roots));
                        EXPECT_EQ(grading_shift(ctx, i, chi), best);
                    }
            });
}

TEST(OrbitDecomp, ShiftIndependentOfTieBreak) {
    for (int n = 2; n <= 4; ++n)
        for (Int level = 2; level <= 4; ++level)
            for_each_weight(n, 2, [&](const Weight& lambda) {
                const LevelContext ctx(lambda, level);
                for (int i = 1; i <= n; ++i) {
                    const LinearExtension lex(ctx, i), rev(ctx, i, TieBreak::ReverseLexicographic);
                    for (auto& chi : pieri_set(ctx, i)) {
                        const auto a = orbit_decomposition(ctx, lex, chi, i);
                        const auto b = orbit_decomposition(ctx, rev, chi, i);
                        EXPECT_EQ(s_sum(ctx, a.roots), s_sum(ctx, b.roots));
                        EXPECT_EQ(a.sum, b.sum);
                    }
                }
            });
}
