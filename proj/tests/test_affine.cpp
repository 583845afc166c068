#include <gtest/gtest.h>

#include <numeric>

#include "affine.hpp"
#include "verify.hpp"

using namespace demazure;

namespace {

AffineWeight lambdas(int n, std::initializer_list<int> js) {
    AffineWeight x(std::vector<Int>(static_cast<std::size_t>(n + 1), 0));
    for (int j : js) x[j] += 1;
    return x;
}

// Independent oracle: reflect at any negative coordinate until dominant. The
// dominant element of an affine Weyl orbit of positive level is unique.
std::vector<Int> greedy_dominant(std::vector<Int> a) {
    for (int guard = 0; guard < 100000; ++guard) {
        auto neg = std::find_if(a.begin(), a.end(), [](Int c) { return c < 0; });
        if (neg == a.end()) return a;
        a = reflect(a, static_cast<int>(neg - a.begin()));
    }
    ADD_FAILURE() << "greedy reflection did not terminate";
    return a;
}

}  // namespace

TEST(Affine, SocleWorkedExample) {
    const auto d = socle_of_weight(Weight({4, 3, 5, 1, 3}), 5);
    EXPECT_EQ(d.Lambda, lambdas(5, {0, 2, 3, 4, 5}));
    EXPECT_EQ(d.soc, Weight({0, 1, 1, 1, 1}));
    EXPECT_EQ(d.h, 1);
    EXPECT_EQ(to_string(d.Lambda), "Λ0+Λ2+Λ3+Λ4+Λ5");
}

TEST(Affine, SocleOfZero) {
    for (int n = 1; n <= 5; ++n)
        for (Int l = 1; l <= 4; ++l) {
            const auto d = socle_of_weight(Weight::zero(n), l);
            EXPECT_TRUE(d.soc == Weight::zero(n));
            EXPECT_EQ(d.Lambda[0], l);
            EXPECT_EQ(d.Lambda.level(), l);
        }
}

TEST(Affine, SocleInvariants) {
    for (int n = 1; n <= 4; ++n)
        for (Int level = 1; level <= 5; ++level)
            for_each_weight(n, 4, [&](const Weight& lambda) {
                const auto d = socle_of_weight(lambda, level);
                EXPECT_TRUE(d.Lambda.dominant());
                EXPECT_EQ(d.Lambda.level(), level);
                EXPECT_EQ(d.soc, d.Lambda.finite_part());
                // same class mod Q as lambda
                EXPECT_EQ(detail::mod(q_class(d.soc) - q_class(lambda), n + 1), 0);
                if (level > pair(lambda, {1, n})) { EXPECT_EQ(d.soc, lambda); }
            });
}

TEST(Affine, ShiftedElementSumsToZero) {
    const LevelContext ctx(Weight({4, 3, 5, 1, 3}), 5);
    for (int i = 1; i <= 5; ++i)
        for (auto& chi : orbit_fundamental(5, i)) {
            const auto v = shifted_element(ctx, chi);
            EXPECT_EQ(std::accumulate(v.c.begin(), v.c.end(), Int(0)), 0);
            const auto T = eps_positions(v);
            ASSERT_TRUE(T.has_value());
            EXPECT_EQ(int(T->size()), i);
        }
}

TEST(Affine, ShiftedElementAtZeroWeight) {
    // sigma = id, h = 0: each k moves to k - 1, with 1 wrapping to n+1
    const LevelContext ctx(Weight::zero(3), 2);
    EXPECT_EQ(eps_positions(shifted_element(ctx, EpsSet{3, {1, 3}})), (std::vector<int>{2, 4}));
}

TEST(Affine, EpsPositionsRoundTrip) {
    for (int n = 1; n <= 5; ++n)
        for (int i = 1; i <= n; ++i)
            for (auto& chi : orbit_fundamental(n, i)) EXPECT_EQ(eps_positions(eps_vector(n, chi.K)), chi.K);
    EXPECT_FALSE(eps_positions(LevelZeroVector{{2, -1, -1}}).has_value());
    EXPECT_FALSE(eps_positions(LevelZeroVector{{1, 0, 0}}).has_value());
}

TEST(Affine, DominantizeWorkedExample) {
    const AffineWeight Lambda = lambdas(7, {0, 1, 6});
    const auto r = dominantize(Lambda, eps_vector(7, {4, 5, 8}));
    EXPECT_EQ(r.weight, lambdas(7, {0, 3, 7}));
    EXPECT_EQ(to_string(r.weight), "Λ0+Λ3+Λ7");
    for (int j : r.word) EXPECT_EQ(Lambda[j], 0) << "s" << j << " does not fix Lambda";
    // replaying the word reproduces the result
    std::vector<Int> x = (Lambda + eps_vector(7, {4, 5, 8})).a;
    for (auto it = r.word.rbegin(); it != r.word.rend(); ++it) x = reflect(x, *it);
    EXPECT_EQ(x, r.weight.a);
}

TEST(Affine, DominantizeTrivial) {
    const AffineWeight Lambda = lambdas(3, {0, 1, 2});
    const auto v = eps_vector(3, {2});  // Lambda + eps_2 = Lambda0 + 2 Lambda2
    const auto r = dominantize(Lambda, v);
    EXPECT_TRUE(r.word.empty());
    EXPECT_EQ(r.weight, Lambda + v);
}

TEST(Affine, DominantizeMatchesGreedyOracle) {
    for (int n = 1; n <= 4; ++n)
        for (Int level = 1; level <= 3; ++level)
            for_each_weight(n, level, [&](const Weight& w) {
                if (pair(w, {1, n}) > level) return;
                const AffineWeight Lambda = AffineWeight::from_finite(w, level);
                for (int i = 1; i <= n; ++i)
                    for (auto& chi : orbit_fundamental(n, i)) {
                        const auto v = eps_vector(n, chi.K);
                        const auto r = dominantize(Lambda, v);
                        EXPECT_TRUE(r.weight.dominant());
                        EXPECT_EQ(r.weight.level(), level);
                        for (int j : r.word) EXPECT_EQ(Lambda[j], 0);
                        EXPECT_EQ(r.weight.a, greedy_dominant((Lambda + v).a));
                    }
            });
}

TEST(Affine, DominantizeRejectsBadInput) {
    EXPECT_THROW(dominantize(AffineWeight({0, 0, 0}), eps_vector(2, {1})), Error);
    EXPECT_THROW(dominantize(AffineWeight({1, -1, 1}), eps_vector(2, {1})), Error);
    EXPECT_THROW(dominantize(AffineWeight({1, 0, 0}), LevelZeroVector{{2, -1, -1}}), Error);
}

TEST(Affine, SocleDistinctExamples) {
    const auto a = socle_distinct(LevelContext(Weight({2, 3, 4}), 5), 2);
    EXPECT_TRUE(a.distinct);
    EXPECT_EQ(a.socles.size(), 4u);
    EXPECT_TRUE(socle_distinct(LevelContext(Weight({2, 3, 4, 2, 2}), 4), 1).distinct);
    const auto single = socle_distinct(LevelContext(Weight({1, 1}), 1), 1);
    EXPECT_TRUE(single.distinct);
    EXPECT_EQ(single.socles.size(), 1u);
}

TEST(Affine, OrbitConsistencySmallGrid) {
    const auto r = verify_orbit_consistency({.max_rank = 3, .max_coord = 2, .max_level = 3});
    EXPECT_TRUE(r.passed) << (r.failures.empty() ? "" : r.failures.front());
}
