#include <gtest/gtest.h>

#include "characters.hpp"
#include "crystals.hpp"
#include "verify.hpp"

using namespace demazure;

namespace {

Character from_terms(int n, std::initializer_list<std::pair<std::vector<Int>, Int>> ts) {
    Character c(n);
    for (auto& [w, m] : ts) c.add_term(Weight(w), m);
    return c;
}

// sl2/sl3 Weyl group via simple reflections on weights.
Weight simple_reflect(const Weight& w, int j) {
    const int n = w.rank();
    Weight out = w;
    const Int p = w[j];
    out[j] -= 2 * p;
    if (j > 1) out[j - 1] += p;
    if (j < n) out[j + 1] += p;
    return out;
}

}  // namespace

TEST(Characters, ProductHandExpansion) {
    const Character v1 = irr_character(Weight({1}));
    EXPECT_EQ(char_mul(v1, v1), from_terms(1, {{{2}, 1}, {{0}, 2}, {{-2}, 1}}));
    EXPECT_TRUE(char_mul(Character(1), v1).empty());
}

TEST(Characters, Sl2Strings) {
    for (Int m = 0; m <= 8; ++m) {
        const auto ch = irr_character(Weight({m}));
        EXPECT_EQ(Int(ch.terms.size()), m + 1);
        for (Int k = -m; k <= m; k += 2) EXPECT_EQ(ch.at(Weight({k})), 1);
    }
}

TEST(Characters, FundamentalAndAdjoint) {
    for (int n = 1; n <= 4; ++n) {
        const auto ch = irr_character(fundamental(n, 1));
        EXPECT_EQ(Int(ch.terms.size()), n + 1);
        EXPECT_EQ(ch.mass(), n + 1);
    }
    EXPECT_EQ(irr_character(Weight({1, 1})).mass(), 8);
    EXPECT_EQ(irr_character(Weight({1, 1})).at(Weight({0, 0})), 2);
}

TEST(Characters, WeylDimension) {
    for (int n = 1; n <= 3; ++n)
        for_each_weight(n, 3, [&](const Weight& lambda) { EXPECT_EQ(irr_character(lambda).mass(), irr_dim(lambda)); });
    EXPECT_EQ(irr_dim(Weight({1, 0, 0, 0})), 5);
    EXPECT_EQ(irr_dim(Weight({0, 1, 0, 0})), 10);
    EXPECT_EQ(irr_dim(Weight({2, 2})), 27);
}

TEST(Characters, WeylSymmetry) {
    for (int n = 1; n <= 3; ++n)
        for_each_weight(n, 2, [&](const Weight& lambda) {
            const auto ch = irr_character(lambda);
            for (auto& [w, m] : ch.terms)
                for (int j = 1; j <= n; ++j) EXPECT_EQ(ch.at(simple_reflect(w, j)), m);
        });
}

TEST(Characters, MatchesKRCrystalWeights) {
    // B^{r,s} is classically irreducible of highest weight s varpi_r
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= 3; ++s) {
                Character fromCrystal(n);
                for (auto& b : kr_enumerate(n, r, s)) fromCrystal.add_term(kr_weight(b), 1);
                EXPECT_EQ(fromCrystal, irr_character(Int(s) * fundamental(n, r))) << n << " " << r << " " << s;
            }
}

TEST(Characters, DemazureSmallLevel) {
    EXPECT_EQ(demazure_character(2, Weight({1, 1})), irr_character(Weight({1, 1})));
    const auto d = demazure_character(2, Weight({2, 1}));
    EXPECT_EQ(d, char_mul(irr_character(Weight({2, 0})), irr_character(Weight({0, 1}))));
    EXPECT_EQ(d.mass(), 18);
    // level above lambda(h_theta) gives the irreducible
    for_each_weight(2, 3, [&](const Weight& lambda) {
        EXPECT_EQ(demazure_character(lambda[1] + lambda[2] + 1, lambda), irr_character(lambda));
    });
    EXPECT_THROW(demazure_character(2, Weight({1, 1, 1})), Error);
}

TEST(Characters, DemazureMatchesCrystalComponent) {
    for (int n = 1; n <= 2; ++n)
        for (Int level = 1; level <= 3; ++level)
            for_each_weight(n, level, [&](const Weight& lambda) {
                Character sum(n);
                for (auto& w : demazure_decomposition(n, level, lambda)) sum = char_add(sum, irr_character(w));
                EXPECT_EQ(sum, demazure_character(level, lambda)) << to_string(lambda) << " level " << level;
            });
}

TEST(Characters, LevelOneIsTensorOfFundamentals) {
    for (int n = 1; n <= 2; ++n)
        for_each_weight(n, 3, [&](const Weight& lambda) {
            Int want = 1;
            for (int j = 1; j <= n; ++j)
                for (Int k = 0; k < lambda[j]; ++k) want *= irr_dim(fundamental(n, j));
            EXPECT_EQ(demazure_dim(1, lambda), want);
        });
}

TEST(Characters, FlagMultiplicities) {
    const auto t = flag_multiplicities(demazure_character(1, Weight({2})), 2);
    EXPECT_EQ(t.entries, (std::map<Weight, Int>{{Weight({2}), 1}, {Weight({0}), 1}}));
    const auto one = flag_multiplicities(demazure_character(3, Weight({1, 2})), 3);
    EXPECT_EQ(one.entries, (std::map<Weight, Int>{{Weight({1, 2}), 1}}));
    EXPECT_EQ(flag_multiplicities(char_one(2), 4).entries, (std::map<Weight, Int>{{Weight({0, 0}), 1}}));
    EXPECT_THROW(flag_multiplicities(from_terms(1, {{{-1}, 1}}), 2), Error);
}

TEST(Characters, IrreducibleDecomposition) {
    const auto v = irr_character(Weight({1, 0}));
    const auto t = irreducible_decomposition(char_mul(v, v));
    EXPECT_EQ(t.entries, (std::map<Weight, Int>{{Weight({2, 0}), 1}, {Weight({0, 1}), 1}}));
}

TEST(Characters, PieriIdentitySmallGrid) {
    const auto r = verify_character_identity({.max_rank = 2, .max_coord = 3, .max_level = 3});
    EXPECT_TRUE(r.passed) << (r.failures.empty() ? "" : r.failures.front());
}
