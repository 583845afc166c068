// Expands D^5_{2w1+3w2+4w3} * V(w2) for sl4, then checks dimensions and the
// level-one flag on a small sl3 case.

#include <iostream>

#include "demazure.hpp"

using namespace demazure;

int main() {
    const LevelContext ctx(Weight({2, 3, 4}), 5);
    std::cout << "Pieri terms of D^5_" << to_string(ctx.lambda()) << " * V(ϖ2):\n";
    for (auto& t : pieri_expand(ctx, 2)) {
        std::cout << "  q^" << t.shift << "  D_" << to_string(t.target) << "   (mu = " << to_string(t.mu) << ")\n";
    }

    const auto [soc, Lambda] = socle(ctx);
    std::cout << "socle: " << to_string(soc) << "  (" << to_string(Lambda) << ")\n";

    // sl3: dimensions on both sides of the Pieri expansion
    const Weight lambda({2, 1});
    const Int level = 2;
    Int rhs = 0;
    for (auto& t : pieri_expand(LevelContext(lambda, level), 1)) rhs += demazure_dim(level, t.target);
    std::cout << "sl3: dim D^2_" << to_string(lambda) << " * 3 = " << demazure_dim(level, lambda) * 3 << ", sum over terms = "
              << rhs << '\n';

    std::cout << "level-one flag of D^1_" << to_string(lambda) << " at level 2:\n";
    for (auto& [mu, c] : mult_table_level1(2, level, lambda).entries) std::cout << "  " << c << " x D^2_" << to_string(mu) << '\n';
    return 0;
}
