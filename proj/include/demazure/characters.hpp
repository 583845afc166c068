#pragma once

// Weight characters over Z[P], irreducible characters, the rank <= 2 Demazure
// character oracle and greedy flag decomposition.

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace demazure {

/// Finite map weight -> nonzero multiplicity. Genuine characters have all
/// multiplicities positive; intermediate residuals may not.
struct Character {
    int n = 1;
    std::map<Weight, Int> terms;

    Character() = default;
    explicit Character(int rank) : n(rank) {}

    static Character monomial(const Weight& w, Int mult = 1) {
        Character c(w.rank());
        if (mult != 0) c.terms.emplace(w, mult);
        return c;
    }

    bool empty() const { return terms.empty(); }
    Int at(const Weight& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? 0 : it->second;
    }
    void add_term(const Weight& w, Int mult) {
        if (mult == 0) return;
        auto [it, fresh] = terms.emplace(w, mult);
        if (!fresh && (it->second += mult) == 0) terms.erase(it);
    }
    Int mass() const {
        Int s = 0;
        for (auto& [w, c] : terms) s += c;
        return s;
    }
    bool genuine() const {
        for (auto& [w, c] : terms)
            if (c <= 0) return false;
        return true;
    }

    friend bool operator==(const Character&, const Character&) = default;
};

inline Character char_add(const Character& a, const Character& b) {
    detail::check_rank(a.n, b.n);
    Character out = a;
    for (auto& [w, c] : b.terms) out.add_term(w, c);
    return out;
}

inline Character char_sub(const Character& a, const Character& b) {
    detail::check_rank(a.n, b.n);
    Character out = a;
    for (auto& [w, c] : b.terms) out.add_term(w, -c);
    return out;
}

inline Character char_scale(const Character& a, Int k) {
    Character out(a.n);
    if (k == 0) return out;
    out.terms = a.terms;
    for (auto& [w, c] : out.terms) c *= k;
    return out;
}

inline Character char_mul(const Character& a, const Character& b) {
    detail::check_rank(a.n, b.n);
    Character out(a.n);
    for (auto& [wa, ca] : a.terms)
        for (auto& [wb, cb] : b.terms) out.add_term(wa + wb, ca * cb);
    return out;
}

inline Character char_one(int n) { return Character::monomial(Weight::zero(n)); }

inline Character char_pow(const Character& a, Int k) {
    Character out = char_one(a.n);
    for (Int t = 0; t < k; ++t) out = char_mul(out, a);
    return out;
}

/// Weyl dimension formula prod over positive roots of (lambda+rho)(h)/rho(h).
inline Int irr_dim(const Weight& lambda) {
    detail::require(lambda.dominant(), ErrorKind::invalid_argument, "weight must be dominant");
    Int num = 1, den = 1;
    for (auto& a : positive_roots(lambda.rank())) {
        num *= pair(lambda, a) + a.height();
        den *= a.height();
        const Int g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    detail::require(den == 1, ErrorKind::invalid_argument, "non-integral Weyl dimension");
    return num;
}

inline Weight level_steinberg_low(const Weight& lambda, Int level) {
    Weight w = lambda;
    for (auto& c : w.coords) c %= level;
    return w;
}

/// Numerical multiplicities of a flag; entries[mu] is the number of quotients
/// isomorphic to the level-`level` Demazure module of weight mu.
struct MultiplicityTable {
    Weight base;
    Int level = 1;
    std::map<Weight, Int> entries;

    Int at(const Weight& w) const {
        auto it = entries.find(w);
        return it == entries.end() ? 0 : it->second;
    }
    friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;
};

/// Memoised character computations. Not thread-safe; use one per thread.
class CharacterOracle {
public:
    const Character& irr(const Weight& lambda) {
        detail::require(lambda.dominant(), ErrorKind::invalid_argument, "weight must be dominant");
        if (auto it = irr_.find(lambda); it != irr_.end()) return it->second;
        const int n = lambda.rank();
        Character ch(n);
        int i = 0;
        for (int j = 1; j <= n && !i; ++j)
            if (lambda[j] > 0) i = j;
        if (i == 0) {
            ch = char_one(n);
        } else {
            // V(lambda - w_i) (x) V(w_i) = sum over classical Pieri terms; the top one is V(lambda).
            const Weight rest = lambda - fundamental(n, i);
            ch = char_mul(irr(rest), fundamental_char(n, i));
            for (auto& chi : classical_pieri(rest, i)) {
                const Weight w = add_chi(rest, chi);
                if (w != lambda) ch = char_sub(ch, irr(w));
            }
        }
        return irr_.emplace(lambda, std::move(ch)).first->second;
    }

    const Character& demazure(Int level, const Weight& lambda) {
        const int n = lambda.rank();
        detail::require(n <= 2, ErrorKind::rank_unsupported, "closed-form Demazure characters need n <= 2");
        detail::require(level >= 1, ErrorKind::invalid_argument, "level must be positive");
        detail::require(lambda.dominant(), ErrorKind::invalid_argument, "weight must be dominant");
        const auto key = std::make_pair(level, lambda);
        if (auto it = dem_.find(key); it != dem_.end()) return it->second;

        const Weight low = level_steinberg_low(lambda, level);
        Character ch = block(level, low);
        for (int j = 1; j <= n; ++j) {
            const Int k = lambda[j] / level;
            if (k > 0) ch = char_mul(ch, char_pow(irr(level * fundamental(n, j)), k));
        }
        return dem_.emplace(key, std::move(ch)).first->second;
    }

    /// Greedy triangular extraction against level-`level` Demazure characters.
    MultiplicityTable flag_multiplicities(const Character& c, Int level) {
        return extract(c, level, [&](const Weight& w) -> const Character& { return demazure(level, w); });
    }

    MultiplicityTable irreducible_decomposition(const Character& c) {
        return extract(c, 0, [&](const Weight& w) -> const Character& { return irr(w); });
    }

    static Character fundamental_char(int n, int i) {
        Character ch(n);
        for (auto& chi : orbit_fundamental(n, i)) ch.add_term(eps_weight(chi), 1);
        return ch;
    }

private:
    Character block(Int level, const Weight& low) {
        const int n = low.rank();
        if (n == 1) return irr(low);
        const Int a = low[1], b = low[2];
        if (a + b < level) return irr(low);
        Character ch(n);
        for (Int c = 0; c <= a + b - level; ++c) ch = char_add(ch, irr(Weight({a - c, b - c})));
        return ch;
    }

    template <class Family>
    static MultiplicityTable extract(const Character& c, Int level, Family&& family) {
        MultiplicityTable out{Weight::zero(c.n), level, {}};
        Character residual = c;
        while (!residual.empty()) {
            std::vector<Weight> dom;
            for (auto& [w, m] : residual.terms)
                if (w.dominant()) dom.push_back(w);
            detail::require(!dom.empty(), ErrorKind::nonzero_residual, "no dominant weight left in residual");
            const Weight* top = nullptr;
            for (auto& w : dom) {
                bool maximal = true;
                for (auto& v : dom)
                    if (v != w && dominates(v, w)) {
                        maximal = false;
                        break;
                    }
                if (maximal && (top == nullptr || *top < w)) top = &w;
            }
            const Weight nu = *top;
            const Int coeff = residual.at(nu);
            detail::require(coeff > 0, ErrorKind::negative_coefficient, [&] { return to_string(nu); });
            out.entries[nu] = coeff;
            residual = char_sub(residual, char_scale(family(nu), coeff));
        }
        return out;
    }

    std::map<Weight, Character> irr_;
    std::map<std::pair<Int, Weight>, Character> dem_;
};

inline Character irr_character(const Weight& lambda) { return CharacterOracle().irr(lambda); }

inline Character demazure_character(Int level, const Weight& lambda) {
    return CharacterOracle().demazure(level, lambda);
}

inline Int demazure_dim(Int level, const Weight& lambda) { return demazure_character(level, lambda).mass(); }

inline MultiplicityTable flag_multiplicities(const Character& c, Int level) {
    return CharacterOracle().flag_multiplicities(c, level);
}

inline MultiplicityTable irreducible_decomposition(const Character& c) {
    return CharacterOracle().irreducible_decomposition(c);
}

}  // namespace demazure
