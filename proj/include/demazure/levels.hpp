#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace demazure {

/// lambda(h_alpha) = (s - 1) * level + m with m in [1, level].
struct LevelSplit {
    Int s = 0;
    Int m = 1;

    friend auto operator<=>(const LevelSplit&, const LevelSplit&) = default;
};

inline LevelSplit level_split(Int value, Int level) {
    detail::require(level >= 1, ErrorKind::invalid_argument, "level must be positive");
    const Int s_minus_1 = detail::floor_div(value - 1, level);
    return {s_minus_1 + 1, value - s_minus_1 * level};
}

/// Dominant weight plus level, with the split of every positive root cached.
class LevelContext {
public:
    LevelContext(Weight lambda, Int level) : lambda_(std::move(lambda)), level_(level) {
        detail::require(lambda_.rank() >= 1, ErrorKind::invalid_argument, "rank must be positive");
        detail::require(level_ >= 1, ErrorKind::invalid_argument, "level must be positive");
        detail::require(lambda_.dominant(), ErrorKind::invalid_argument, "weight must be dominant");
        const int n = rank();
        table_.resize(static_cast<std::size_t>(n * n));
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) table_[index(i, j)] = level_split(pair(lambda_, {i, j}), level_);
    }

    int rank() const { return lambda_.rank(); }
    Int level() const { return level_; }
    const Weight& lambda() const { return lambda_; }

    const LevelSplit& split(const RootPos& a) const {
        detail::require(1 <= a.i && a.i <= a.j && a.j <= rank(), ErrorKind::out_of_range, [&] { return "root " + to_string(a); });
        return table_[index(a.i, a.j)];
    }
    Int s(int i, int j) const { return split({i, j}).s; }
    Int m(int i, int j) const { return split({i, j}).m; }
    Int s(const RootPos& a) const { return split(a).s; }
    Int m(const RootPos& a) const { return split(a).m; }

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * rank() + (j - 1)); }

    Weight lambda_;
    Int level_;
    std::vector<LevelSplit> table_;
};

inline LevelSplit level_split(const LevelContext& ctx, const RootPos& alpha) { return ctx.split(alpha); }

/// R_i^+ : roots alpha_{r,p} with r <= i <= p, ordered by (r, p).
inline std::vector<RootPos> roots_Ri(int n, int i) {
    detail::require(1 <= i && i <= n, ErrorKind::out_of_range, [&] { return "index " + std::to_string(i); });
    std::vector<RootPos> out;
    for (int r = 1; r <= i; ++r)
        for (int p = i; p <= n; ++p) out.push_back({r, p});
    return out;
}

inline std::vector<RootPos> roots_Rlambda_i(const LevelContext& ctx, int i) {
    std::vector<RootPos> out;
    for (auto& a : roots_Ri(ctx.rank(), i))
        if (ctx.m(a) < ctx.level()) out.push_back(a);
    return out;
}

/// Condition for chi: m of alpha_{r, k_s - 1} < level for every k_s in K
/// and every r < k_s outside K.
inline bool in_pieri_set(const LevelContext& ctx, const EpsSet& chi) {
    for (int k : chi.K)
        for (int r = 1; r < k; ++r)
            if (!chi.contains(r) && ctx.m(r, k - 1) >= ctx.level()) return false;
    return true;
}

inline std::vector<EpsSet> pieri_set(const LevelContext& ctx, int i) {
    std::vector<EpsSet> out;
    for (auto& chi : orbit_fundamental(ctx.rank(), i))
        if (in_pieri_set(ctx, chi)) out.push_back(chi);
    return out;
}

/// mu = varpi_i - chi as a Q+ vector: coefficient j counts elements of
/// {1..i} minus those of K that are at most j.
inline QPlusVector varpi_minus_chi(const EpsSet& chi, int i) {
    const int n = chi.n;
    QPlusVector mu(std::vector<Int>(static_cast<std::size_t>(n), 0));
    for (int j = 1; j <= n; ++j) {
        Int c = std::min(i, j);
        for (int k : chi.K)
            if (k <= j) --c;
        mu[j] = c;
    }
    return mu;
}

inline std::vector<QPlusVector> tilde_set(const LevelContext& ctx, int i) {
    std::vector<QPlusVector> out;
    for (auto& chi : pieri_set(ctx, i)) out.push_back(varpi_minus_chi(chi, i));
    return out;
}

inline bool supports_overlap(const RootPos& a, const RootPos& b) { return a.i <= b.j && b.i <= a.j; }

inline RootPos root_union(const RootPos& a, const RootPos& b) {
    detail::require(supports_overlap(a, b), ErrorKind::disjoint_support, [&] { return to_string(a) + " and " + to_string(b); });
    return {std::min(a.i, b.i), std::max(a.j, b.j)};
}

inline RootPos root_intersect(const RootPos& a, const RootPos& b) {
    detail::require(supports_overlap(a, b), ErrorKind::disjoint_support, [&] { return to_string(a) + " and " + to_string(b); });
    return {std::max(a.i, b.i), std::min(a.j, b.j)};
}

/// a - b is a root (positive or negative) for overlapping a != b exactly when
/// they share one endpoint.
inline bool difference_is_root(const RootPos& a, const RootPos& b) {
    return supports_overlap(a, b) && ((a.i == b.i) != (a.j == b.j));
}

/// big - small for small a prefix or suffix of big.
inline RootPos root_difference(const RootPos& big, const RootPos& small) {
    if (big.i == small.i && small.j < big.j) return {small.j + 1, big.j};
    if (big.j == small.j && big.i < small.i) return {big.i, small.i - 1};
    throw Error(ErrorKind::invalid_argument, to_string(big) + " - " + to_string(small) + " is not a root");
}

/// (a cup b) - (a cap b) = gamma1 + gamma2 with gamma1 the left part.
inline std::pair<RootPos, RootPos> gamma_decomposition(const RootPos& a, const RootPos& b) {
    detail::require(supports_overlap(a, b), ErrorKind::disjoint_support, [&] { return to_string(a) + " and " + to_string(b); });
    detail::require(a != b && !difference_is_root(a, b), ErrorKind::difference_is_root,
                    to_string(a) + " and " + to_string(b));
    return {RootPos{std::min(a.i, b.i), std::max(a.i, b.i) - 1}, RootPos{std::min(a.j, b.j) + 1, std::max(a.j, b.j)}};
}

}  // namespace demazure
