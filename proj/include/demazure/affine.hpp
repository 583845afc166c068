#pragma once

// Affine weights modulo delta, the socle of a Demazure module, shifted orbit
// elements and dominantization inside the stabilizer of a dominant weight.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levels.hpp"

namespace demazure {

/// a[j] is the coefficient of Lambda_j, j = 0..n.
struct AffineWeight {
    std::vector<Int> a;

    AffineWeight() = default;
    explicit AffineWeight(std::vector<Int> c) : a(std::move(c)) {}

    int rank() const { return static_cast<int>(a.size()) - 1; }
    Int operator[](int j) const { return a[static_cast<std::size_t>(j)]; }
    Int& operator[](int j) { return a[static_cast<std::size_t>(j)]; }
    Int level() const { return std::accumulate(a.begin(), a.end(), Int(0)); }
    bool dominant() const {
        return std::all_of(a.begin(), a.end(), [](Int c) { return c >= 0; });
    }
    Weight finite_part() const { return Weight(std::vector<Int>(a.begin() + 1, a.end())); }

    static AffineWeight from_finite(const Weight& w, Int level) {
        AffineWeight out(std::vector<Int>(static_cast<std::size_t>(w.rank() + 1), 0));
        Int rest = level;
        for (int j = 1; j <= w.rank(); ++j) {
            out[j] = w[j];
            rest -= w[j];
        }
        out[0] = rest;
        return out;
    }

    friend auto operator<=>(const AffineWeight&, const AffineWeight&) = default;
};

/// Level-zero weight modulo delta in Lambda coordinates; entries sum to zero.
struct LevelZeroVector {
    std::vector<Int> c;

    int rank() const { return static_cast<int>(c.size()) - 1; }
    Int operator[](int j) const { return c[static_cast<std::size_t>(j)]; }
    friend auto operator<=>(const LevelZeroVector&, const LevelZeroVector&) = default;
};

inline AffineWeight operator+(AffineWeight x, const LevelZeroVector& v) {
    detail::check_rank(x.rank(), v.rank());
    for (int j = 0; j <= x.rank(); ++j) x[j] += v[j];
    return x;
}

inline std::string to_string(const AffineWeight& x) {
    std::string out;
    for (int j = 0; j <= x.rank(); ++j) {
        const Int c = x[j];
        if (c == 0) continue;
        if (c < 0) out += "-";
        else if (!out.empty()) out += "+";
        const Int abs = c < 0 ? -c : c;
        if (abs != 1) out += std::to_string(abs);
        out += "Λ" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

namespace detail {

/// Cyclic index into {0..n}; n+1 and 0 coincide.
inline int lambda_index(Int t, int n) { return static_cast<int>(mod(t, n + 1)); }

/// Cyclic index into {1..n+1}.
inline int eps_index(Int t, int n) { return lambda_index(t - 1, n) + 1; }

}  // namespace detail

/// sum over t of eps_t = Lambda_t - Lambda_{t-1}, indices modulo n+1.
inline LevelZeroVector eps_vector(int n, const std::vector<int>& positions) {
    LevelZeroVector v{std::vector<Int>(static_cast<std::size_t>(n + 1), 0)};
    for (int t : positions) {
        v.c[static_cast<std::size_t>(detail::lambda_index(t, n))] += 1;
        v.c[static_cast<std::size_t>(detail::lambda_index(t - 1, n))] -= 1;
    }
    return v;
}

/// Recovers the eps positions of a sum of distinct eps_t; nullopt if v is not
/// of that form.
inline std::optional<std::vector<int>> eps_positions(const LevelZeroVector& v) {
    const int n = v.rank();
    if (std::accumulate(v.c.begin(), v.c.end(), Int(0)) != 0) return std::nullopt;
    // x_t = [t in T]; c_j = x_j - x_{j+1} for j = 1..n and c_0 = x_{n+1} - x_1.
    std::vector<Int> x(static_cast<std::size_t>(n + 2), 0);
    for (int j = 1; j <= n; ++j) x[static_cast<std::size_t>(j + 1)] = x[static_cast<std::size_t>(j)] - v[j];
    const Int lo = *std::min_element(x.begin() + 1, x.end());
    std::vector<int> out;
    for (int t = 1; t <= n + 1; ++t) {
        const Int xt = x[static_cast<std::size_t>(t)] - lo;
        if (xt > 1) return std::nullopt;
        if (xt == 1) out.push_back(t);
    }
    return out;
}

/// s_j(mu) = mu - mu(h_j) alpha_j with alpha_j = 2 Lambda_j - Lambda_{j-1} - Lambda_{j+1}.
template <class V>
V reflect(V mu, int j) {
    const int n = static_cast<int>(mu.size()) - 1;
    const Int p = mu[static_cast<std::size_t>(j)];
    mu[static_cast<std::size_t>(j)] -= 2 * p;
    mu[static_cast<std::size_t>(detail::lambda_index(j - 1, n))] += p;
    mu[static_cast<std::size_t>(detail::lambda_index(j + 1, n))] += p;
    return mu;
}

struct SocleData {
    Weight soc;
    AffineWeight Lambda;
    int h = 0;
    std::vector<int> sigma;  // sigma[t] for t = 1..n+1; sigma[0] unused
};

/// Sorted-remainder algorithm; valid for any integral weight since the
/// splits use floor division.
inline SocleData socle_of_weight(const Weight& lambda, Int level) {
    const int n = lambda.rank();
    std::vector<LevelSplit> sp(static_cast<std::size_t>(n + 1));
    Int ssum = 0;
    for (int j = 1; j <= n; ++j) {
        sp[static_cast<std::size_t>(j)] = level_split(pair(lambda, {1, j}), level);
        ssum += sp[static_cast<std::size_t>(j)].s;
    }
    SocleData out;
    out.h = static_cast<int>(detail::mod(ssum, n + 1));
    out.sigma.resize(static_cast<std::size_t>(n + 2));
    std::iota(out.sigma.begin() + 1, out.sigma.end() - 1, 1);
    std::stable_sort(out.sigma.begin() + 1, out.sigma.end() - 1,
                     [&](int x, int y) { return sp[static_cast<std::size_t>(x)].m < sp[static_cast<std::size_t>(y)].m; });
    out.sigma[static_cast<std::size_t>(n + 1)] = n + 1;

    auto m_at = [&](int t) -> Int {
        if (t == 0) return 0;
        if (t == n + 1) return level;
        return sp[static_cast<std::size_t>(out.sigma[static_cast<std::size_t>(t)])].m;
    };
    out.Lambda = AffineWeight(std::vector<Int>(static_cast<std::size_t>(n + 1), 0));
    for (int j = 0; j <= n; ++j) out.Lambda[detail::lambda_index(j - out.h, n)] = m_at(j + 1) - m_at(j);
    out.soc = out.Lambda.finite_part();
    return out;
}

inline std::pair<Weight, AffineWeight> socle(const LevelContext& ctx) {
    auto d = socle_of_weight(ctx.lambda(), ctx.level());
    return {d.soc, d.Lambda};
}

/// eps positions sigma^{-1}(k - 1) - h, with k - 1 = 0 read as n + 1.
inline std::vector<int> shifted_positions(const SocleData& d, const EpsSet& chi) {
    const int n = chi.n;
    std::vector<int> inv(static_cast<std::size_t>(n + 2), 0);
    for (int t = 1; t <= n + 1; ++t) inv[static_cast<std::size_t>(d.sigma[static_cast<std::size_t>(t)])] = t;
    std::vector<int> out;
    for (int k : chi.K) {
        const int idx = k - 1 == 0 ? n + 1 : k - 1;
        out.push_back(detail::eps_index(inv[static_cast<std::size_t>(idx)] - d.h, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline LevelZeroVector shifted_element(const LevelContext& ctx, const EpsSet& chi) {
    detail::check_rank(ctx.rank(), chi.n);
    return eps_vector(chi.n, shifted_positions(socle_of_weight(ctx.lambda(), ctx.level()), chi));
}

struct DominantizeResult {
    AffineWeight weight;
    std::vector<int> word;  // z = s_{word[0]} s_{word[1]} ...; rightmost applied first
};

/// Moves every eps position down across edges j with a_j = 0 until
/// Lambda + v is dominant. Each move is the simple reflection s_j, which fixes
/// Lambda because a_j = 0.
inline DominantizeResult dominantize_positions(const AffineWeight& Lambda, std::vector<int> T) {
    const int n = Lambda.rank();
    detail::require(Lambda.dominant() && Lambda.level() >= 1, ErrorKind::invalid_argument,
                    "Lambda must be dominant of positive level");
    std::vector<char> occupied(static_cast<std::size_t>(n + 2), 0);
    for (int t : T) {
        detail::require(1 <= t && t <= n + 1 && !occupied[static_cast<std::size_t>(t)], ErrorKind::invalid_argument,
                        "eps positions must be distinct in [1, n+1]");
        occupied[static_cast<std::size_t>(t)] = 1;
    }
    std::vector<int> applied;
    const std::size_t cap = static_cast<std::size_t>(n + 1) * (T.size() + 1) * static_cast<std::size_t>(n + 2);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int p = 1; p <= n + 1; ++p) {
            if (!occupied[static_cast<std::size_t>(p)]) continue;
            const int j = p - 1;  // s_j swaps eps_j and eps_{j+1}; s_0 swaps eps_{n+1} and eps_1
            const int below = j == 0 ? n + 1 : j;
            if (Lambda[j] != 0 || occupied[static_cast<std::size_t>(below)]) continue;
            occupied[static_cast<std::size_t>(p)] = 0;
            occupied[static_cast<std::size_t>(below)] = 1;
            applied.push_back(j);
            moved = true;
            detail::require(applied.size() <= cap, ErrorKind::no_dominant_found, "iteration cap exceeded");
        }
    }
    std::vector<int> final_positions;
    for (int t = 1; t <= n + 1; ++t)
        if (occupied[static_cast<std::size_t>(t)]) final_positions.push_back(t);
    DominantizeResult out{Lambda + eps_vector(n, final_positions), {applied.rbegin(), applied.rend()}};
    detail::require(out.weight.dominant(), ErrorKind::no_dominant_found, [&] { return to_string(out.weight); });
    return out;
}

inline DominantizeResult dominantize(const AffineWeight& Lambda, const LevelZeroVector& v) {
    detail::check_rank(Lambda.rank(), v.rank());
    auto T = eps_positions(v);
    detail::require(T.has_value(), ErrorKind::invalid_argument, "vector is not a sum of distinct eps_k");
    return dominantize_positions(Lambda, *T);
}

struct SocleDistinctReport {
    bool distinct = true;
    std::optional<std::pair<EpsSet, EpsSet>> witness;
    std::vector<std::pair<EpsSet, Weight>> socles;
};

inline SocleDistinctReport socle_distinct(const LevelContext& ctx, int i) {
    SocleDistinctReport out;
    for (auto& chi : pieri_set(ctx, i)) {
        const Weight soc = socle_of_weight(add_chi(ctx.lambda(), chi), ctx.level()).soc;
        for (auto& [other, w] : out.socles)
            if (out.distinct && w == soc) {
                out.distinct = false;
                out.witness = std::make_pair(other, chi);
            }
        out.socles.emplace_back(chi, soc);
    }
    return out;
}

}  // namespace demazure
