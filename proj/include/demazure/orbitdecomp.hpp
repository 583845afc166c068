#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "poset.hpp"

namespace demazure {

struct RootTuple {
    std::vector<RootPos> roots;
    QPlusVector sum;

    int size() const { return static_cast<int>(roots.size()); }
    friend bool operator==(const RootTuple&, const RootTuple&) = default;
};

inline RootTuple make_tuple(int n, std::vector<RootPos> roots) {
    QPlusVector sum(std::vector<Int>(static_cast<std::size_t>(n), 0));
    for (auto& a : roots) sum = sum + root_qplus(n, a);
    return {std::move(roots), std::move(sum)};
}

/// Inverse of varpi_minus_chi.
inline EpsSet chi_from_mu(int n, int i, const QPlusVector& mu) {
    detail::check_rank(n, mu.rank());
    EpsSet chi{n, {}};
    Int prev = 0;
    for (int j = 1; j <= n + 1; ++j) {
        const Int count = j <= n ? Int(std::min(i, j)) - mu[j] : Int(i);
        detail::require(count - prev == 0 || count - prev == 1, ErrorKind::pairing_mismatch,
                        "not of the form varpi_i - chi: " + to_string(mu));
        if (count - prev == 1) chi.K.push_back(j);
        prev = count;
    }
    detail::require(chi.size() == i, ErrorKind::pairing_mismatch, [&] { return "not of the form varpi_i - chi: " + to_string(mu); });
    return chi;
}

/// varpi_i - chi as a chain of roots with strictly nested supports.
inline RootTuple nested_decomposition(const EpsSet& chi, int i) {
    std::vector<int> A, B;
    for (int a = i; a >= 1; --a)
        if (!chi.contains(a)) A.push_back(a);
    for (int b : chi.K)
        if (b > i) B.push_back(b);
    detail::require(A.size() == B.size(), ErrorKind::pairing_mismatch, [&] { return to_string(chi); });
    std::vector<RootPos> roots;
    for (std::size_t t = 0; t < A.size(); ++t) roots.push_back({A[t], B[t] - 1});
    return make_tuple(chi.n, std::move(roots));
}

inline Int s_sum(const LevelContext& ctx, const std::vector<RootPos>& roots) {
    Int s = 0;
    for (auto& a : roots) s += ctx.s(a);
    return s;
}

/// N_mu: reassignments of the start indices of a nested tuple achieving the
/// minimal s-sum.
inline std::vector<RootTuple> minimizer_set(const LevelContext& ctx, const RootTuple& base) {
    const std::size_t k = base.roots.size();
    if (k == 0) return {base};
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Int best = std::numeric_limits<Int>::max();
    std::vector<std::vector<RootPos>> winners;
    do {
        std::vector<RootPos> t(k);
        for (std::size_t p = 0; p < k; ++p) t[p] = {base.roots[static_cast<std::size_t>(perm[p])].i, base.roots[p].j};
        const Int s = s_sum(ctx, t);
        if (s < best) {
            best = s;
            winners.clear();
        }
        if (s == best) winners.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<RootTuple> out;
    for (auto& w : winners) out.push_back({std::move(w), base.sum});
    return out;
}

inline RootTuple orbit_decomposition(const LevelContext& ctx, const LinearExtension& ext, const EpsSet& chi, int i) {
    const auto candidates = minimizer_set(ctx, nested_decomposition(chi, i));
    const RootTuple* best = &candidates.front();
    for (auto& c : candidates)
        if (tuple_compare(ext, c.roots, best->roots) < 0) best = &c;
    return {sorted_by(ext, best->roots), best->sum};
}

inline RootTuple orbit_decomposition(const LevelContext& ctx, int i, const EpsSet& chi) {
    return orbit_decomposition(ctx, LinearExtension(ctx, i), chi, i);
}

/// Minimal s-sum over N_mu; independent of the linear extension.
inline Int grading_shift(const LevelContext& ctx, int i, const EpsSet& chi) {
    return s_sum(ctx, minimizer_set(ctx, nested_decomposition(chi, i)).front().roots);
}

}  // namespace demazure
