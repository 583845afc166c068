#pragma once

// The (lambda, i)-poset on R_i^+ and a deterministic linear extension.

#include <algorithm>
#include <compare>
#include <map>
#include <vector>

#include "levels.hpp"

namespace demazure {

enum class PosetRelation { Equal, Greater, Less, Incomparable };

inline const char* to_string(PosetRelation r) {
    switch (r) {
    case PosetRelation::Equal: return "Equal";
    case PosetRelation::Greater: return "Greater";
    case PosetRelation::Less: return "Less";
    case PosetRelation::Incomparable: return "Incomparable";
    }
    return "?";
}

inline bool in_Ri(int n, int i, const RootPos& a) { return 1 <= a.i && a.i <= i && i <= a.j && a.j <= n; }

namespace detail {

/// The defining identity for a >= b, a != b.
inline bool poset_ge(const LevelContext& ctx, const RootPos& a, const RootPos& b) {
    const Int l = ctx.level();
    const RootPos u = root_union(a, b);
    const RootPos c = root_intersect(a, b);
    if (difference_is_root(a, b)) {
        return ctx.m(u) == ctx.m(c) + ctx.m(root_difference(u, c)) - l * Int(a == c);
    }
    if (c == a || c == b) {
        auto [g1, g2] = gamma_decomposition(a, b);
        return ctx.m(u) == ctx.m(c) + ctx.m(g1) + ctx.m(g2) - 2 * l * Int(a == c);
    }
    return ctx.m(u) == ctx.m(a) + ctx.m(root_difference(u, a)) - l &&
           ctx.m(u) == ctx.m(b) + ctx.m(root_difference(u, b));
}

}  // namespace detail

inline PosetRelation compare(const LevelContext& ctx, int i, const RootPos& a, const RootPos& b) {
    const int n = ctx.rank();
    detail::require(in_Ri(n, i, a), ErrorKind::not_in_ri, [&] { return to_string(a); });
    detail::require(in_Ri(n, i, b), ErrorKind::not_in_ri, [&] { return to_string(b); });
    if (a == b) return PosetRelation::Equal;
    const bool ge = detail::poset_ge(ctx, a, b);
    const bool le = detail::poset_ge(ctx, b, a);
    detail::require(!(ge && le), ErrorKind::antisymmetry_violation, [&] { return to_string(a) + " vs " + to_string(b); });
    if (ge) return PosetRelation::Greater;
    if (le) return PosetRelation::Less;
    return PosetRelation::Incomparable;
}

enum class TieBreak { Lexicographic, ReverseLexicographic };

/// A total order on R_i^+ refining the poset, smallest first.
class LinearExtension {
public:
    LinearExtension(const LevelContext& ctx, int i, TieBreak tie = TieBreak::Lexicographic) {
        const auto roots = roots_Ri(ctx.rank(), i);
        const std::size_t N = roots.size();
        // greater[a][b] : roots[a] > roots[b]
        std::vector<std::vector<char>> greater(N, std::vector<char>(N, 0));
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b)
                greater[a][b] = compare(ctx, i, roots[a], roots[b]) == PosetRelation::Greater;
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b)
                if (greater[a][b])
                    for (std::size_t c = 0; c < N; ++c)
                        detail::require(!greater[b][c] || greater[a][c], ErrorKind::not_a_partial_order,
                                        to_string(roots[a]) + " > " + to_string(roots[b]) + " > " +
                                            to_string(roots[c]));

        std::vector<char> placed(N, 0);
        while (order_.size() < N) {
            std::size_t pick = N;
            for (std::size_t a = 0; a < N; ++a) {
                if (placed[a]) continue;
                bool minimal = true;
                for (std::size_t b = 0; b < N && minimal; ++b)
                    if (!placed[b] && greater[a][b]) minimal = false;
                if (!minimal) continue;
                if (pick == N || (tie == TieBreak::Lexicographic ? roots[a] < roots[pick] : roots[pick] < roots[a]))
                    pick = a;
            }
            placed[pick] = 1;
            rank_[roots[pick]] = static_cast<int>(order_.size());
            order_.push_back(roots[pick]);
        }
    }

    const std::vector<RootPos>& order() const { return order_; }
    int rank_of(const RootPos& a) const {
        auto it = rank_.find(a);
        detail::require(it != rank_.end(), ErrorKind::not_in_ri, [&] { return to_string(a); });
        return it->second;
    }

private:
    std::vector<RootPos> order_;
    std::map<RootPos, int> rank_;
};

inline std::vector<RootPos> linear_extension(const LevelContext& ctx, int i, TieBreak tie = TieBreak::Lexicographic) {
    return LinearExtension(ctx, i, tie).order();
}

inline std::vector<RootPos> sorted_by(const LinearExtension& ext, std::vector<RootPos> t) {
    std::sort(t.begin(), t.end(), [&](const RootPos& a, const RootPos& b) { return ext.rank_of(a) < ext.rank_of(b); });
    return t;
}

/// Induced order on multisets of roots. On an equal common prefix the longer
/// tuple is the smaller one.
inline std::strong_ordering tuple_compare(const LinearExtension& ext, const std::vector<RootPos>& t1,
                                          const std::vector<RootPos>& t2) {
    const auto a = sorted_by(ext, t1);
    const auto b = sorted_by(ext, t2);
    const std::size_t k = std::min(a.size(), b.size());
    for (std::size_t t = 0; t < k; ++t) {
        const int ra = ext.rank_of(a[t]);
        const int rb = ext.rank_of(b[t]);
        if (ra != rb) return ra <=> rb;
    }
    return b.size() <=> a.size();
}

}  // namespace demazure
