#pragma once

// Type A Kirillov-Reshetikhin crystals on rectangular tableaux. Tensor products
// follow the rule f_i(b1 (x) b2) = f_i b1 (x) b2 iff eps_i(b1) >= phi_i(b2).
// Affine operators are conjugates of f_1, e_1 by promotion.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "levels.hpp"
#include "report.hpp"

namespace demazure {

/// r x s semistandard tableau with entries in [1, n+1].
struct KRElement {
    int n = 1;
    int r = 1;
    int s = 1;
    std::vector<std::vector<int>> rows;

    int at(int p, int c) const { return rows[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)]; }

    friend auto operator<=>(const KRElement&, const KRElement&) = default;
};

struct TensorElement {
    std::vector<KRElement> factors;

    friend auto operator<=>(const TensorElement&, const TensorElement&) = default;
};

struct CrystalStats {
    std::vector<Int> eps;  // index 0..n
    std::vector<Int> phi;
    Weight wt;

    friend bool operator==(const CrystalStats&, const CrystalStats&) = default;
};

inline bool semistandard(const KRElement& b) {
    if (static_cast<int>(b.rows.size()) != b.r) return false;
    for (int p = 0; p < b.r; ++p) {
        if (static_cast<int>(b.rows[static_cast<std::size_t>(p)].size()) != b.s) return false;
        for (int c = 0; c < b.s; ++c) {
            const int x = b.at(p, c);
            if (x < 1 || x > b.n + 1) return false;
            if (c > 0 && b.at(p, c - 1) > x) return false;
            if (p > 0 && b.at(p - 1, c) >= x) return false;
        }
    }
    return true;
}

inline KRElement kr_highest(int n, int r, int s) {
    KRElement b{n, r, s, {}};
    for (int p = 0; p < r; ++p) b.rows.emplace_back(static_cast<std::size_t>(s), p + 1);
    return b;
}

/// All r x s semistandard tableaux, in lexicographic order of rows.
inline std::vector<KRElement> kr_enumerate(int n, int r, int s) {
    detail::require(1 <= r && r <= n && s >= 0, ErrorKind::out_of_range, "KR parameters");
    std::vector<KRElement> out;
    KRElement b{n, r, s, std::vector<std::vector<int>>(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(s), 0))};
    auto fill = [&](auto&& self, int cell) -> void {
        if (cell == r * s) {
            out.push_back(b);
            return;
        }
        const int p = cell / s, c = cell % s;
        int lo = p + 1;
        if (c > 0) lo = std::max(lo, b.at(p, c - 1));
        if (p > 0) lo = std::max(lo, b.at(p - 1, c) + 1);
        const int hi = n + 1 - (r - 1 - p);
        for (int x = lo; x <= hi; ++x) {
            b.rows[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] = x;
            self(self, cell + 1);
        }
    };
    fill(fill, 0);
    return out;
}

inline Weight kr_weight(const KRElement& b) {
    Weight w = Weight::zero(b.n);
    for (auto& row : b.rows)
        for (int x : row) {
            if (x <= b.n) w[x] += 1;
            if (x >= 2) w[x - 1] -= 1;
        }
    return w;
}

namespace detail {

/// Cells in reading order: rows bottom to top, each left to right.
inline std::vector<std::pair<int, int>> reading_cells(const KRElement& b) {
    std::vector<std::pair<int, int>> out;
    for (int p = b.r - 1; p >= 0; --p)
        for (int c = 0; c < b.s; ++c) out.emplace_back(p, c);
    return out;
}

/// Signature rule on a sequence of (plus, minus) blocks: "-" before "+" cancel.
/// Returns (phi, eps, block of rightmost free +, block of leftmost free -).
struct Signature {
    Int phi = 0;
    Int eps = 0;
    int f_block = -1;
    int e_block = -1;
};

template <class Blocks>
Signature signature(const Blocks& blocks) {
    Signature sig;
    std::vector<std::pair<int, Int>> open;  // stack of unmatched "-" runs
    for (int k = 0; k < static_cast<int>(blocks.size()); ++k) {
        Int plus = blocks[static_cast<std::size_t>(k)].first;
        while (plus > 0 && !open.empty()) {
            const Int take = std::min(plus, open.back().second);
            plus -= take;
            if ((open.back().second -= take) == 0) open.pop_back();
        }
        if (plus > 0) {
            sig.phi += plus;
            sig.f_block = k;
        }
        if (const Int minus = blocks[static_cast<std::size_t>(k)].second; minus > 0) open.emplace_back(k, minus);
    }
    for (auto& [k, c] : open) sig.eps += c;
    if (!open.empty()) sig.e_block = open.front().first;
    return sig;
}

inline Signature letter_signature(const KRElement& b, int i, const std::vector<std::pair<int, int>>& cells) {
    std::vector<std::pair<Int, Int>> blocks;
    for (auto [p, c] : cells) {
        const int x = b.at(p, c);
        blocks.emplace_back(Int(x == i), Int(x == i + 1));
    }
    return signature(blocks);
}

inline int& cell(KRElement& t, int p, int c) {
    return t.rows[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)];
}

/// Moves the hole (value 0) at (p, c) towards the top left: the larger of the
/// entries above and to the left fills it, the one above on a tie.
inline void reverse_slide(KRElement& t, int p, int c) {
    while (true) {
        const int up = p > 0 ? t.at(p - 1, c) : 0;
        const int left = c > 0 ? t.at(p, c - 1) : 0;
        if (up == 0 && left == 0) return;
        if (up >= left) {
            cell(t, p, c) = up;
            cell(t, --p, c) = 0;
        } else {
            cell(t, p, c) = left;
            cell(t, p, --c) = 0;
        }
    }
}

/// Moves the hole at (p, c) towards the bottom right: the smaller of the
/// entries below and to the right fills it, the one below on a tie.
inline void forward_slide(KRElement& t, int p, int c) {
    while (true) {
        const int down = p + 1 < t.r ? t.at(p + 1, c) : 0;
        const int right = c + 1 < t.s ? t.at(p, c + 1) : 0;
        if (down == 0 && right == 0) return;
        if (right == 0 || (down != 0 && down <= right)) {
            cell(t, p, c) = down;
            cell(t, ++p, c) = 0;
        } else {
            cell(t, p, c) = right;
            cell(t, p, ++c) = 0;
        }
    }
}

}  // namespace detail

/// Promotion: drop the letters n+1, slide the holes to the top left, add one
/// to every entry and fill the holes with 1.
inline KRElement promotion(const KRElement& b) {
    KRElement t = b;
    const int last = b.r - 1;
    std::vector<int> holes;
    for (int c = 0; c < b.s; ++c)
        if (t.at(last, c) == b.n + 1) {
            holes.push_back(c);
            detail::cell(t, last, c) = 0;
        }
    for (int c : holes) detail::reverse_slide(t, last, c);
    for (auto& row : t.rows)
        for (int& x : row) x = x == 0 ? 1 : x + 1;
    return t;
}

/// Inverse promotion: drop the letters 1, slide the holes to the bottom right,
/// subtract one from every entry and fill the holes with n+1.
inline KRElement promotion_inverse(const KRElement& b) {
    KRElement t = b;
    std::vector<int> holes;
    for (int c = 0; c < b.s; ++c)
        if (t.at(0, c) == 1) {
            holes.push_back(c);
            detail::cell(t, 0, c) = 0;
        }
    for (auto it = holes.rbegin(); it != holes.rend(); ++it) detail::forward_slide(t, 0, *it);
    for (auto& row : t.rows)
        for (int& x : row) x = x == 0 ? b.n + 1 : x - 1;
    return t;
}

namespace detail {

inline std::optional<KRElement> classical_move(const KRElement& b, int i, bool lower) {
    const auto cells = reading_cells(b);
    const Signature sig = letter_signature(b, i, cells);
    const int k = lower ? sig.f_block : sig.e_block;
    if (k < 0) return std::nullopt;
    KRElement t = b;
    auto [p, c] = cells[static_cast<std::size_t>(k)];
    cell(t, p, c) += lower ? 1 : -1;
    return t;
}

}  // namespace detail

/// f_i on a single KR element, i in 0..n.
inline std::optional<KRElement> kr_f(int i, const KRElement& b) {
    if (i != 0) return detail::classical_move(b, i, true);
    auto t = detail::classical_move(promotion(b), 1, true);
    if (!t) return std::nullopt;
    return promotion_inverse(*t);
}

inline std::optional<KRElement> kr_e(int i, const KRElement& b) {
    if (i != 0) return detail::classical_move(b, i, false);
    auto t = detail::classical_move(promotion(b), 1, false);
    if (!t) return std::nullopt;
    return promotion_inverse(*t);
}

/// (eps_i, phi_i) of a single KR element.
inline std::pair<Int, Int> kr_eps_phi(int i, const KRElement& b) {
    const KRElement t = i == 0 ? promotion(b) : b;
    const auto sig = detail::letter_signature(t, i == 0 ? 1 : i, detail::reading_cells(t));
    return {sig.eps, sig.phi};
}

inline CrystalStats kr_stats(const KRElement& b) {
    CrystalStats st{std::vector<Int>(static_cast<std::size_t>(b.n + 1)), std::vector<Int>(static_cast<std::size_t>(b.n + 1)),
                    kr_weight(b)};
    for (int i = 0; i <= b.n; ++i) {
        auto [e, f] = kr_eps_phi(i, b);
        st.eps[static_cast<std::size_t>(i)] = e;
        st.phi[static_cast<std::size_t>(i)] = f;
    }
    return st;
}

namespace detail {

inline std::vector<std::pair<Int, Int>> tensor_blocks(const TensorElement& b, int i) {
    std::vector<std::pair<Int, Int>> blocks;
    for (auto& x : b.factors) {
        auto [e, f] = kr_eps_phi(i, x);
        blocks.emplace_back(f, e);
    }
    return blocks;
}

inline void check_tensor(const TensorElement& b) {
    require(!b.factors.empty(), ErrorKind::invalid_argument, "empty tensor product");
    for (auto& x : b.factors) require(x.n == b.factors.front().n, ErrorKind::rank_mismatch, "tensor factors");
}

}  // namespace detail

inline std::optional<TensorElement> tensor_f(int i, const TensorElement& b) {
    detail::check_tensor(b);
    const auto sig = detail::signature(detail::tensor_blocks(b, i));
    if (sig.f_block < 0) return std::nullopt;
    TensorElement t = b;
    t.factors[static_cast<std::size_t>(sig.f_block)] = *kr_f(i, b.factors[static_cast<std::size_t>(sig.f_block)]);
    return t;
}

inline std::optional<TensorElement> tensor_e(int i, const TensorElement& b) {
    detail::check_tensor(b);
    const auto sig = detail::signature(detail::tensor_blocks(b, i));
    if (sig.e_block < 0) return std::nullopt;
    TensorElement t = b;
    t.factors[static_cast<std::size_t>(sig.e_block)] = *kr_e(i, b.factors[static_cast<std::size_t>(sig.e_block)]);
    return t;
}

inline CrystalStats stats(const TensorElement& b) {
    detail::check_tensor(b);
    const int n = b.factors.front().n;
    CrystalStats st{std::vector<Int>(static_cast<std::size_t>(n + 1)), std::vector<Int>(static_cast<std::size_t>(n + 1)),
                    Weight::zero(n)};
    for (auto& x : b.factors) st.wt = st.wt + kr_weight(x);
    for (int i = 0; i <= n; ++i) {
        const auto sig = detail::signature(detail::tensor_blocks(b, i));
        st.eps[static_cast<std::size_t>(i)] = sig.eps;
        st.phi[static_cast<std::size_t>(i)] = sig.phi;
    }
    return st;
}

/// wt(h_i) for i in 0..n; h_0 pairs to minus the sum of the others at level zero.
inline Int weight_pairing(const Weight& wt, int i) {
    if (i != 0) return wt[i];
    Int s = 0;
    for (auto c : wt.coords) s += c;
    return -s;
}

/// S_i b = f_i^{wt(h_i)} b or e_i^{-wt(h_i)} b.
inline TensorElement weyl_action(int i, const TensorElement& b) {
    const Int k = weight_pairing(stats(b).wt, i);
    TensorElement t = b;
    for (Int step = 0; step < (k < 0 ? -k : k); ++step) t = *(k > 0 ? tensor_f(i, t) : tensor_e(i, t));
    return t;
}

inline bool demazure_arrow(const TensorElement& b, Int level) { return stats(b).eps[0] >= level; }

/// Precomputed operator tables of one KR crystal B^{r,s}.
struct KRTable {
    int n = 1, r = 1, s = 0;
    std::vector<KRElement> elems;
    std::map<KRElement, int> index;
    std::vector<std::vector<int>> f, e;  // [i][element], -1 for null
    std::vector<std::vector<Int>> eps, phi;
    std::vector<Weight> wt;

    int size() const { return static_cast<int>(elems.size()); }

    static KRTable build(int n, int r, int s) {
        KRTable t;
        t.n = n;
        t.r = r;
        t.s = s;
        t.elems = kr_enumerate(n, r, s);
        for (int k = 0; k < t.size(); ++k) t.index.emplace(t.elems[static_cast<std::size_t>(k)], k);
        const auto N = static_cast<std::size_t>(t.size());
        const auto I = static_cast<std::size_t>(n + 1);
        t.f.assign(I, std::vector<int>(N, -1));
        t.e.assign(I, std::vector<int>(N, -1));
        t.eps.assign(I, std::vector<Int>(N, 0));
        t.phi.assign(I, std::vector<Int>(N, 0));
        for (std::size_t k = 0; k < N; ++k) {
            const auto& b = t.elems[k];
            t.wt.push_back(kr_weight(b));
            for (std::size_t i = 0; i < I; ++i) {
                if (auto x = kr_f(static_cast<int>(i), b)) t.f[i][k] = t.index.at(*x);
                if (auto x = kr_e(static_cast<int>(i), b)) t.e[i][k] = t.index.at(*x);
                auto [ep, ph] = kr_eps_phi(static_cast<int>(i), b);
                t.eps[i][k] = ep;
                t.phi[i][k] = ph;
            }
        }
        return t;
    }
};

/// Process-wide cache of KR tables; safe for concurrent use.
inline std::shared_ptr<const KRTable> kr_table(int n, int r, int s) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const KRTable>> cache;
    const auto key = std::make_tuple(n, r, s);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto table = std::make_shared<const KRTable>(KRTable::build(n, r, s));
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(table)).first->second;
}

/// Tensor product of KR crystals with elements encoded as mixed-radix ids
/// (first factor most significant).
class TensorCrystal {
public:
    TensorCrystal(int n, std::vector<std::pair<int, int>> rs) : n_(n) {
        for (auto [r, s] : rs) factors_.push_back(kr_table(n, r, s));
        for (auto& f : factors_) size_ *= f->size();
    }

    int rank() const { return n_; }
    Int size() const { return size_; }
    const std::vector<std::shared_ptr<const KRTable>>& factors() const { return factors_; }

    std::vector<int> decode(Int id) const {
        std::vector<int> idx(factors_.size());
        for (std::size_t k = factors_.size(); k-- > 0;) {
            idx[k] = static_cast<int>(id % factors_[k]->size());
            id /= factors_[k]->size();
        }
        return idx;
    }

    Int encode(const std::vector<int>& idx) const {
        Int id = 0;
        for (std::size_t k = 0; k < factors_.size(); ++k) id = id * factors_[k]->size() + idx[k];
        return id;
    }

    TensorElement element(Int id) const {
        TensorElement b;
        const auto idx = decode(id);
        for (std::size_t k = 0; k < idx.size(); ++k) b.factors.push_back(factors_[k]->elems[static_cast<std::size_t>(idx[k])]);
        return b;
    }

    Int id_of(const TensorElement& b) const {
        std::vector<int> idx;
        for (std::size_t k = 0; k < factors_.size(); ++k) idx.push_back(factors_[k]->index.at(b.factors[k]));
        return encode(idx);
    }

    /// Id of the tensor product of highest weight elements.
    Int highest() const { return 0; }

    detail::Signature signature(int i, const std::vector<int>& idx) const {
        std::vector<std::pair<Int, Int>> blocks;
        const auto ii = static_cast<std::size_t>(i);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            const auto j = static_cast<std::size_t>(idx[k]);
            blocks.emplace_back(factors_[k]->phi[ii][j], factors_[k]->eps[ii][j]);
        }
        return detail::signature(blocks);
    }

    Int eps(int i, Int id) const { return signature(i, decode(id)).eps; }

    Int f(int i, Int id) const { return move(i, id, true); }
    Int e(int i, Int id) const { return move(i, id, false); }

    Weight weight(Int id) const {
        Weight w = Weight::zero(n_);
        const auto idx = decode(id);
        for (std::size_t k = 0; k < idx.size(); ++k) w = w + factors_[k]->wt[static_cast<std::size_t>(idx[k])];
        return w;
    }

    bool classical_highest(Int id) const {
        const auto idx = decode(id);
        for (int i = 1; i <= n_; ++i)
            if (signature(i, idx).eps > 0) return false;
        return true;
    }

private:
    Int move(int i, Int id, bool lower) const {
        auto idx = decode(id);
        const auto sig = signature(i, idx);
        const int k = lower ? sig.f_block : sig.e_block;
        if (k < 0) return -1;
        const auto& table = *factors_[static_cast<std::size_t>(k)];
        const auto& op = lower ? table.f : table.e;
        idx[static_cast<std::size_t>(k)] = op[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
        return encode(idx);
    }

    int n_;
    std::vector<std::shared_ptr<const KRTable>> factors_;
    Int size_ = 1;
};

/// B^{1,lambda_1} (x) ... (x) B^{n,lambda_n}, zero factors omitted.
inline TensorCrystal tensor_of_weight(const Weight& lambda) {
    std::vector<std::pair<int, int>> rs;
    for (int j = 1; j <= lambda.rank(); ++j)
        if (lambda[j] > 0) rs.emplace_back(j, static_cast<int>(lambda[j]));
    return TensorCrystal(lambda.rank(), rs);
}

struct DemazureComponent {
    std::vector<Int> ids;  // sorted
    std::vector<Weight> highest_weights;  // classical highest weights, sorted
};

/// Undirected component of the highest element under classical edges and
/// 0-edges b -- f_0 b with eps_0(b) >= level.
inline DemazureComponent demazure_component(const TensorCrystal& B, Int level) {
    const int n = B.rank();
    std::vector<char> seen(static_cast<std::size_t>(B.size()), 0);
    std::vector<Int> stack{B.highest()};
    seen[static_cast<std::size_t>(B.highest())] = 1;
    DemazureComponent out;
    auto visit = [&](Int id) {
        if (id >= 0 && !seen[static_cast<std::size_t>(id)]) {
            seen[static_cast<std::size_t>(id)] = 1;
            stack.push_back(id);
        }
    };
    while (!stack.empty()) {
        const Int b = stack.back();
        stack.pop_back();
        out.ids.push_back(b);
        for (int i = 1; i <= n; ++i) {
            visit(B.f(i, b));
            visit(B.e(i, b));
        }
        if (B.eps(0, b) >= level) visit(B.f(0, b));
        if (const Int up = B.e(0, b); up >= 0 && B.eps(0, up) >= level) visit(up);
    }
    std::sort(out.ids.begin(), out.ids.end());
    for (Int id : out.ids)
        if (B.classical_highest(id)) out.highest_weights.push_back(B.weight(id));
    std::sort(out.highest_weights.begin(), out.highest_weights.end());
    return out;
}

/// Classical decomposition of the level-`level` Demazure crystal of weight lambda.
inline std::vector<Weight> demazure_decomposition(int n, Int level, const Weight& lambda) {
    detail::check_rank(n, lambda.rank());
    detail::require(lambda.dominant(), ErrorKind::invalid_argument, "weight must be dominant");
    for (auto c : lambda.coords)
        detail::require(c <= level, ErrorKind::level_exceeded, [&] { return "coordinate " + std::to_string(c) + " exceeds level"; });
    return demazure_component(tensor_of_weight(lambda), level).highest_weights;
}

/// Edges of the Demazure subgraph as "src i dst" lines.
inline void write_edges(std::ostream& os, const TensorCrystal& B, const DemazureComponent& comp, Int level) {
    for (Int b : comp.ids) {
        for (int i = 1; i <= B.rank(); ++i)
            if (const Int t = B.f(i, b); t >= 0) os << b << ' ' << i << ' ' << t << '\n';
        if (B.eps(0, b) >= level)
            if (const Int t = B.f(0, b); t >= 0) os << b << ' ' << 0 << ' ' << t << '\n';
    }
}

/// Size of the Demazure crystal of weight mu; coordinates above the level are
/// peeled off as tensor factors V(level * varpi_j).
inline Int demazure_crystal_size(Int level, const Weight& mu) {
    const int n = mu.rank();
    Weight low = mu;
    Int factor = 1;
    for (int j = 1; j <= n; ++j)
        while (low[j] > level) {
            low[j] -= level;
            factor *= irr_dim(level * fundamental(n, j));
        }
    Int total = 0;
    for (auto& nu : demazure_decomposition(n, level, low)) total += irr_dim(nu);
    return total * factor;
}

struct CrystalBound {
    Int lhs = 0;  // |B^{i,1}| * |Demazure crystal of lambda|
    Int rhs = 0;  // sum over the Pieri set of Demazure crystal sizes
    bool inequality() const { return lhs >= rhs; }
    bool equality() const { return lhs == rhs; }
};

inline CrystalBound pieri_crystal_bound(int n, Int level, const Weight& lambda, int i) {
    detail::check_rank(n, lambda.rank());
    CrystalBound out;
    out.lhs = Int(orbit_fundamental(n, i).size()) * demazure_crystal_size(level, lambda);
    for (auto& chi : pieri_set(LevelContext(lambda, level), i)) out.rhs += demazure_crystal_size(level, add_chi(lambda, chi));
    return out;
}

/// Tuple model: a[p-1][q-r] for 1 <= p <= r <= q <= n.
using KRTuple = std::vector<std::vector<Int>>;

namespace detail {

/// pi(p, q) = number of entries in row p at least p + q - r + 1, q = r..n.
/// Increasing in p, decreasing in q.
inline Int tableau_count(const KRElement& b, int p, int q) {
    Int c = 0;
    for (int x : b.rows[static_cast<std::size_t>(p - 1)])
        if (x >= p + q - b.r + 1) ++c;
    return c;
}

}  // namespace detail

/// Transfer of the row counts to the chain-sum model, with the q index
/// reversed so that admissible paths run from (1, r) to (r, n).
inline KRTuple kr_to_tuple(const KRElement& b) {
    const int r = b.r, n = b.n, w = n - r + 1;
    KRTuple a(static_cast<std::size_t>(r), std::vector<Int>(static_cast<std::size_t>(w), 0));
    for (int p = 1; p <= r; ++p)
        for (int q = r; q <= n; ++q) {
            Int below = 0;
            if (p > 1) below = std::max(below, detail::tableau_count(b, p - 1, q));
            if (q < n) below = std::max(below, detail::tableau_count(b, p, q + 1));
            a[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(n + r - q - r)] = detail::tableau_count(b, p, q) - below;
        }
    return a;
}

/// Path-sum rule: every monotone path from (1, r) to (r, n) sums to at most s.
inline bool tuple_valid(int n, int r, int s, const KRTuple& a) {
    if (static_cast<int>(a.size()) != r) return false;
    for (auto& row : a) {
        if (static_cast<int>(row.size()) != n - r + 1) return false;
        for (Int x : row)
            if (x < 0) return false;
    }
    // best[p][q]: maximal path sum ending at (p, q)
    std::vector<std::vector<Int>> best(static_cast<std::size_t>(r), std::vector<Int>(static_cast<std::size_t>(n - r + 1), 0));
    for (int p = 0; p < r; ++p)
        for (int q = 0; q <= n - r; ++q) {
            Int prev = 0;
            if (p > 0) prev = std::max(prev, best[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q)]);
            if (q > 0) prev = std::max(prev, best[static_cast<std::size_t>(p)][static_cast<std::size_t>(q - 1)]);
            best[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = prev + a[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        }
    return best.back().back() <= s;
}

inline std::optional<KRElement> tuple_to_kr(int n, int r, int s, const KRTuple& a) {
    if (!tuple_valid(n, r, s, a)) return std::nullopt;
    // rebuild pi in the original orientation, then the rows
    std::vector<std::vector<Int>> pi(static_cast<std::size_t>(r + 1), std::vector<Int>(static_cast<std::size_t>(n + 2), 0));
    for (int p = 1; p <= r; ++p)
        for (int q = n; q >= r; --q) {
            Int below = 0;
            if (p > 1) below = std::max(below, pi[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q)]);
            if (q < n) below = std::max(below, pi[static_cast<std::size_t>(p)][static_cast<std::size_t>(q + 1)]);
            pi[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = below + a[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(n - q)];
        }
    KRElement b{n, r, s, {}};
    for (int p = 1; p <= r; ++p) {
        std::vector<int> row;
        Int prev = s;  // entries >= p
        for (int q = r; q <= n + 1; ++q) {
            const Int next = q <= n ? pi[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] : 0;
            for (Int t = 0; t < prev - next; ++t) row.push_back(p + q - r);
            prev = next;
        }
        b.rows.push_back(std::move(row));
    }
    if (!semistandard(b)) return std::nullopt;
    return b;
}

/// Coordinates (u, v) of an sl3 KR element b_{u,v}: for B^{1,s} the numbers
/// of 2s and 3s, for B^{2,s} the numbers of columns (2,3) and (1,3).
inline std::pair<Int, Int> sl3_uv(const KRElement& b) {
    detail::require(b.n == 2, ErrorKind::rank_unsupported, "b_{u,v} coordinates are defined for sl3 only");
    Int u = 0, v = 0;
    if (b.r == 1) {
        for (int x : b.rows[0]) {
            u += x == 2;
            v += x == 3;
        }
    } else {
        for (int c = 0; c < b.s; ++c) {
            u += b.at(0, c) == 2 && b.at(1, c) == 3;
            v += b.at(0, c) == 1 && b.at(1, c) == 3;
        }
    }
    return {u, v};
}

}  // namespace demazure
