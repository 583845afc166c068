#pragma once

// Type A_n weight and root lattice. Weights live in fundamental-weight
// coordinates only; epsilon coordinates appear transiently through EpsSet.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace demazure {

using Int = std::int64_t;

struct Weight {
    std::vector<Int> coords;  // coords[j-1] = lambda(h_j)

    Weight() = default;
    explicit Weight(std::vector<Int> c) : coords(std::move(c)) {}
    static Weight zero(int n) { return Weight(std::vector<Int>(static_cast<std::size_t>(n), 0)); }

    int rank() const { return static_cast<int>(coords.size()); }
    Int operator[](int j) const { return coords[static_cast<std::size_t>(j - 1)]; }  // 1-based
    Int& operator[](int j) { return coords[static_cast<std::size_t>(j - 1)]; }

    bool dominant() const {
        return std::all_of(coords.begin(), coords.end(), [](Int c) { return c >= 0; });
    }

    friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Positive root alpha_{i,j} = eps_i - eps_{j+1}, support [i, j].
struct RootPos {
    int i = 1;
    int j = 1;

    int height() const { return j - i + 1; }
    bool contains(int t) const { return i <= t && t <= j; }

    friend auto operator<=>(const RootPos&, const RootPos&) = default;
};

/// chi = eps_{k_1} + ... + eps_{k_i}, an element of the Weyl orbit of varpi_i.
struct EpsSet {
    int n = 1;
    std::vector<int> K;  // strictly increasing, within [1, n+1]

    bool contains(int k) const { return std::binary_search(K.begin(), K.end(), k); }
    int size() const { return static_cast<int>(K.size()); }

    friend auto operator<=>(const EpsSet&, const EpsSet&) = default;
};

/// Coefficients over the simple roots.
struct QPlusVector {
    std::vector<Int> coeffs;

    QPlusVector() = default;
    explicit QPlusVector(std::vector<Int> c) : coeffs(std::move(c)) {}

    int rank() const { return static_cast<int>(coeffs.size()); }
    Int operator[](int j) const { return coeffs[static_cast<std::size_t>(j - 1)]; }
    Int& operator[](int j) { return coeffs[static_cast<std::size_t>(j - 1)]; }
    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](Int c) { return c == 0; });
    }

    friend auto operator<=>(const QPlusVector&, const QPlusVector&) = default;
};

namespace detail {

inline void check_rank(int a, int b) {
    require(a == b, ErrorKind::rank_mismatch,
            "rank " + std::to_string(a) + " vs " + std::to_string(b));
}

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod(Int a, Int b) { return a - floor_div(a, b) * b; }

}  // namespace detail

inline Weight operator+(Weight a, const Weight& b) {
    detail::check_rank(a.rank(), b.rank());
    for (int j = 1; j <= a.rank(); ++j) a[j] += b[j];
    return a;
}

inline Weight operator-(Weight a, const Weight& b) {
    detail::check_rank(a.rank(), b.rank());
    for (int j = 1; j <= a.rank(); ++j) a[j] -= b[j];
    return a;
}

inline Weight operator*(Int k, Weight a) {
    for (auto& c : a.coords) c *= k;
    return a;
}

inline QPlusVector operator+(QPlusVector a, const QPlusVector& b) {
    detail::check_rank(a.rank(), b.rank());
    for (int j = 1; j <= a.rank(); ++j) a[j] += b[j];
    return a;
}

inline QPlusVector operator-(QPlusVector a, const QPlusVector& b) {
    detail::check_rank(a.rank(), b.rank());
    for (int j = 1; j <= a.rank(); ++j) a[j] -= b[j];
    return a;
}

inline Weight fundamental(int n, int i) {
    detail::require(1 <= i && i <= n, ErrorKind::out_of_range, [&] { return "fundamental index " + std::to_string(i); });
    Weight w = Weight::zero(n);
    w[i] = 1;
    return w;
}

inline RootPos make_root(int n, int i, int j) {
    detail::require(1 <= i && i <= j && j <= n, ErrorKind::out_of_range,
                    "root [" + std::to_string(i) + "," + std::to_string(j) + "]");
    return RootPos{i, j};
}

/// All positive roots, ordered by (i, j).
inline std::vector<RootPos> positive_roots(int n) {
    std::vector<RootPos> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.push_back({i, j});
    return out;
}

/// lambda(h_{i,j}) = sum of lambda_t over the support.
inline Int pair(const Weight& lambda, const RootPos& alpha) {
    detail::require(1 <= alpha.i && alpha.i <= alpha.j && alpha.j <= lambda.rank(), ErrorKind::rank_mismatch,
                    "root outside rank " + std::to_string(lambda.rank()));
    Int s = 0;
    for (int t = alpha.i; t <= alpha.j; ++t) s += lambda[t];
    return s;
}

/// Root in fundamental-weight coordinates (columns of the Cartan matrix summed).
inline Weight root_weight(int n, const RootPos& alpha) {
    Weight w = Weight::zero(n);
    for (int t = alpha.i; t <= alpha.j; ++t) {
        w[t] += 2;
        if (t > 1) w[t - 1] -= 1;
        if (t < n) w[t + 1] -= 1;
    }
    return w;
}

/// sum_j b_j alpha_j in fundamental-weight coordinates.
inline Weight qplus_weight(const QPlusVector& b) {
    const int n = b.rank();
    Weight w = Weight::zero(n);
    for (int j = 1; j <= n; ++j) {
        w[j] += 2 * b[j];
        if (j > 1) w[j - 1] -= b[j];
        if (j < n) w[j + 1] -= b[j];
    }
    return w;
}

inline QPlusVector root_qplus(int n, const RootPos& alpha) {
    QPlusVector q(std::vector<Int>(static_cast<std::size_t>(n), 0));
    for (int t = alpha.i; t <= alpha.j; ++t) q[t] = 1;
    return q;
}

/// Class of a weight in P/Q, i.e. sum_j j*lambda_j mod (n+1).
inline Int q_class(const Weight& w) {
    Int s = 0;
    for (int j = 1; j <= w.rank(); ++j) s += j * w[j];
    return detail::mod(s, w.rank() + 1);
}

/// All i-subsets of {1..n+1} in lexicographic order.
inline std::vector<EpsSet> orbit_fundamental(int n, int i) {
    detail::require(n >= 1 && 1 <= i && i <= n, ErrorKind::out_of_range,
                    "orbit index " + std::to_string(i) + " for n=" + std::to_string(n));
    std::vector<EpsSet> out;
    std::vector<int> K(static_cast<std::size_t>(i));
    for (int t = 0; t < i; ++t) K[static_cast<std::size_t>(t)] = t + 1;
    while (true) {
        out.push_back({n, K});
        int t = i - 1;
        while (t >= 0 && K[static_cast<std::size_t>(t)] == n + 1 - (i - 1 - t)) --t;
        if (t < 0) break;
        ++K[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < i; ++u) K[static_cast<std::size_t>(u)] = K[static_cast<std::size_t>(u - 1)] + 1;
    }
    return out;
}

inline EpsSet highest_eps(int n, int i) {
    EpsSet chi{n, {}};
    for (int t = 1; t <= i; ++t) chi.K.push_back(t);
    return chi;
}

/// chi as a weight: (chi)(h_j) = [j in K] - [j+1 in K].
inline Weight eps_weight(const EpsSet& chi) {
    Weight w = Weight::zero(chi.n);
    for (int j = 1; j <= chi.n; ++j) w[j] = Int(chi.contains(j)) - Int(chi.contains(j + 1));
    return w;
}

inline Weight add_chi(const Weight& lambda, const EpsSet& chi) {
    detail::check_rank(lambda.rank(), chi.n);
    return lambda + eps_weight(chi);
}

/// b with nu - lambda = sum b_j alpha_j, if b is a non-negative integer vector.
inline std::optional<QPlusVector> try_qplus_coords(const Weight& nu, const Weight& lambda) {
    detail::check_rank(nu.rank(), lambda.rank());
    const int n = nu.rank();
    const Weight d = nu - lambda;
    QPlusVector b(std::vector<Int>(static_cast<std::size_t>(n), 0));
    // (A^{-1})_{jk} = min(j,k) (n+1-max(j,k)) / (n+1)
    for (int j = 1; j <= n; ++j) {
        Int num = 0;
        for (int k = 1; k <= n; ++k) num += Int(std::min(j, k)) * (n + 1 - std::max(j, k)) * d[k];
        if (num % (n + 1) != 0) return std::nullopt;
        b[j] = num / (n + 1);
        if (b[j] < 0) return std::nullopt;
    }
    return b;
}

inline QPlusVector qplus_coords(const Weight& nu, const Weight& lambda) {
    auto b = try_qplus_coords(nu, lambda);
    detail::require(b.has_value(), ErrorKind::not_in_qplus, "nu - lambda is not in Q+");
    return *b;
}

inline bool dominates(const Weight& nu, const Weight& lambda) { return try_qplus_coords(nu, lambda).has_value(); }

/// chi in W(varpi_i) with lambda + chi dominant.
inline std::vector<EpsSet> classical_pieri(const Weight& lambda, int i) {
    std::vector<EpsSet> out;
    for (auto& chi : orbit_fundamental(lambda.rank(), i))
        if (add_chi(lambda, chi).dominant()) out.push_back(chi);
    return out;
}

namespace detail {

inline std::string index_str(int n, int j) { return n == 1 ? std::string() : std::to_string(j); }

}  // namespace detail

/// "2ϖ1+ϖ3", "0", "-ϖ2". Rank one drops the index.
inline std::string to_string(const Weight& w) {
    std::string out;
    for (int j = 1; j <= w.rank(); ++j) {
        const Int c = w[j];
        if (c == 0) continue;
        if (c < 0) out += "-";
        else if (!out.empty()) out += "+";
        const Int a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a);
        out += "ϖ" + detail::index_str(w.rank(), j);
    }
    return out.empty() ? "0" : out;
}

inline std::string to_string(const RootPos& a) {
    if (a.i == a.j) return "α" + std::to_string(a.i);
    return "α" + std::to_string(a.i) + "," + std::to_string(a.j);
}

inline std::string to_string(const EpsSet& chi) {
    std::string out;
    for (int k : chi.K) out += (out.empty() ? "ε" : "+ε") + std::to_string(k);
    return out;
}

inline std::string to_string(const QPlusVector& q) {
    std::string out;
    for (int j = 1; j <= q.rank(); ++j) {
        if (q[j] == 0) continue;
        if (q[j] < 0) out += "-";
        else if (!out.empty()) out += "+";
        const Int a = q[j] < 0 ? -q[j] : q[j];
        if (a != 1) out += std::to_string(a);
        out += "α" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

inline std::string coords_string(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t t = 0; t < v.size(); ++t) out += (t ? "," : "") + std::to_string(v[t]);
    return out;
}

}  // namespace demazure
