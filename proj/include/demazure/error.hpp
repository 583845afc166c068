#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>

namespace demazure {

enum class ErrorKind {
    rank_mismatch,
    out_of_range,
    invalid_argument,
    not_in_qplus,
    disjoint_support,
    difference_is_root,
    not_in_ri,
    antisymmetry_violation,
    not_a_partial_order,
    pairing_mismatch,
    no_dominant_found,
    rank_unsupported,
    negative_coefficient,
    nonzero_residual,
    level_exceeded,
    bound_too_large,
    oracle_unavailable,
    mismatch,
};

/// Stable machine-readable tag, e.g. "not-in-Qplus".
inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::rank_mismatch: return "rank-mismatch";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::not_in_qplus: return "not-in-Qplus";
    case ErrorKind::disjoint_support: return "disjoint-support";
    case ErrorKind::difference_is_root: return "difference-is-root";
    case ErrorKind::not_in_ri: return "not-in-Ri";
    case ErrorKind::antisymmetry_violation: return "antisymmetry-violation";
    case ErrorKind::not_a_partial_order: return "not-a-partial-order";
    case ErrorKind::pairing_mismatch: return "pairing-mismatch";
    case ErrorKind::no_dominant_found: return "no-dominant-found";
    case ErrorKind::rank_unsupported: return "rank-unsupported";
    case ErrorKind::negative_coefficient: return "negative-coefficient";
    case ErrorKind::nonzero_residual: return "nonzero-residual";
    case ErrorKind::level_exceeded: return "level-exceeded";
    case ErrorKind::bound_too_large: return "bound-too-large";
    case ErrorKind::oracle_unavailable: return "oracle-unavailable";
    case ErrorKind::mismatch: return "mismatch";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

namespace detail {

inline void require(bool condition, ErrorKind kind, const std::string& what) {
    if (!condition) {
        throw Error(kind, what);
    }
}

/// Variant for hot paths: the message is only built on failure.
template <class F>
    requires std::invocable<F>
void require(bool condition, ErrorKind kind, F&& what) {
    if (!condition) {
        throw Error(kind, std::string(what()));
    }
}

}  // namespace detail
}  // namespace demazure
