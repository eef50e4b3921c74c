#pragma once

// Exhaustive pair/triple scans used by every verification routine.
//
// Each scan returns the lexicographically first tuple (in element order) on
// which a predicate fails. The serial versions are the reference; the OpenMP
// versions partition the outermost index across threads and reduce by the
// minimal linear index, so both produce identical witnesses.

#include <array>
#include <cstdint>
#include <optional>

#include "resid/poset.hpp"

namespace resid {

enum class Execution { serial, parallel };

namespace kernels {

/// Below this carrier size the parallel scans fall back to one thread.
inline constexpr Index parallel_threshold = 24;

namespace serial {

template <class Holds>
std::optional<std::array<Index, 2>> first_failing_pair(Index n, Holds&& holds) {
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            if (!holds(a, b)) return std::array<Index, 2>{a, b};
        }
    }
    return std::nullopt;
}

template <class Holds>
std::optional<std::array<Index, 3>> first_failing_triple(Index n, Holds&& holds) {
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            for (Index c = 0; c < n; ++c) {
                if (!holds(a, b, c)) return std::array<Index, 3>{a, b, c};
            }
        }
    }
    return std::nullopt;
}

}  // namespace serial

namespace parallel {

template <class Holds>
std::optional<std::array<Index, 2>> first_failing_pair(Index n, Holds&& holds) {
    const std::uint64_t none = static_cast<std::uint64_t>(n) * n;
    std::uint64_t best = none;
    const std::int64_t rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic) reduction(min : best) if (n >= parallel_threshold)
    for (std::int64_t a = 0; a < rows; ++a) {
        const auto ua = static_cast<Index>(a);
        for (Index b = 0; b < n; ++b) {
            if (!holds(ua, b)) {
                const std::uint64_t linear = static_cast<std::uint64_t>(ua) * n + b;
                if (linear < best) best = linear;
                break;
            }
        }
    }
    if (best == none) return std::nullopt;
    return std::array<Index, 2>{static_cast<Index>(best / n), static_cast<Index>(best % n)};
}

template <class Holds>
std::optional<std::array<Index, 3>> first_failing_triple(Index n, Holds&& holds) {
    const std::uint64_t nn = static_cast<std::uint64_t>(n) * n;
    const std::uint64_t none = nn * n;
    std::uint64_t best = none;
    const std::int64_t rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic) reduction(min : best) if (n >= parallel_threshold)
    for (std::int64_t a = 0; a < rows; ++a) {
        const auto ua = static_cast<Index>(a);
        bool found = false;
        for (Index b = 0; b < n && !found; ++b) {
            for (Index c = 0; c < n; ++c) {
                if (!holds(ua, b, c)) {
                    const std::uint64_t linear = static_cast<std::uint64_t>(ua) * nn + static_cast<std::uint64_t>(b) * n + c;
                    if (linear < best) best = linear;
                    found = true;
                    break;
                }
            }
        }
    }
    if (best == none) return std::nullopt;
    return std::array<Index, 3>{static_cast<Index>(best / nn), static_cast<Index>((best / n) % n),
                                static_cast<Index>(best % n)};
}

}  // namespace parallel

template <class Holds>
std::optional<std::array<Index, 2>> first_failing_pair(Execution exec, Index n, Holds&& holds) {
    return exec == Execution::parallel ? parallel::first_failing_pair(n, holds)
                                       : serial::first_failing_pair(n, holds);
}

template <class Holds>
std::optional<std::array<Index, 3>> first_failing_triple(Execution exec, Index n, Holds&& holds) {
    return exec == Execution::parallel ? parallel::first_failing_triple(n, holds)
                                       : serial::first_failing_triple(n, holds);
}

}  // namespace kernels
}  // namespace resid
