#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "resid/error.hpp"
#include "resid/poset.hpp"

namespace resid::testing {

/// Kind of the resid::Error thrown by f, or nullopt if f returns normally.
template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline std::vector<Index> indices(const Poset& p, const std::vector<Label>& labels) {
    std::vector<Index> out;
    for (const auto& l : labels) out.push_back(p.index_of(l));
    return out;
}

/// Fixed-seed generator so property runs are reproducible.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed'0000'0000ULL + salt); }

}  // namespace resid::testing
