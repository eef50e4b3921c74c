#pragma once

#include <cstdint>
#include <vector>

#include "resid/involution.hpp"
#include "resid/kernels.hpp"
#include "resid/residuation.hpp"

namespace resid {

struct MinerStats {
    std::uint64_t nodes = 0;                  ///< table cells assigned (search tree nodes)
    std::uint64_t complete_tables = 0;        ///< leaves reached
    std::uint64_t pruned_integrality = 0;     ///< values outside the common down-set of both operands
    std::uint64_t pruned_negation = 0;        ///< x (.) y = 0 must match x <= y'
    std::uint64_t pruned_monotonicity = 0;
    std::uint64_t pruned_associativity = 0;
    std::uint64_t rejected_no_residual = 0;   ///< complete tables with some b -> c undefined
    std::uint64_t rejected_verification = 0;  ///< complete tables failing the final check

    MinerStats& operator+=(const MinerStats& o);
    friend bool operator==(const MinerStats&, const MinerStats&) = default;
};

struct MinerOptions {
    bool require_negation = true;
    std::size_t limit = 16;
    Execution exec = Execution::parallel;
};

struct MinerOutcome {
    bool satisfiable = false;
    /// In lexicographic order of the odot table, at most `limit` of them.
    std::vector<ResiduatedStructure> structures;
    MinerStats stats;
};

/// Largest carrier the naive oracle accepts.
inline constexpr Index naive_size_limit = 4;

/// Searches commutative odot tables with the top element as unit; arrow is
/// always derived as the residual. With require_negation the structure must
/// also satisfy arrow(x, 0) = involution(x).
///
/// Throws Unbounded (no top, or no bottom when negation is required) and LimitZero.
MinerOutcome find_residuations(const InvolutedPoset& ip, const MinerOptions& options = {});

/// Enumerates every commutative unit-respecting table without pruning.
/// Throws InvariantViolation for carriers larger than naive_size_limit.
MinerOutcome find_residuations_naive(const InvolutedPoset& ip, const MinerOptions& options = {});

/// The acceptance predicate applied to every complete candidate.
bool miner_accepts(const ResiduatedStructure& s, const Involution& involution, bool require_negation);

}  // namespace resid
