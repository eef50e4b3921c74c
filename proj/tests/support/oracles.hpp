#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the Poset accessors used to read their inputs.

#include <optional>
#include <vector>

#include "resid/poset.hpp"
#include "resid/residuation.hpp"

namespace resid::oracle {

/// Reflexive-transitive closure by depth-first reachability from every element.
std::vector<std::uint8_t> reachability(Index n, const std::vector<IndexPair>& edges);

/// Greatest lower bound by listing all lower bounds and testing each for maximality.
std::optional<Index> meet(const Poset& p, Index x, Index y);
std::optional<Index> join(const Poset& p, Index x, Index y);

/// Every permutation of the carrier, kept when it is an order-reversing involution.
std::vector<std::vector<Index>> antitone_involutions(const Poset& p);

/// Triple-by-triple check of every residuated-poset axiom.
bool is_residuated(const ResiduatedStructure& s);

}  // namespace resid::oracle
