#pragma once

// Extensions of involuted posets into residuated posets by adjoining finite
// chains. Each builder writes its operation tables case by case and, unless
// told otherwise, verifies the result before returning it.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resid/classify.hpp"
#include "resid/involution.hpp"
#include "resid/residuation.hpp"

namespace resid {

/// How the four-element frame 0 < c2 < P < c3 < 1 is placed around P.
enum class ExtensionMode {
    add_four,      ///< four fresh elements
    reuse_bounds,  ///< P's own bottom and top play c2 and c3
    reuse_four,    ///< P already has a < b <= x <= c < d; they play c1..c4
};

enum class Verify { yes, no };

struct Provenance {
    std::string construction;
    std::vector<std::pair<std::string, std::string>> parameters;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ExtensionResult {
    ResiduatedStructure structure;
    /// Antitone involution of the extended carrier; equals the derived negation.
    Involution involution;
    /// Original index -> extended index.
    std::vector<Index> embedding;
    Provenance provenance;
};

/// Extends P by the frame 0 = c1 < c2 < x < c3 < c4 = 1 with
///   x (.) y = 0 if x <= y', c2 otherwise
///   x -> y  = 1 if x <= y,  c3 otherwise
/// on the inner elements, plus the usual boundary rules for 0 and 1.
/// Throws ModeUnsatisfiable when the mode's precondition fails.
ExtensionResult extend_by_four_chain(const InvolutedPoset& ip, ExtensionMode mode, Verify verify = Verify::yes);

/// The n-chain c1 < ... < cn (n >= 3) with ci (.) cj = 0 iff i + j <= n + 1
/// (else c2) and ci -> cj = 1 iff i <= j (else c_{n-1}) on inner indices.
/// Throws NTooSmall.
ExtensionResult residuated_chain(Index n, Verify verify = Verify::yes);

/// Sandwiches P between c1 < ... < cn and c_{n+1} < ... < c_{2n}, n > 1.
/// Throws NTooSmall.
ExtensionResult extend_by_split_chain(const InvolutedPoset& ip, Index n, Verify verify = Verify::yes);

/// Stacks P (as (x,1)) and its dual (as (x,2)) inside a chain of 2n + k
/// elements: n below P, k between P and the dual, n above. n > 1.
/// Throws NTooSmall.
ExtensionResult extend_with_dual(const Poset& p, Index n, Index k, Verify verify = Verify::yes);

/// odot = meet, x -> y = x' v y, unit = top.
ResiduatedStructure boolean_residuation(const BooleanAlgebra& b);

/// Sandwiches a Boolean algebra between two n-chains and uses
///   x (.) y = 0 if x <= y', x ^ y otherwise
///   x -> y  = 1 if x <= y,  x' v y otherwise
/// uniformly on the whole carrier. n >= 1; throws NTooSmall.
ExtensionResult extend_boolean(const BooleanAlgebra& b, Index n, Verify verify = Verify::yes);

/// Label prefix for adjoined chain elements ("#c" unless the input already
/// uses labels beginning with '#', in which case more '#' are prepended).
std::string fresh_chain_prefix(std::span<const Label> existing);

/// Bijection a -> b that maps each fixed pair, transports the order, the unit
/// and both tables. Returns the image of every index of a.
std::optional<std::vector<Index>> find_structural_isomorphism(const ResiduatedStructure& a,
                                                              const ResiduatedStructure& b,
                                                              std::span<const IndexPair> fixed = {});

/// Structural equality of two extensions of the same input: the bijection
/// must send a.embedding[i] to b.embedding[i].
bool structurally_equal(const ExtensionResult& a, const ExtensionResult& b);

}  // namespace resid
