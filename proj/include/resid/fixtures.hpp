#pragma once

#include <string>

#include "resid/classify.hpp"
#include "resid/involution.hpp"
#include "resid/poset.hpp"

namespace resid::fixtures {

/// Pentagon 0 < a < b < 1, 0 < c < 1 with c incomparable to a and b.
Poset n5();
/// n5 with its only antitone involution 0<->1, a<->b, c fixed.
InvolutedPoset n5_involuted();

/// Six-element Kleene algebra 0 < a < b, b' < a' < 1 with a<->a', b<->b'.
InvolutedPoset kleene_six();

/// Nine-element pseudo-Kleene algebra that is not distributive; d is fixed.
InvolutedPoset pseudo_kleene_nine();

/// Eight-element Boolean algebra with atoms a, b, c, coatoms a', b', c'
/// (x' the complement of x), bottom p and top q.
Poset cube();
BooleanAlgebra cube_algebra();

/// Subsets of a k-element set; labels are bit strings ("b010"), bit i for element i.
Poset power_set(unsigned k);
BooleanAlgebra power_set_algebra(unsigned k);

/// c1 < ... < cn labelled prefix + i.
Poset chain(Index n, const std::string& prefix = "c");
InvolutedPoset chain_involuted(Index n, const std::string& prefix = "c");

/// k pairwise incomparable elements u1..uk.
Poset antichain(Index k);

}  // namespace resid::fixtures
