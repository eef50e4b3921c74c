#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "resid/involution.hpp"
#include "resid/kernels.hpp"
#include "resid/poset.hpp"
#include "resid/report.hpp"

namespace resid {

/// Dense total binary operation on indices 0..n-1.
class OpTable {
public:
    OpTable() = default;
    explicit OpTable(Index n, Index fill = 0) : n_(n), cells_(n * n, fill) {}

    Index size() const noexcept { return n_; }
    Index operator()(Index a, Index b) const noexcept { return cells_[a * n_ + b]; }
    void set(Index a, Index b, Index v) noexcept { cells_[a * n_ + b] = v; }
    const std::vector<Index>& cells() const noexcept { return cells_; }

    friend bool operator==(const OpTable&, const OpTable&) = default;

private:
    Index n_ = 0;
    std::vector<Index> cells_;
};

/// Poset with a designated unit and total tables for the monoid product and
/// its residual. Nothing beyond table shape is enforced here; the axioms are
/// established by verify_residuated.
struct ResiduatedStructure {
    Poset poset;
    Index unit = 0;
    OpTable odot;
    OpTable arrow;

    Index size() const noexcept { return poset.size(); }

    friend bool operator==(const ResiduatedStructure&, const ResiduatedStructure&) = default;
};

namespace check_names {
inline constexpr std::string_view unit_greatest = "unit-greatest";
inline constexpr std::string_view commutativity = "commutativity";
inline constexpr std::string_view associativity = "associativity";
inline constexpr std::string_view unit_law = "unit-law";
inline constexpr std::string_view adjointness = "adjointness";
inline constexpr std::string_view below_double_negation = "below-double-negation";
inline constexpr std::string_view negation_antitone = "negation-antitone";
inline constexpr std::string_view integrality = "integrality";
}  // namespace check_names

/// Throws InvariantViolation when table dimensions or entries do not fit the carrier.
void validate_shape(const ResiduatedStructure& s);

/// unit-greatest, commutativity, associativity, unit-law, adjointness.
/// Witnesses are the first failing tuple in element order; the result does
/// not depend on exec.
VerificationReport verify_residuated(const ResiduatedStructure& s, Execution exec = Execution::parallel);

/// x -> arrow(x, 0). Throws NoBottom.
std::vector<Index> derived_negation(const ResiduatedStructure& s);

/// x <= x'' and a <= b implies b' <= a', for the derived negation. Throws NoBottom.
VerificationReport check_lemma1(const ResiduatedStructure& s);

/// odot(x, y) <= x and odot(x, y) <= y for every pair.
VerificationReport check_integrality(const ResiduatedStructure& s, Execution exec = Execution::parallel);

/// Greatest a with odot(a, b) <= c, if that set has a greatest element.
std::optional<Index> residual_of(const Poset& poset, const OpTable& odot, Index b, Index c);

/// Re-evaluates the named axiom on a witness tuple. Returns true if the
/// axiom holds there (i.e. the witness does not reproduce a failure).
bool holds_at(const ResiduatedStructure& s, std::string_view check_name, std::span<const Index> witness);

}  // namespace resid
