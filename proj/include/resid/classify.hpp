#pragma once

#include <array>
#include <optional>

#include "resid/involution.hpp"
#include "resid/poset.hpp"
#include "resid/report.hpp"

namespace resid {

struct DistributivityResult {
    bool distributive = true;
    /// First (x, y, z) in element order with x ^ (y v z) != (x ^ y) v (x ^ z).
    std::optional<std::array<Index, 3>> witness;
};

/// Throws NotALattice.
DistributivityResult is_distributive(const Poset& lattice);

namespace check_names {
inline constexpr std::string_view kleene_bound = "kleene-bound";          // x ^ x' <= y v y'
inline constexpr std::string_view kleene_normality = "kleene-normality";  // x ^ (x' v y) = (x ^ x') v (x ^ y)
}  // namespace check_names

struct KleeneClassification {
    VerificationReport report;
    bool distributive = false;
    bool pseudo_kleene = false;
    bool kleene = false;
};

/// Throws NotALattice, or InvalidInvolution when inv is not an antitone
/// involution of the lattice.
KleeneClassification check_pseudo_kleene(const Poset& lattice, const Involution& inv);

/// Bounded distributive lattice with its complement map.
class BooleanAlgebra {
public:
    const Poset& poset() const noexcept { return lattice_.poset(); }
    const Lattice& lattice() const noexcept { return lattice_; }
    Index bottom() const noexcept { return bottom_; }
    Index top() const noexcept { return top_; }
    const Involution& complement() const noexcept { return complement_; }
    Index size() const noexcept { return lattice_.size(); }

private:
    BooleanAlgebra(Lattice lattice, Index bottom, Index top, Involution complement)
        : lattice_(std::move(lattice)), bottom_(bottom), top_(top), complement_(std::move(complement)) {}

    friend std::optional<BooleanAlgebra> recognize_boolean(const Poset& poset);

    Lattice lattice_;
    Index bottom_;
    Index top_;
    Involution complement_;
};

/// Present iff the poset is a bounded distributive lattice in which every
/// element has a complement.
std::optional<BooleanAlgebra> recognize_boolean(const Poset& poset);

}  // namespace resid
