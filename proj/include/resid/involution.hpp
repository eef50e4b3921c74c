#pragma once

#include <map>
#include <span>
#include <vector>

#include "resid/poset.hpp"
#include "resid/report.hpp"

namespace resid {

/// A total self-map of a poset's carrier, stored by index. Whether it is an
/// antitone involution is a property checked against a particular poset.
class Involution {
public:
    Involution() = default;
    explicit Involution(std::vector<Index> images) : images_(std::move(images)) {}

    Index operator()(Index x) const { return images_.at(x); }
    Index size() const noexcept { return images_.size(); }
    const std::vector<Index>& images() const noexcept { return images_; }

    static Involution identity(Index n);

    friend bool operator==(const Involution&, const Involution&) = default;
    friend auto operator<=>(const Involution& a, const Involution& b) { return a.images_ <=> b.images_; }

private:
    std::vector<Index> images_;
};

/// Checks "involutive" (x'' = x) and "antitone" (x <= y implies y' <= x').
///
/// The involutive witness is the first x in element order. The antitone
/// witness is found by scanning x upwards and y downwards through the element
/// sequence, so the widest violated comparable pair is reported first.
VerificationReport check_antitone_involution(const Poset& poset, std::span<const Index> mapping);

/// Label-keyed overload; throws UnknownLabel if the map mentions or targets a
/// label outside the poset, and SchemaViolation when it is not total.
VerificationReport check_antitone_involution(const Poset& poset, const std::map<Label, Label>& mapping);

Involution involution_from_labels(const Poset& poset, const std::map<Label, Label>& mapping);

/// All antitone involutions of the poset, in lexicographic order of the image
/// sequence.
std::vector<Involution> enumerate_antitone_involutions(const Poset& poset);

/// A poset bundled with an antitone involution validated at construction.
class InvolutedPoset {
public:
    /// Throws InvalidInvolution when either axiom fails; the message names the witness.
    InvolutedPoset(Poset poset, Involution involution);

    const Poset& poset() const noexcept { return poset_; }
    const Involution& involution() const noexcept { return involution_; }
    Index size() const noexcept { return poset_.size(); }

private:
    Poset poset_;
    Involution involution_;
};

}  // namespace resid
