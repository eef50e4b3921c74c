#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace resid {

using Label = std::string;
using Index = std::size_t;
using LabelPair = std::pair<Label, Label>;
using IndexPair = std::pair<Index, Index>;

struct Bounds {
    std::optional<Index> bottom;
    std::optional<Index> top;
};

/// Finite partial order over a sequence of distinct labels.
///
/// The order is stored as a dense row-major |P|x|P| matrix. Element indices
/// follow the sequence the poset was built from, and every enumeration the
/// library performs (tables, witnesses, search order) follows that sequence.
/// Values are immutable once constructed.
class Poset {
public:
    Poset() = default;

    /// Reflexive-transitive closure of a cover (Hasse) relation.
    /// Throws DuplicateLabel, UnknownLabel, SelfCover or CycleDetected.
    static Poset from_covers(std::vector<Label> elements, std::span<const LabelPair> covers);

    /// Same as from_covers but accepts an arbitrary generating relation,
    /// including reflexive pairs (full-order input).
    static Poset from_order(std::vector<Label> elements, std::span<const LabelPair> pairs);

    /// Takes an already materialized relation; throws InvariantViolation when
    /// it is not a partial order.
    static Poset from_matrix(std::vector<Label> elements, std::vector<std::uint8_t> leq);

    Index size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }

    const std::vector<Label>& elements() const noexcept { return labels_; }
    const Label& label(Index i) const { return labels_.at(i); }

    /// Throws UnknownLabel.
    Index index_of(std::string_view label) const;
    std::optional<Index> find(std::string_view label) const;

    bool leq(Index x, Index y) const noexcept { return leq_[x * size() + y] != 0; }
    bool less(Index x, Index y) const noexcept { return x != y && leq(x, y); }
    bool comparable(Index x, Index y) const noexcept { return leq(x, y) || leq(y, x); }
    bool leq(std::string_view x, std::string_view y) const { return leq(index_of(x), index_of(y)); }

    std::optional<Index> meet(Index x, Index y) const;
    std::optional<Index> join(Index x, Index y) const;
    std::optional<Label> meet(std::string_view x, std::string_view y) const;
    std::optional<Label> join(std::string_view x, std::string_view y) const;

    bool is_lattice() const;
    bool is_chain() const;
    Bounds bounds() const;

    /// Same elements, reversed order.
    Poset dual() const;

    /// Transitive reduction, sorted by (lower, upper) index.
    std::vector<IndexPair> covers() const;

    /// Number of ordered pairs (x, y) with x <= y, reflexive ones included.
    std::size_t comparable_pairs() const;

    std::size_t down_set_size(Index x) const;
    std::size_t up_set_size(Index x) const;

    const std::vector<std::uint8_t>& relation() const noexcept { return leq_; }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.labels_ == b.labels_ && a.leq_ == b.leq_;
    }

private:
    Poset(std::vector<Label> labels, std::map<Label, Index, std::less<>> index,
          std::vector<std::uint8_t> leq)
        : labels_(std::move(labels)), index_(std::move(index)), leq_(std::move(leq)) {}

    static std::map<Label, Index, std::less<>> build_index(const std::vector<Label>& labels);
    static Poset close_relation(std::vector<Label> elements, std::span<const LabelPair> pairs,
                                bool allow_reflexive);

    std::vector<Label> labels_;
    std::map<Label, Index, std::less<>> index_;
    std::vector<std::uint8_t> leq_;
};

/// Meet and join tables of a lattice, materialized once.
class Lattice {
public:
    /// Throws NotALattice.
    explicit Lattice(const Poset& poset);

    const Poset& poset() const noexcept { return poset_; }
    Index size() const noexcept { return poset_.size(); }
    Index meet(Index x, Index y) const noexcept { return meet_[x * size() + y]; }
    Index join(Index x, Index y) const noexcept { return join_[x * size() + y]; }

private:
    Poset poset_;
    std::vector<Index> meet_;
    std::vector<Index> join_;
};

}  // namespace resid
