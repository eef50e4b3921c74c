#include "resid/poset.hpp"

#include "resid/error.hpp"

namespace resid {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::unknown_label: return "UnknownLabel";
    case ErrorKind::self_cover: return "SelfCover";
    case ErrorKind::cycle_detected: return "CycleDetected";
    case ErrorKind::duplicate_label: return "DuplicateLabel";
    case ErrorKind::no_bottom: return "NoBottom";
    case ErrorKind::mode_unsatisfiable: return "ModeUnsatisfiable";
    case ErrorKind::n_too_small: return "NTooSmall";
    case ErrorKind::not_a_lattice: return "NotALattice";
    case ErrorKind::invalid_involution: return "InvalidInvolution";
    case ErrorKind::unbounded: return "Unbounded";
    case ErrorKind::limit_zero: return "LimitZero";
    case ErrorKind::malformed_document: return "MalformedDocument";
    case ErrorKind::schema_violation: return "SchemaViolation";
    case ErrorKind::invariant_violation: return "InvariantViolation";
    }
    return "Error";
}

std::map<Label, Index, std::less<>> Poset::build_index(const std::vector<Label>& labels) {
    std::map<Label, Index, std::less<>> index;
    for (Index i = 0; i < labels.size(); ++i) {
        if (!index.emplace(labels[i], i).second) {
            throw Error(ErrorKind::duplicate_label, "label '" + labels[i] + "' appears twice");
        }
    }
    return index;
}

Poset Poset::close_relation(std::vector<Label> elements, std::span<const LabelPair> pairs,
                            bool allow_reflexive) {
    auto index = build_index(elements);
    const Index n = elements.size();
    std::vector<std::uint8_t> leq(n * n, 0);
    for (Index i = 0; i < n; ++i) leq[i * n + i] = 1;

    auto lookup = [&](const Label& l) {
        auto it = index.find(l);
        if (it == index.end()) throw Error(ErrorKind::unknown_label, "'" + l + "' is not an element");
        return it->second;
    };
    for (const auto& [lo, hi] : pairs) {
        const Index x = lookup(lo);
        const Index y = lookup(hi);
        if (x == y && !allow_reflexive) {
            throw Error(ErrorKind::self_cover, "cover (" + lo + ", " + hi + ") relates an element to itself");
        }
        leq[x * n + y] = 1;
    }

    // Warshall closure.
    for (Index k = 0; k < n; ++k) {
        for (Index i = 0; i < n; ++i) {
            if (!leq[i * n + k]) continue;
            const std::uint8_t* row_k = &leq[k * n];
            std::uint8_t* row_i = &leq[i * n];
            for (Index j = 0; j < n; ++j) row_i[j] |= row_k[j];
        }
    }

    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            if (leq[i * n + j] && leq[j * n + i]) {
                throw Error(ErrorKind::cycle_detected,
                            "'" + elements[i] + "' and '" + elements[j] + "' would be mutually below each other");
            }
        }
    }
    return Poset(std::move(elements), std::move(index), std::move(leq));
}

Poset Poset::from_covers(std::vector<Label> elements, std::span<const LabelPair> covers) {
    return close_relation(std::move(elements), covers, false);
}

Poset Poset::from_order(std::vector<Label> elements, std::span<const LabelPair> pairs) {
    return close_relation(std::move(elements), pairs, true);
}

Poset Poset::from_matrix(std::vector<Label> elements, std::vector<std::uint8_t> leq) {
    auto index = build_index(elements);
    const Index n = elements.size();
    if (leq.size() != n * n) {
        throw Error(ErrorKind::invariant_violation, "order matrix has the wrong size");
    }
    for (auto& v : leq) v = v ? 1 : 0;
    for (Index i = 0; i < n; ++i) {
        if (!leq[i * n + i]) {
            throw Error(ErrorKind::invariant_violation, "order is not reflexive at '" + elements[i] + "'");
        }
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (i != j && leq[i * n + j] && leq[j * n + i]) {
                throw Error(ErrorKind::invariant_violation,
                            "order is not antisymmetric at ('" + elements[i] + "', '" + elements[j] + "')");
            }
            if (!leq[i * n + j]) continue;
            for (Index k = 0; k < n; ++k) {
                if (leq[j * n + k] && !leq[i * n + k]) {
                    throw Error(ErrorKind::invariant_violation,
                                "order is not transitive at ('" + elements[i] + "', '" + elements[j] + "', '" +
                                    elements[k] + "')");
                }
            }
        }
    }
    return Poset(std::move(elements), std::move(index), std::move(leq));
}

Index Poset::index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw Error(ErrorKind::unknown_label, "'" + std::string(label) + "' is not an element");
}

std::optional<Index> Poset::find(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<Index> Poset::meet(Index x, Index y) const {
    const Index n = size();
    for (Index w = 0; w < n; ++w) {
        if (!leq(w, x) || !leq(w, y)) continue;
        bool greatest = true;
        for (Index v = 0; v < n && greatest; ++v) {
            if (leq(v, x) && leq(v, y) && !leq(v, w)) greatest = false;
        }
        if (greatest) return w;
    }
    return std::nullopt;
}

std::optional<Index> Poset::join(Index x, Index y) const {
    const Index n = size();
    for (Index w = 0; w < n; ++w) {
        if (!leq(x, w) || !leq(y, w)) continue;
        bool least = true;
        for (Index v = 0; v < n && least; ++v) {
            if (leq(x, v) && leq(y, v) && !leq(w, v)) least = false;
        }
        if (least) return w;
    }
    return std::nullopt;
}

std::optional<Label> Poset::meet(std::string_view x, std::string_view y) const {
    if (auto m = meet(index_of(x), index_of(y))) return labels_[*m];
    return std::nullopt;
}

std::optional<Label> Poset::join(std::string_view x, std::string_view y) const {
    if (auto j = join(index_of(x), index_of(y))) return labels_[*j];
    return std::nullopt;
}

bool Poset::is_lattice() const {
    const Index n = size();
    for (Index x = 0; x < n; ++x) {
        for (Index y = x + 1; y < n; ++y) {
            if (!meet(x, y) || !join(x, y)) return false;
        }
    }
    return true;
}

bool Poset::is_chain() const {
    const Index n = size();
    for (Index x = 0; x < n; ++x) {
        for (Index y = x + 1; y < n; ++y) {
            if (!comparable(x, y)) return false;
        }
    }
    return true;
}

Bounds Poset::bounds() const {
    const Index n = size();
    Bounds b;
    for (Index x = 0; x < n; ++x) {
        bool bottom = true;
        bool top = true;
        for (Index y = 0; y < n; ++y) {
            bottom = bottom && leq(x, y);
            top = top && leq(y, x);
        }
        if (bottom) b.bottom = x;
        if (top) b.top = x;
    }
    return b;
}

Poset Poset::dual() const {
    const Index n = size();
    std::vector<std::uint8_t> reversed(n * n);
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) reversed[x * n + y] = leq_[y * n + x];
    }
    return Poset(labels_, index_, std::move(reversed));
}

std::vector<IndexPair> Poset::covers() const {
    const Index n = size();
    std::vector<IndexPair> out;
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            if (!less(x, y)) continue;
            bool covered = true;
            for (Index z = 0; z < n && covered; ++z) {
                if (less(x, z) && less(z, y)) covered = false;
            }
            if (covered) out.emplace_back(x, y);
        }
    }
    return out;
}

std::size_t Poset::comparable_pairs() const {
    std::size_t count = 0;
    for (auto v : leq_) count += v;
    return count;
}

std::size_t Poset::down_set_size(Index x) const {
    std::size_t count = 0;
    for (Index y = 0; y < size(); ++y) count += leq(y, x);
    return count;
}

std::size_t Poset::up_set_size(Index x) const {
    std::size_t count = 0;
    for (Index y = 0; y < size(); ++y) count += leq(x, y);
    return count;
}

Lattice::Lattice(const Poset& poset) : poset_(poset) {
    const Index n = poset.size();
    meet_.resize(n * n);
    join_.resize(n * n);
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            auto m = poset.meet(x, y);
            auto j = poset.join(x, y);
            if (!m || !j) {
                throw Error(ErrorKind::not_a_lattice,
                            "'" + poset.label(x) + "' and '" + poset.label(y) + "' lack a " + (m ? "join" : "meet"));
            }
            meet_[x * n + y] = *m;
            join_[x * n + y] = *j;
        }
    }
}

}  // namespace resid
