#include "resid/miner.hpp"

#include <limits>

#include "resid/error.hpp"

namespace resid {

MinerStats& MinerStats::operator+=(const MinerStats& o) {
    nodes += o.nodes;
    complete_tables += o.complete_tables;
    pruned_integrality += o.pruned_integrality;
    pruned_negation += o.pruned_negation;
    pruned_monotonicity += o.pruned_monotonicity;
    pruned_associativity += o.pruned_associativity;
    rejected_no_residual += o.rejected_no_residual;
    rejected_verification += o.rejected_verification;
    return *this;
}

bool miner_accepts(const ResiduatedStructure& s, const Involution& involution, bool require_negation) {
    if (!verify_residuated(s, Execution::serial).overall()) return false;
    if (!require_negation) return true;
    return derived_negation(s) == involution.images();
}

namespace {

// Search-tree depth at which the parallel mode hands subtrees to workers.
constexpr std::size_t split_depth = 2;

struct SearchSpace {
    const Poset& poset;
    const Involution& involution;
    bool require_negation;
    Index top;
    Index bottom;  // meaningful only with require_negation
    /// Free cells: unordered pairs (i <= j) of non-top elements, row-major.
    std::vector<IndexPair> cells;
    OpTable initial;
};

Index unset_value(const SearchSpace& space) { return space.poset.size(); }

SearchSpace make_space(const InvolutedPoset& ip, const MinerOptions& options) {
    if (options.limit == 0) throw Error(ErrorKind::limit_zero, "limit must be positive");
    const Poset& p = ip.poset();
    const Bounds b = p.bounds();
    if (!b.top) throw Error(ErrorKind::unbounded, "the unit needs a greatest element");
    if (options.require_negation && !b.bottom) throw Error(ErrorKind::unbounded, "x -> 0 needs a least element");

    const Index n = p.size();
    SearchSpace space{p, ip.involution(), options.require_negation, *b.top, b.bottom.value_or(0), {}, OpTable(n, n)};
    for (Index x = 0; x < n; ++x) {
        space.initial.set(space.top, x, x);
        space.initial.set(x, space.top, x);
    }
    for (Index i = 0; i < n; ++i) {
        if (i == space.top) continue;
        for (Index j = i; j < n; ++j) {
            if (j != space.top) space.cells.emplace_back(i, j);
        }
    }
    return space;
}

std::optional<ResiduatedStructure> complete(const SearchSpace& space, const OpTable& odot, MinerStats& stats) {
    ++stats.complete_tables;
    const Index n = space.poset.size();
    OpTable arrow(n);
    for (Index b = 0; b < n; ++b) {
        for (Index c = 0; c < n; ++c) {
            auto r = residual_of(space.poset, odot, b, c);
            if (!r) {
                ++stats.rejected_no_residual;
                return std::nullopt;
            }
            arrow.set(b, c, *r);
        }
    }
    ResiduatedStructure s{space.poset, space.top, odot, std::move(arrow)};
    if (!miner_accepts(s, space.involution, space.require_negation)) {
        ++stats.rejected_verification;
        return std::nullopt;
    }
    return s;
}

class Walker {
public:
    Walker(const SearchSpace& space, OpTable table, std::size_t limit, std::size_t stop_depth)
        : space_(space), table_(std::move(table)), limit_(limit), stop_depth_(stop_depth) {}

    void run(std::size_t depth) { descend(depth); }

    MinerStats stats;
    std::vector<ResiduatedStructure> found;
    std::vector<OpTable> frontier;

private:
    bool saturated() const { return found.size() >= limit_; }

    bool monotone_with(Index i, Index j, Index v) const {
        const Poset& p = space_.poset;
        const Index unset = unset_value(space_);
        const Index n = p.size();
        // Vary the first operand against column j, then the second against row i.
        for (Index k = 0; k < n; ++k) {
            const Index w = table_(k, j);
            if (w == unset) continue;
            if (p.leq(k, i) && !p.leq(w, v)) return false;
            if (p.leq(i, k) && !p.leq(v, w)) return false;
        }
        for (Index k = 0; k < n; ++k) {
            const Index w = table_(i, k);
            if (w == unset) continue;
            if (p.leq(k, j) && !p.leq(w, v)) return false;
            if (p.leq(j, k) && !p.leq(v, w)) return false;
        }
        return true;
    }

    bool associative_so_far() const {
        const Index n = space_.poset.size();
        const Index unset = unset_value(space_);
        for (Index a = 0; a < n; ++a) {
            for (Index b = 0; b < n; ++b) {
                const Index ab = table_(a, b);
                if (ab == unset) continue;
                for (Index c = 0; c < n; ++c) {
                    const Index left = table_(ab, c);
                    if (left == unset) continue;
                    const Index bc = table_(b, c);
                    if (bc == unset) continue;
                    const Index right = table_(a, bc);
                    if (right != unset && left != right) return false;
                }
            }
        }
        return true;
    }

    void descend(std::size_t depth) {
        if (saturated()) return;
        if (depth == space_.cells.size()) {
            if (auto s = complete(space_, table_, stats)) found.push_back(std::move(*s));
            return;
        }
        if (depth == stop_depth_) {
            frontier.push_back(table_);
            return;
        }
        const Poset& p = space_.poset;
        const auto [i, j] = space_.cells[depth];
        const Index n = p.size();
        const bool must_vanish = space_.require_negation && p.leq(i, space_.involution(j));
        for (Index v = 0; v < n && !saturated(); ++v) {
            if (!p.leq(v, i) || !p.leq(v, j)) {
                ++stats.pruned_integrality;
                continue;
            }
            if (space_.require_negation && (v == space_.bottom) != must_vanish) {
                ++stats.pruned_negation;
                continue;
            }
            if (!monotone_with(i, j, v)) {
                ++stats.pruned_monotonicity;
                continue;
            }
            table_.set(i, j, v);
            table_.set(j, i, v);
            if (associative_so_far()) {
                ++stats.nodes;
                descend(depth + 1);
            } else {
                ++stats.pruned_associativity;
            }
            table_.set(i, j, unset_value(space_));
            table_.set(j, i, unset_value(space_));
        }
    }

    const SearchSpace& space_;
    OpTable table_;
    std::size_t limit_;
    std::size_t stop_depth_;
};

MinerOutcome finish(std::vector<ResiduatedStructure> found, MinerStats stats, std::size_t limit) {
    if (found.size() > limit) found.resize(limit);
    MinerOutcome out;
    out.satisfiable = !found.empty();
    out.structures = std::move(found);
    out.stats = stats;
    return out;
}

}  // namespace

MinerOutcome find_residuations(const InvolutedPoset& ip, const MinerOptions& options) {
    const SearchSpace space = make_space(ip, options);

    // Phase 1: expand the top of the tree serially down to the split depth.
    Walker head(space, space.initial, options.limit, split_depth);
    head.run(0);

    // Phase 2: explore each frontier subtree independently. Every subtree
    // carries its own limit so the work done does not depend on scheduling.
    const auto& frontier = head.frontier;
    std::vector<Walker> subtrees;
    subtrees.reserve(frontier.size());
    for (const auto& table : frontier) {
        subtrees.emplace_back(space, table, options.limit, std::numeric_limits<std::size_t>::max());
    }
    const std::int64_t count = static_cast<std::int64_t>(subtrees.size());
    if (options.exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t t = 0; t < count; ++t) subtrees[static_cast<std::size_t>(t)].run(split_depth);
    } else {
        for (std::int64_t t = 0; t < count; ++t) subtrees[static_cast<std::size_t>(t)].run(split_depth);
    }

    MinerStats stats = head.stats;
    std::vector<ResiduatedStructure> found = std::move(head.found);
    for (auto& w : subtrees) {
        stats += w.stats;
        for (auto& s : w.found) found.push_back(std::move(s));
    }
    return finish(std::move(found), stats, options.limit);
}

MinerOutcome find_residuations_naive(const InvolutedPoset& ip, const MinerOptions& options) {
    if (ip.size() > naive_size_limit) {
        throw Error(ErrorKind::invariant_violation,
                    "naive enumeration is limited to " + std::to_string(naive_size_limit) + " elements");
    }
    const SearchSpace space = make_space(ip, options);
    const Index n = ip.size();
    MinerStats stats;
    std::vector<ResiduatedStructure> found;
    std::vector<Index> digits(space.cells.size(), 0);
    OpTable table = space.initial;
    // Odometer with the last cell varying fastest, giving lexicographic order.
    auto advance = [&] {
        for (std::size_t d = digits.size(); d-- > 0;) {
            if (++digits[d] < n) return true;
            digits[d] = 0;
        }
        return false;
    };
    do {
        for (std::size_t d = 0; d < digits.size(); ++d) {
            const auto [i, j] = space.cells[d];
            table.set(i, j, digits[d]);
            table.set(j, i, digits[d]);
        }
        ++stats.nodes;
        if (auto s = complete(space, table, stats)) found.push_back(std::move(*s));
    } while (found.size() < options.limit && advance());
    return finish(std::move(found), stats, options.limit);
}

}  // namespace resid
