#include "resid/constructions.hpp"

namespace resid {

namespace {

class IsomorphismSearch {
public:
    IsomorphismSearch(const ResiduatedStructure& a, const ResiduatedStructure& b)
        : a_(a), b_(b), n_(a.size()), image_(n_, unset()), used_(n_, false) {}

    bool fix(Index x, Index y) {
        if (x >= n_ || y >= n_) return false;
        if (image_[x] != unset()) return image_[x] == y;
        if (used_[y]) return false;
        if (!compatible(x, y)) return false;
        image_[x] = y;
        used_[y] = true;
        return true;
    }

    std::optional<std::vector<Index>> run() {
        if (extend(0)) return image_;
        return std::nullopt;
    }

private:
    Index unset() const { return n_; }

    bool compatible(Index x, Index y) const {
        const Poset& pa = a_.poset;
        const Poset& pb = b_.poset;
        if (pa.down_set_size(x) != pb.down_set_size(y) || pa.up_set_size(x) != pb.up_set_size(y)) return false;
        if ((x == a_.unit) != (y == b_.unit)) return false;
        for (Index u = 0; u < n_; ++u) {
            const Index v = image_[u];
            if (v == unset()) continue;
            if (pa.leq(u, x) != pb.leq(v, y) || pa.leq(x, u) != pb.leq(y, v)) return false;
        }
        return true;
    }

    // Table entries whose operands and result are all mapped must agree.
    bool tables_consistent(Index x) const {
        auto agrees = [&](const OpTable& ta, const OpTable& tb, Index u, Index w) {
            const Index r = ta(u, w);
            return image_[r] == unset() || image_[r] == tb(image_[u], image_[w]);
        };
        for (Index u = 0; u < n_; ++u) {
            if (image_[u] == unset()) continue;
            if (!agrees(a_.odot, b_.odot, x, u) || !agrees(a_.odot, b_.odot, u, x)) return false;
            if (!agrees(a_.arrow, b_.arrow, x, u) || !agrees(a_.arrow, b_.arrow, u, x)) return false;
        }
        return true;
    }

    bool extend(Index from) {
        Index x = from;
        while (x < n_ && image_[x] != unset()) ++x;
        if (x == n_) return complete_check();
        for (Index y = 0; y < n_; ++y) {
            if (used_[y] || !compatible(x, y)) continue;
            image_[x] = y;
            used_[y] = true;
            if (tables_consistent(x) && extend(x + 1)) return true;
            image_[x] = unset();
            used_[y] = false;
        }
        return false;
    }

    bool complete_check() const {
        for (Index u = 0; u < n_; ++u) {
            for (Index w = 0; w < n_; ++w) {
                if (image_[a_.odot(u, w)] != b_.odot(image_[u], image_[w])) return false;
                if (image_[a_.arrow(u, w)] != b_.arrow(image_[u], image_[w])) return false;
            }
        }
        return image_[a_.unit] == b_.unit;
    }

    const ResiduatedStructure& a_;
    const ResiduatedStructure& b_;
    Index n_;
    std::vector<Index> image_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Index>> find_structural_isomorphism(const ResiduatedStructure& a,
                                                              const ResiduatedStructure& b,
                                                              std::span<const IndexPair> fixed) {
    if (a.size() != b.size()) return std::nullopt;
    validate_shape(a);
    validate_shape(b);
    IsomorphismSearch search(a, b);
    for (const auto& [x, y] : fixed) {
        if (!search.fix(x, y)) return std::nullopt;
    }
    return search.run();
}

bool structurally_equal(const ExtensionResult& a, const ExtensionResult& b) {
    if (a.embedding.size() != b.embedding.size()) return false;
    std::vector<IndexPair> fixed;
    for (Index i = 0; i < a.embedding.size(); ++i) fixed.emplace_back(a.embedding[i], b.embedding[i]);
    return find_structural_isomorphism(a.structure, b.structure, fixed).has_value();
}

}  // namespace resid
