#include "resid/constructions.hpp"

#include <algorithm>
#include <functional>

#include "resid/error.hpp"

namespace resid {

namespace {

// Builds a carrier as a vertical stack of levels. Each level is either a
// single chain element or a copy of some poset; elements on different levels
// compare by level, elements on one level by that level's poset.
class LayeredCarrier {
public:
    Index add_point(Label label) {
        labels_.push_back(std::move(label));
        level_.push_back(next_level_++);
        block_.push_back(nullptr);
        local_.push_back(0);
        return labels_.size() - 1;
    }

    Index add_block(const Poset& p, const std::function<Label(const Label&)>& rename) {
        const Index first = labels_.size();
        for (Index i = 0; i < p.size(); ++i) {
            labels_.push_back(rename(p.label(i)));
            level_.push_back(next_level_);
            block_.push_back(&p);
            local_.push_back(i);
        }
        ++next_level_;
        return first;
    }

    Index size() const noexcept { return labels_.size(); }

    Poset build() const {
        const Index n = labels_.size();
        std::vector<std::uint8_t> leq(n * n, 0);
        for (Index u = 0; u < n; ++u) {
            for (Index v = 0; v < n; ++v) {
                bool below = false;
                if (level_[u] < level_[v]) {
                    below = true;
                } else if (level_[u] == level_[v]) {
                    below = u == v || (block_[u] != nullptr && block_[u]->leq(local_[u], local_[v]));
                }
                leq[u * n + v] = below;
            }
        }
        return Poset::from_matrix(labels_, std::move(leq));
    }

private:
    std::vector<Label> labels_;
    std::vector<int> level_;
    std::vector<const Poset*> block_;
    std::vector<Index> local_;
    int next_level_ = 0;
};

std::string chain_label(const std::string& prefix, Index i) { return prefix + std::to_string(i); }

void certify(const ExtensionResult& r, Verify verify) {
    if (verify == Verify::no) return;
    const auto report = verify_residuated(r.structure);
    for (const auto& c : report.checks()) {
        if (!c.passed) {
            throw Error(ErrorKind::invariant_violation,
                        r.provenance.construction + " produced a structure failing '" + c.name + "'");
        }
    }
    if (derived_negation(r.structure) != r.involution.images()) {
        throw Error(ErrorKind::invariant_violation,
                    r.provenance.construction + " produced a derived negation differing from the involution");
    }
}

void require(bool ok, ErrorKind kind, const std::string& message) {
    if (!ok) throw Error(kind, message);
}

}  // namespace

std::string fresh_chain_prefix(std::span<const Label> existing) {
    std::size_t hashes = 0;
    for (const auto& l : existing) {
        std::size_t k = 0;
        while (k < l.size() && l[k] == '#') ++k;
        hashes = std::max(hashes, k);
    }
    return std::string(hashes + 1, '#') + "c";
}

// ---------------------------------------------------------------------------

ExtensionResult extend_by_four_chain(const InvolutedPoset& ip, ExtensionMode mode, Verify verify) {
    const Poset& p = ip.poset();
    const Involution& f = ip.involution();
    const Index m = p.size();
    const std::string prefix = fresh_chain_prefix(p.elements());

    LayeredCarrier carrier;
    std::array<Index, 5> c{};  // c[1..4]
    std::vector<Index> embedding(m);
    Poset carrier_poset;
    std::string mode_name;

    switch (mode) {
    case ExtensionMode::add_four: {
        mode_name = "addfour";
        c[1] = carrier.add_point(chain_label(prefix, 1));
        c[2] = carrier.add_point(chain_label(prefix, 2));
        const Index first = carrier.add_block(p, [](const Label& l) { return l; });
        c[3] = carrier.add_point(chain_label(prefix, 3));
        c[4] = carrier.add_point(chain_label(prefix, 4));
        for (Index x = 0; x < m; ++x) embedding[x] = first + x;
        carrier_poset = carrier.build();
        break;
    }
    case ExtensionMode::reuse_bounds: {
        mode_name = "reusebounds";
        const Bounds b = p.bounds();
        require(b.bottom && b.top, ErrorKind::mode_unsatisfiable, "reusebounds needs a bounded poset");
        c[1] = carrier.add_point(chain_label(prefix, 1));
        const Index first = carrier.add_block(p, [](const Label& l) { return l; });
        c[4] = carrier.add_point(chain_label(prefix, 4));
        c[2] = first + *b.bottom;
        c[3] = first + *b.top;
        for (Index x = 0; x < m; ++x) embedding[x] = first + x;
        carrier_poset = carrier.build();
        break;
    }
    case ExtensionMode::reuse_four: {
        mode_name = "reusefour";
        const Bounds b = p.bounds();
        require(m >= 4 && b.bottom && b.top, ErrorKind::mode_unsatisfiable,
                "reusefour needs a bounded poset with at least four elements");
        const Index a = *b.bottom;
        const Index d = *b.top;
        std::optional<Index> low;
        std::optional<Index> high;
        for (Index x = 0; x < m; ++x) {
            if (x == a || x == d) continue;
            bool is_low = true;
            bool is_high = true;
            for (Index y = 0; y < m; ++y) {
                if (y == a || y == d) continue;
                is_low = is_low && p.leq(x, y);
                is_high = is_high && p.leq(y, x);
            }
            if (is_low) low = x;
            if (is_high) high = x;
        }
        require(low && high && *low != *high, ErrorKind::mode_unsatisfiable,
                "reusefour needs elements a < b <= x <= c < d for all other x");
        require(f(a) == d && f(*low) == *high, ErrorKind::mode_unsatisfiable,
                "reusefour needs the involution to swap a with d and b with c");
        c = {0, a, *low, *high, d};
        for (Index x = 0; x < m; ++x) embedding[x] = x;
        carrier_poset = p;
        break;
    }
    }

    const Index n = carrier_poset.size();
    const Index zero = c[1];
    const Index one = c[4];

    std::vector<Index> inv(n, n);
    for (Index x = 0; x < m; ++x) inv[embedding[x]] = embedding[f(x)];
    for (Index i = 1; i <= 4; ++i) inv[c[i]] = c[5 - i];

    const Poset& q = carrier_poset;
    OpTable odot(n);
    OpTable arrow(n);
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            Index prod;
            if (x == zero || y == zero) prod = zero;
            else if (x == one) prod = y;
            else if (y == one) prod = x;
            else prod = q.leq(x, inv[y]) ? zero : c[2];
            odot.set(x, y, prod);

            Index res;
            if (x == zero || y == one) res = one;
            else if (y == zero) res = inv[x];
            else if (x == one) res = y;
            else res = q.leq(x, y) ? one : c[3];
            arrow.set(x, y, res);
        }
    }

    ExtensionResult r{ResiduatedStructure{std::move(carrier_poset), one, std::move(odot), std::move(arrow)},
                      Involution(std::move(inv)), std::move(embedding), Provenance{"thm1", {{"mode", mode_name}}}};
    certify(r, verify);
    return r;
}

// ---------------------------------------------------------------------------

ExtensionResult residuated_chain(Index n, Verify verify) {
    require(n >= 3, ErrorKind::n_too_small, "a residuated chain needs n >= 3");
    std::vector<Label> labels;
    for (Index i = 1; i <= n; ++i) labels.push_back(chain_label("#c", i));
    std::vector<std::uint8_t> leq(n * n);
    for (Index u = 0; u < n; ++u) {
        for (Index v = 0; v < n; ++v) leq[u * n + v] = u <= v;
    }

    // Index i (1-based) lives at i - 1.
    auto at = [](Index i) { return i - 1; };
    const Index zero = at(1);
    const Index one = at(n);
    OpTable odot(n);
    OpTable arrow(n);
    for (Index i = 1; i <= n; ++i) {
        for (Index j = 1; j <= n; ++j) {
            Index prod;
            if (i == 1 || j == 1) prod = zero;
            else if (i == n) prod = at(j);
            else if (j == n) prod = at(i);
            else prod = i + j <= n + 1 ? zero : at(2);
            odot.set(at(i), at(j), prod);

            Index res;
            if (i == 1 || j == n) res = one;
            else if (j == 1) res = at(n + 1 - i);
            else if (i == n) res = at(j);
            else res = i <= j ? one : at(n - 1);
            arrow.set(at(i), at(j), res);
        }
    }
    std::vector<Index> inv(n);
    for (Index i = 1; i <= n; ++i) inv[at(i)] = at(n + 1 - i);

    ExtensionResult r{ResiduatedStructure{Poset::from_matrix(std::move(labels), std::move(leq)), one, std::move(odot),
                                          std::move(arrow)},
                      Involution(std::move(inv)), {}, Provenance{"cor1", {{"n", std::to_string(n)}}}};
    certify(r, verify);
    return r;
}

// ---------------------------------------------------------------------------

ExtensionResult extend_by_split_chain(const InvolutedPoset& ip, Index n, Verify verify) {
    require(n > 1, ErrorKind::n_too_small, "the split chain needs n > 1");
    const Poset& p = ip.poset();
    const Involution& f = ip.involution();
    const Index m = p.size();
    const std::string prefix = fresh_chain_prefix(p.elements());
    const Index top_index = 2 * n;

    LayeredCarrier carrier;
    std::vector<Index> c(top_index + 1);
    for (Index i = 1; i <= n; ++i) c[i] = carrier.add_point(chain_label(prefix, i));
    const Index first = carrier.add_block(p, [](const Label& l) { return l; });
    for (Index i = n + 1; i <= top_index; ++i) c[i] = carrier.add_point(chain_label(prefix, i));
    Poset q = carrier.build();
    const Index size = q.size();

    // chain_pos[u] = i when u is c_i, 0 when u comes from P.
    std::vector<Index> chain_pos(size, 0);
    for (Index i = 1; i <= top_index; ++i) chain_pos[c[i]] = i;
    std::vector<Index> embedding(m);
    for (Index x = 0; x < m; ++x) embedding[x] = first + x;

    const Index zero = c[1];
    const Index one = c[top_index];
    std::vector<Index> inv(size);
    for (Index x = 0; x < m; ++x) inv[first + x] = first + f(x);
    for (Index i = 1; i <= top_index; ++i) inv[c[i]] = c[top_index + 1 - i];

    auto chain_odot = [&](Index i, Index j) { return i + j <= top_index + 1 ? zero : c[2]; };
    auto chain_arrow = [&](Index i, Index j) { return i <= j ? one : c[top_index - 1]; };

    OpTable odot(size);
    OpTable arrow(size);
    for (Index x = 0; x < size; ++x) {
        for (Index y = 0; y < size; ++y) {
            const Index i = chain_pos[x];
            const Index j = chain_pos[y];
            Index prod;
            Index res;
            if (x == zero || y == zero) prod = zero;
            else if (x == one) prod = y;
            else if (y == one) prod = x;
            else if (i == 0 && j == 0) prod = q.leq(x, inv[y]) ? zero : c[2];
            else if (i != 0 && j != 0) prod = chain_odot(i, j);
            else if (i != 0) prod = chain_odot(i, n + 1);
            else prod = chain_odot(j, n + 1);

            if (x == zero || y == one) res = one;
            else if (y == zero) res = inv[x];
            else if (x == one) res = y;
            else if (i == 0 && j == 0) res = q.leq(x, y) ? one : c[top_index - 1];
            else if (i != 0 && j != 0) res = chain_arrow(i, j);
            else if (i != 0) res = chain_arrow(i, n);
            else res = chain_arrow(n + 1, j);

            odot.set(x, y, prod);
            arrow.set(x, y, res);
        }
    }

    ExtensionResult r{ResiduatedStructure{std::move(q), one, std::move(odot), std::move(arrow)}, Involution(std::move(inv)),
                      std::move(embedding), Provenance{"thm2", {{"n", std::to_string(n)}}}};
    certify(r, verify);
    return r;
}

// ---------------------------------------------------------------------------

ExtensionResult extend_with_dual(const Poset& p, Index n, Index k, Verify verify) {
    require(n > 1, ErrorKind::n_too_small, "the dual stacking needs n > 1");
    const Index m = p.size();
    const Index top_index = 2 * n + k;
    const Poset pd = p.dual();
    std::vector<Label> pair_labels;
    for (const auto& l : p.elements()) {
        pair_labels.push_back("(" + l + ",1)");
        pair_labels.push_back("(" + l + ",2)");
    }
    const std::string prefix = fresh_chain_prefix(pair_labels);

    LayeredCarrier carrier;
    std::vector<Index> c(top_index + 1);
    for (Index i = 1; i <= n; ++i) c[i] = carrier.add_point(chain_label(prefix, i));
    const Index first1 = carrier.add_block(p, [](const Label& l) { return "(" + l + ",1)"; });
    for (Index i = n + 1; i <= n + k; ++i) c[i] = carrier.add_point(chain_label(prefix, i));
    const Index first2 = carrier.add_block(pd, [](const Label& l) { return "(" + l + ",2)"; });
    for (Index i = n + k + 1; i <= top_index; ++i) c[i] = carrier.add_point(chain_label(prefix, i));
    Poset q = carrier.build();
    const Index size = q.size();

    // For elements of P x {1,2}: side[u] in {1,2}, base[u] = x. side 0 marks chain elements.
    std::vector<Index> chain_pos(size, 0);
    std::vector<int> side(size, 0);
    std::vector<Index> base(size, 0);
    for (Index i = 1; i <= top_index; ++i) chain_pos[c[i]] = i;
    for (Index x = 0; x < m; ++x) {
        side[first1 + x] = 1;
        base[first1 + x] = x;
        side[first2 + x] = 2;
        base[first2 + x] = x;
    }

    const Index zero = c[1];
    const Index one = c[top_index];
    std::vector<Index> inv(size);
    for (Index x = 0; x < m; ++x) {
        inv[first1 + x] = first2 + x;
        inv[first2 + x] = first1 + x;
    }
    for (Index i = 1; i <= top_index; ++i) inv[c[i]] = c[top_index + 1 - i];

    auto chain_odot = [&](Index i, Index j) { return i + j <= top_index + 1 ? zero : c[2]; };
    auto chain_arrow = [&](Index i, Index j) { return i <= j ? one : c[top_index - 1]; };
    // Chain indices standing in for a pair element: just above / just below its block.
    auto above = [&](int s) { return s == 1 ? n + 1 : n + k + 1; };
    auto below = [&](int s) { return s == 1 ? n : n + k; };

    OpTable odot(size);
    OpTable arrow(size);
    for (Index u = 0; u < size; ++u) {
        for (Index v = 0; v < size; ++v) {
            const Index i = chain_pos[u];
            const Index j = chain_pos[v];
            Index prod;
            Index res;
            if (u == zero || v == zero) prod = zero;
            else if (u == one) prod = v;
            else if (v == one) prod = u;
            else if (i == 0 && j == 0) {
                const Index x = base[u];
                const Index y = base[v];
                const int si = side[u];
                const int sj = side[v];
                const bool is_zero = (si == 1 && sj == 1) || (si == 1 && sj == 2 && p.leq(x, y)) ||
                                     (si == 2 && sj == 1 && p.leq(y, x));
                prod = is_zero ? zero : c[2];
            } else if (i != 0 && j != 0) prod = chain_odot(i, j);
            else if (i != 0) prod = chain_odot(i, above(side[v]));
            else prod = chain_odot(j, above(side[u]));

            if (u == zero || v == one) res = one;
            else if (v == zero) res = inv[u];
            else if (u == one) res = v;
            else if (i == 0 && j == 0) {
                const Index x = base[u];
                const Index y = base[v];
                const int si = side[u];
                const int sj = side[v];
                const bool is_one = (si == 1 && sj == 1 && p.leq(x, y)) || (si == 1 && sj == 2) ||
                                    (si == 2 && sj == 2 && p.leq(y, x));
                res = is_one ? one : c[top_index - 1];
            } else if (i != 0 && j != 0) res = chain_arrow(i, j);
            else if (i != 0) res = chain_arrow(i, below(side[v]));
            else res = chain_arrow(above(side[u]), j);

            odot.set(u, v, prod);
            arrow.set(u, v, res);
        }
    }

    std::vector<Index> embedding(m);
    for (Index x = 0; x < m; ++x) embedding[x] = first1 + x;
    ExtensionResult r{ResiduatedStructure{std::move(q), one, std::move(odot), std::move(arrow)}, Involution(std::move(inv)),
                      std::move(embedding),
                      Provenance{"thm3", {{"n", std::to_string(n)}, {"k", std::to_string(k)}}}};
    certify(r, verify);
    return r;
}

// ---------------------------------------------------------------------------

ResiduatedStructure boolean_residuation(const BooleanAlgebra& b) {
    const Lattice& l = b.lattice();
    const Involution& neg = b.complement();
    const Index n = b.size();
    OpTable odot(n);
    OpTable arrow(n);
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            odot.set(x, y, l.meet(x, y));
            arrow.set(x, y, l.join(neg(x), y));
        }
    }
    return ResiduatedStructure{b.poset(), b.top(), std::move(odot), std::move(arrow)};
}

ExtensionResult extend_boolean(const BooleanAlgebra& b, Index n, Verify verify) {
    require(n >= 1, ErrorKind::n_too_small, "the Boolean extension needs n >= 1");
    const Poset& bp = b.poset();
    const Index m = bp.size();
    const Index top_index = 2 * n;
    const std::string prefix = fresh_chain_prefix(bp.elements());

    LayeredCarrier carrier;
    std::vector<Index> c(top_index + 1);
    for (Index i = 1; i <= n; ++i) c[i] = carrier.add_point(chain_label(prefix, i));
    const Index first = carrier.add_block(bp, [](const Label& l) { return l; });
    for (Index i = n + 1; i <= top_index; ++i) c[i] = carrier.add_point(chain_label(prefix, i));
    Poset q = carrier.build();
    const Lattice lq(q);
    const Index size = q.size();

    std::vector<Index> inv(size);
    for (Index x = 0; x < m; ++x) inv[first + x] = first + b.complement()(x);
    for (Index i = 1; i <= top_index; ++i) inv[c[i]] = c[top_index + 1 - i];

    const Index zero = c[1];
    const Index one = c[top_index];
    OpTable odot(size);
    OpTable arrow(size);
    for (Index x = 0; x < size; ++x) {
        for (Index y = 0; y < size; ++y) {
            odot.set(x, y, q.leq(x, inv[y]) ? zero : lq.meet(x, y));
            arrow.set(x, y, q.leq(x, y) ? one : lq.join(inv[x], y));
        }
    }

    std::vector<Index> embedding(m);
    for (Index x = 0; x < m; ++x) embedding[x] = first + x;
    ExtensionResult r{ResiduatedStructure{std::move(q), one, std::move(odot), std::move(arrow)}, Involution(std::move(inv)),
                      std::move(embedding), Provenance{"thm5", {{"n", std::to_string(n)}}}};
    certify(r, verify);
    return r;
}

}  // namespace resid
