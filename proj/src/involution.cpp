#include "resid/involution.hpp"

#include <cassert>
#include <numeric>

#include "resid/error.hpp"

namespace resid {

Involution Involution::identity(Index n) {
    std::vector<Index> images(n);
    std::iota(images.begin(), images.end(), Index{0});
    return Involution(std::move(images));
}

VerificationReport check_antitone_involution(const Poset& poset, std::span<const Index> mapping) {
    const Index n = poset.size();
    if (mapping.size() != n) {
        throw Error(ErrorKind::schema_violation, "involution must map every element exactly once");
    }
    for (Index x = 0; x < n; ++x) {
        if (mapping[x] >= n) throw Error(ErrorKind::unknown_label, "involution maps outside the carrier");
    }

    VerificationReport report;

    Check involutive{"involutive", true, {}};
    for (Index x = 0; x < n; ++x) {
        if (mapping[mapping[x]] != x) {
            involutive.passed = false;
            involutive.witness = {poset.label(x)};
            break;
        }
    }
    report.add(std::move(involutive));

    Check antitone{"antitone", true, {}};
    for (Index x = 0; x < n && antitone.passed; ++x) {
        for (Index k = n; k-- > 0;) {
            if (poset.leq(x, k) && !poset.leq(mapping[k], mapping[x])) {
                antitone.passed = false;
                antitone.witness = {poset.label(x), poset.label(k)};
                break;
            }
        }
    }
    report.add(std::move(antitone));
    return report;
}

Involution involution_from_labels(const Poset& poset, const std::map<Label, Label>& mapping) {
    const Index n = poset.size();
    std::vector<Index> images(n, n);
    for (const auto& [from, to] : mapping) {
        images[poset.index_of(from)] = poset.index_of(to);
    }
    for (Index x = 0; x < n; ++x) {
        if (images[x] == n) {
            throw Error(ErrorKind::schema_violation, "involution has no image for '" + poset.label(x) + "'");
        }
    }
    return Involution(std::move(images));
}

VerificationReport check_antitone_involution(const Poset& poset, const std::map<Label, Label>& mapping) {
    const Involution f = involution_from_labels(poset, mapping);
    return check_antitone_involution(poset, f.images());
}

namespace {

class InvolutionSearch {
public:
    explicit InvolutionSearch(const Poset& poset)
        : poset_(poset), n_(poset.size()), image_(poset.size(), unassigned()) {
        down_.reserve(n_);
        up_.reserve(n_);
        for (Index x = 0; x < n_; ++x) {
            down_.push_back(poset.down_set_size(x));
            up_.push_back(poset.up_set_size(x));
        }
    }

    std::vector<Involution> run() {
        extend(0);
        return std::move(found_);
    }

private:
    Index unassigned() const { return n_; }

    // An antitone involution maps the principal down-set of x bijectively
    // onto the principal up-set of x'.
    bool rank_compatible(Index x, Index y) const { return down_[x] == up_[y] && up_[x] == down_[y]; }

    bool consistent(Index x) const {
        const Index fx = image_[x];
        for (Index u = 0; u < n_; ++u) {
            const Index fu = image_[u];
            if (fu == unassigned()) continue;
            if (poset_.leq(u, x) && !poset_.leq(fx, fu)) return false;
            if (poset_.leq(x, u) && !poset_.leq(fu, fx)) return false;
        }
        return true;
    }

    void extend(Index from) {
        Index x = from;
        while (x < n_ && image_[x] != unassigned()) ++x;
        if (x == n_) {
            found_.emplace_back(image_);
            return;
        }
        for (Index y = x; y < n_; ++y) {
            if (image_[y] != unassigned() || !rank_compatible(x, y)) continue;
            image_[x] = y;
            image_[y] = x;
            if (consistent(x) && (y == x || consistent(y))) extend(x + 1);
            image_[x] = unassigned();
            image_[y] = unassigned();
        }
    }

    const Poset& poset_;
    Index n_;
    std::vector<Index> image_;
    std::vector<std::size_t> down_;
    std::vector<std::size_t> up_;
    std::vector<Involution> found_;
};

}  // namespace

std::vector<Involution> enumerate_antitone_involutions(const Poset& poset) {
    return InvolutionSearch(poset).run();
}

InvolutedPoset::InvolutedPoset(Poset poset, Involution involution)
    : poset_(std::move(poset)), involution_(std::move(involution)) {
    const auto report = check_antitone_involution(poset_, involution_.images());
    for (const auto& check : report.checks()) {
        if (check.passed) continue;
        std::string witness;
        for (const auto& l : check.witness) witness += (witness.empty() ? "" : ", ") + l;
        throw Error(ErrorKind::invalid_involution, "check '" + check.name + "' fails at (" + witness + ")");
    }
    const Bounds b = poset_.bounds();
    if (b.bottom && b.top) {
        // Forced by the two axioms.
        assert(involution_(*b.bottom) == *b.top);
    }
}

}  // namespace resid
