#include "resid/classify.hpp"

#include "resid/error.hpp"
#include "resid/kernels.hpp"

namespace resid {

namespace {

DistributivityResult distributivity(const Lattice& l) {
    auto failure = kernels::serial::first_failing_triple(l.size(), [&](Index x, Index y, Index z) {
        return l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z));
    });
    return {!failure.has_value(), failure};
}

std::vector<Label> labels_of(const Poset& p, std::initializer_list<Index> idx) {
    std::vector<Label> out;
    for (Index i : idx) out.push_back(p.label(i));
    return out;
}

}  // namespace

DistributivityResult is_distributive(const Poset& lattice) {
    return distributivity(Lattice(lattice));
}

KleeneClassification check_pseudo_kleene(const Poset& poset, const Involution& inv) {
    const Lattice l(poset);
    if (inv.size() != poset.size() || !check_antitone_involution(poset, inv.images()).overall()) {
        throw Error(ErrorKind::invalid_involution, "map is not an antitone involution of the lattice");
    }
    const Index n = poset.size();
    KleeneClassification out;

    Check bound{std::string(check_names::kleene_bound), true, {}};
    if (auto w = kernels::serial::first_failing_pair(n, [&](Index x, Index y) {
            return poset.leq(l.meet(x, inv(x)), l.join(y, inv(y)));
        })) {
        bound.passed = false;
        bound.witness = labels_of(poset, {(*w)[0], (*w)[1]});
    }
    out.report.add(std::move(bound));

    Check normality{std::string(check_names::kleene_normality), true, {}};
    if (auto w = kernels::serial::first_failing_pair(n, [&](Index x, Index y) {
            return l.meet(x, l.join(inv(x), y)) == l.join(l.meet(x, inv(x)), l.meet(x, y));
        })) {
        normality.passed = false;
        normality.witness = labels_of(poset, {(*w)[0], (*w)[1]});
    }
    out.report.add(std::move(normality));

    out.distributive = distributivity(l).distributive;
    out.pseudo_kleene = out.report.overall();
    out.kleene = out.pseudo_kleene && out.distributive;
    return out;
}

std::optional<BooleanAlgebra> recognize_boolean(const Poset& poset) {
    if (poset.empty() || !poset.is_lattice()) return std::nullopt;
    Lattice l(poset);
    const Bounds b = poset.bounds();
    if (!distributivity(l).distributive) return std::nullopt;
    const Index p = *b.bottom;
    const Index q = *b.top;
    const Index n = poset.size();
    std::vector<Index> complement(n, n);
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            if (l.meet(x, y) == p && l.join(x, y) == q) {
                complement[x] = y;
                break;
            }
        }
        if (complement[x] == n) return std::nullopt;
    }
    return BooleanAlgebra(std::move(l), p, q, Involution(std::move(complement)));
}

}  // namespace resid
