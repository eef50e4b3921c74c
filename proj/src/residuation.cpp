#include "resid/residuation.hpp"

#include "resid/error.hpp"

namespace resid {

namespace {

template <std::size_t N>
std::vector<Label> labels_of(const Poset& p, const std::array<Index, N>& tuple) {
    std::vector<Label> out;
    out.reserve(N);
    for (Index i : tuple) out.push_back(p.label(i));
    return out;
}

template <std::size_t N>
Check make_check(std::string_view name, const Poset& p, const std::optional<std::array<Index, N>>& failure) {
    Check c{std::string(name), !failure.has_value(), {}};
    if (failure) c.witness = labels_of(p, *failure);
    return c;
}

Index require_bottom(const ResiduatedStructure& s) {
    auto bottom = s.poset.bounds().bottom;
    if (!bottom) throw Error(ErrorKind::no_bottom, "structure has no least element");
    return *bottom;
}

// Axiom predicates shared by verification and witness replay.
bool unit_greatest_at(const ResiduatedStructure& s, Index x) { return s.poset.leq(x, s.unit); }
bool commutative_at(const ResiduatedStructure& s, Index a, Index b) { return s.odot(a, b) == s.odot(b, a); }
bool associative_at(const ResiduatedStructure& s, Index a, Index b, Index c) {
    return s.odot(s.odot(a, b), c) == s.odot(a, s.odot(b, c));
}
bool unit_law_at(const ResiduatedStructure& s, Index x) {
    return s.odot(s.unit, x) == x && s.odot(x, s.unit) == x;
}
bool adjoint_at(const ResiduatedStructure& s, Index a, Index b, Index c) {
    return s.poset.leq(s.odot(a, b), c) == s.poset.leq(a, s.arrow(b, c));
}
bool integral_at(const ResiduatedStructure& s, Index x, Index y) {
    const Index v = s.odot(x, y);
    return s.poset.leq(v, x) && s.poset.leq(v, y);
}

}  // namespace

void validate_shape(const ResiduatedStructure& s) {
    const Index n = s.size();
    if (s.unit >= n) throw Error(ErrorKind::invariant_violation, "unit is not an element");
    if (s.odot.size() != n || s.arrow.size() != n) {
        throw Error(ErrorKind::invariant_violation, "operation tables do not match the carrier size");
    }
    for (Index v : s.odot.cells()) {
        if (v >= n) throw Error(ErrorKind::unknown_label, "odot table refers to a non-element");
    }
    for (Index v : s.arrow.cells()) {
        if (v >= n) throw Error(ErrorKind::unknown_label, "arrow table refers to a non-element");
    }
}

VerificationReport verify_residuated(const ResiduatedStructure& s, Execution exec) {
    validate_shape(s);
    const Index n = s.size();
    const Poset& p = s.poset;
    VerificationReport report;

    std::optional<std::array<Index, 1>> not_below_unit;
    for (Index x = 0; x < n && !not_below_unit; ++x) {
        if (!unit_greatest_at(s, x)) not_below_unit = std::array<Index, 1>{x};
    }
    report.add(make_check(check_names::unit_greatest, p, not_below_unit));

    report.add(make_check(check_names::commutativity, p,
                          kernels::first_failing_pair(exec, n, [&](Index a, Index b) { return commutative_at(s, a, b); })));

    report.add(make_check(check_names::associativity, p, kernels::first_failing_triple(exec, n, [&](Index a, Index b, Index c) {
                              return associative_at(s, a, b, c);
                          })));

    std::optional<std::array<Index, 1>> unit_failure;
    for (Index x = 0; x < n && !unit_failure; ++x) {
        if (!unit_law_at(s, x)) unit_failure = std::array<Index, 1>{x};
    }
    report.add(make_check(check_names::unit_law, p, unit_failure));

    report.add(make_check(check_names::adjointness, p, kernels::first_failing_triple(exec, n, [&](Index a, Index b, Index c) {
                              return adjoint_at(s, a, b, c);
                          })));
    return report;
}

std::vector<Index> derived_negation(const ResiduatedStructure& s) {
    validate_shape(s);
    const Index zero = require_bottom(s);
    std::vector<Index> neg(s.size());
    for (Index x = 0; x < s.size(); ++x) neg[x] = s.arrow(x, zero);
    return neg;
}

VerificationReport check_lemma1(const ResiduatedStructure& s) {
    const auto neg = derived_negation(s);
    const Poset& p = s.poset;
    const Index n = s.size();
    VerificationReport report;

    std::optional<std::array<Index, 1>> inflation;
    for (Index x = 0; x < n && !inflation; ++x) {
        if (!p.leq(x, neg[neg[x]])) inflation = std::array<Index, 1>{x};
    }
    report.add(make_check(check_names::below_double_negation, p, inflation));

    report.add(make_check(check_names::negation_antitone, p, kernels::serial::first_failing_pair(n, [&](Index a, Index b) {
                              return !p.leq(a, b) || p.leq(neg[b], neg[a]);
                          })));
    return report;
}

VerificationReport check_integrality(const ResiduatedStructure& s, Execution exec) {
    validate_shape(s);
    VerificationReport report;
    report.add(make_check(check_names::integrality, s.poset,
                          kernels::first_failing_pair(exec, s.size(), [&](Index x, Index y) { return integral_at(s, x, y); })));
    return report;
}

std::optional<Index> residual_of(const Poset& poset, const OpTable& odot, Index b, Index c) {
    const Index n = poset.size();
    for (Index g = 0; g < n; ++g) {
        if (!poset.leq(odot(g, b), c)) continue;
        bool greatest = true;
        for (Index a = 0; a < n && greatest; ++a) {
            if (poset.leq(odot(a, b), c) && !poset.leq(a, g)) greatest = false;
        }
        if (greatest) return g;
    }
    return std::nullopt;
}

bool holds_at(const ResiduatedStructure& s, std::string_view name, std::span<const Index> w) {
    auto need = [&](std::size_t k) {
        if (w.size() != k) throw Error(ErrorKind::invariant_violation, "witness has the wrong arity for " + std::string(name));
    };
    if (name == check_names::unit_greatest) { need(1); return unit_greatest_at(s, w[0]); }
    if (name == check_names::commutativity) { need(2); return commutative_at(s, w[0], w[1]); }
    if (name == check_names::associativity) { need(3); return associative_at(s, w[0], w[1], w[2]); }
    if (name == check_names::unit_law) { need(1); return unit_law_at(s, w[0]); }
    if (name == check_names::adjointness) { need(3); return adjoint_at(s, w[0], w[1], w[2]); }
    if (name == check_names::integrality) { need(2); return integral_at(s, w[0], w[1]); }
    if (name == check_names::below_double_negation) {
        need(1);
        const auto neg = derived_negation(s);
        return s.poset.leq(w[0], neg[neg[w[0]]]);
    }
    if (name == check_names::negation_antitone) {
        need(2);
        const auto neg = derived_negation(s);
        return !s.poset.leq(w[0], w[1]) || s.poset.leq(neg[w[1]], neg[w[0]]);
    }
    throw Error(ErrorKind::invariant_violation, "unknown check '" + std::string(name) + "'");
}

}  // namespace resid
