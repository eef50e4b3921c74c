#include "resid/fixtures.hpp"

#include "resid/error.hpp"

namespace resid::fixtures {

namespace {

InvolutedPoset with_involution(Poset p, const std::map<Label, Label>& pairs) {
    Involution inv = involution_from_labels(p, pairs);
    return InvolutedPoset(std::move(p), std::move(inv));
}

BooleanAlgebra require_boolean(const Poset& p) {
    auto b = recognize_boolean(p);
    if (!b) throw Error(ErrorKind::invariant_violation, "fixture is not a Boolean algebra");
    return std::move(*b);
}

}  // namespace

Poset n5() {
    const std::vector<LabelPair> covers{{"0", "a"}, {"0", "c"}, {"a", "b"}, {"b", "1"}, {"c", "1"}};
    return Poset::from_covers({"0", "a", "b", "c", "1"}, covers);
}

InvolutedPoset n5_involuted() {
    return with_involution(n5(), {{"0", "1"}, {"a", "b"}, {"b", "a"}, {"c", "c"}, {"1", "0"}});
}

InvolutedPoset kleene_six() {
    const std::vector<LabelPair> covers{{"0", "a"}, {"a", "b"}, {"a", "b'"}, {"b", "a'"}, {"b'", "a'"}, {"a'", "1"}};
    Poset p = Poset::from_covers({"0", "a", "b", "b'", "a'", "1"}, covers);
    return with_involution(std::move(p),
                           {{"0", "1"}, {"a", "a'"}, {"b", "b'"}, {"b'", "b"}, {"a'", "a"}, {"1", "0"}});
}

InvolutedPoset pseudo_kleene_nine() {
    const std::vector<LabelPair> covers{{"0", "a"},  {"0", "c"},  {"a", "b"},  {"b", "d"},  {"c", "d"},
                                        {"d", "b'"}, {"d", "c'"}, {"b'", "a'"}, {"a'", "1"}, {"c'", "1"}};
    Poset p = Poset::from_covers({"0", "a", "c", "b", "d", "b'", "c'", "a'", "1"}, covers);
    return with_involution(std::move(p), {{"0", "1"},
                                          {"a", "a'"},
                                          {"b", "b'"},
                                          {"c", "c'"},
                                          {"d", "d"},
                                          {"a'", "a"},
                                          {"b'", "b"},
                                          {"c'", "c"},
                                          {"1", "0"}});
}

Poset cube() {
    // a' = b v c, b' = a v c, c' = a v b.
    const std::vector<LabelPair> covers{{"p", "a"},  {"p", "b"},  {"p", "c"},  {"a", "b'"}, {"a", "c'"}, {"b", "a'"},
                                        {"b", "c'"}, {"c", "a'"}, {"c", "b'"}, {"a'", "q"}, {"b'", "q"}, {"c'", "q"}};
    return Poset::from_covers({"p", "a", "b", "c", "a'", "b'", "c'", "q"}, covers);
}

BooleanAlgebra cube_algebra() { return require_boolean(cube()); }

Poset power_set(unsigned k) {
    const Index n = Index{1} << k;
    std::vector<Label> labels;
    for (Index s = 0; s < n; ++s) {
        std::string bits = "b";
        for (unsigned i = 0; i < k; ++i) bits += ((s >> i) & 1U) ? '1' : '0';
        labels.push_back(bits);
    }
    std::vector<std::uint8_t> leq(n * n);
    for (Index s = 0; s < n; ++s) {
        for (Index t = 0; t < n; ++t) leq[s * n + t] = (s & t) == s;
    }
    return Poset::from_matrix(std::move(labels), std::move(leq));
}

BooleanAlgebra power_set_algebra(unsigned k) { return require_boolean(power_set(k)); }

Poset chain(Index n, const std::string& prefix) {
    std::vector<Label> labels;
    std::vector<LabelPair> covers;
    for (Index i = 1; i <= n; ++i) {
        labels.push_back(prefix + std::to_string(i));
        if (i > 1) covers.emplace_back(labels[i - 2], labels[i - 1]);
    }
    return Poset::from_covers(std::move(labels), covers);
}

InvolutedPoset chain_involuted(Index n, const std::string& prefix) {
    std::vector<Index> images(n);
    for (Index i = 0; i < n; ++i) images[i] = n - 1 - i;
    return InvolutedPoset(chain(n, prefix), Involution(std::move(images)));
}

Poset antichain(Index k) {
    std::vector<Label> labels;
    for (Index i = 1; i <= k; ++i) labels.push_back("u" + std::to_string(i));
    return Poset::from_covers(std::move(labels), {});
}

}  // namespace resid::fixtures
