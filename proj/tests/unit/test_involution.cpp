#include <doctest.h>

#include <algorithm>

#include "../support/corpus.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"
#include "resid/fixtures.hpp"
#include "resid/involution.hpp"

using namespace resid;
using resid::testing::error_kind;

TEST_CASE("N5 swap involution is antitone") {
    const Poset p = fixtures::n5();
    const std::map<Label, Label> m{{"0", "1"}, {"a", "b"}, {"b", "a"}, {"c", "c"}, {"1", "0"}};
    CHECK(check_antitone_involution(p, m).overall());
}

TEST_CASE("identity on N5 fails antitonicity at (0, 1)") {
    const Poset p = fixtures::n5();
    const auto report = check_antitone_involution(p, Involution::identity(5).images());
    CHECK(report.passed("involutive"));
    const Check* antitone = report.find("antitone");
    REQUIRE(antitone != nullptr);
    CHECK_FALSE(antitone->passed);
    CHECK(antitone->witness == std::vector<Label>{"0", "1"});
    CHECK(error_kind([&] { InvolutedPoset(p, Involution::identity(5)); }) == ErrorKind::invalid_involution);
}

TEST_CASE("non-involutive map reports its first element") {
    const Poset p = fixtures::chain(3);
    const std::vector<Index> rotate{1, 2, 0};
    const auto report = check_antitone_involution(p, rotate);
    const Check* c = report.find("involutive");
    REQUIRE(c != nullptr);
    CHECK(c->witness == std::vector<Label>{"c1"});
}

TEST_CASE("label maps must be total and use known labels") {
    const Poset p = fixtures::chain(2);
    CHECK(error_kind([&] { involution_from_labels(p, {{"c1", "c2"}}); }) == ErrorKind::schema_violation);
    CHECK(error_kind([&] { involution_from_labels(p, {{"c1", "c2"}, {"c2", "zz"}}); }) == ErrorKind::unknown_label);
    CHECK(involution_from_labels(p, {{"c1", "c2"}, {"c2", "c1"}}).images() == std::vector<Index>{1, 0});
}

TEST_CASE("enumeration on named posets") {
    CHECK(enumerate_antitone_involutions(fixtures::n5()).size() == 1);
    CHECK(enumerate_antitone_involutions(fixtures::n5())[0] == fixtures::n5_involuted().involution());
    CHECK(enumerate_antitone_involutions(fixtures::chain(3)).size() == 1);
    CHECK(enumerate_antitone_involutions(fixtures::antichain(3)).size() == 4);

    // Four-element Boolean algebra: either fix both atoms or swap them.
    const auto square = enumerate_antitone_involutions(fixtures::power_set(2));
    REQUIRE(square.size() == 2);
    CHECK(square[0].images() == std::vector<Index>{3, 1, 2, 0});
    CHECK(square[1].images() == std::vector<Index>{3, 2, 1, 0});

    // The cube's automorphisms composed with complement: one per permutation of the atoms
    // that is an involution (identity plus three transpositions).
    CHECK(enumerate_antitone_involutions(fixtures::cube()).size() == 4);
}

TEST_CASE("chains carry exactly one antitone involution") {
    for (Index n = 1; n <= 12; ++n) {
        const auto all = enumerate_antitone_involutions(fixtures::chain(n));
        REQUIRE(all.size() == 1);
        for (Index i = 0; i < n; ++i) CHECK(all[0](i) == n - 1 - i);
    }
}

TEST_CASE("property: enumeration equals the permutation oracle") {
    for (Index n = 1; n <= 6; ++n) {
        for (const Poset& p : resid::testing::posets_of_size(n)) {
            const auto fast = enumerate_antitone_involutions(p);
            const auto slow = oracle::antitone_involutions(p);
            REQUIRE(fast.size() == slow.size());
            for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].images() == slow[i]);
            CHECK(std::is_sorted(fast.begin(), fast.end()));
        }
    }
}

TEST_CASE("property: enumerated involutions swap the bounds and pass the checker") {
    for (const InvolutedPoset& ip : resid::testing::involuted_posets_up_to(5)) {
        const Poset& p = ip.poset();
        CHECK(check_antitone_involution(p, ip.involution().images()).overall());
        const Bounds b = p.bounds();
        if (b.bottom) {
            REQUIRE(b.top.has_value());
            CHECK(ip.involution()(*b.bottom) == *b.top);
        }
        for (Index x = 0; x < p.size(); ++x) {
            CHECK(p.down_set_size(x) == p.up_set_size(ip.involution()(x)));
        }
    }
}

TEST_CASE("property: a poset with an antitone involution is self-dual") {
    for (const InvolutedPoset& ip : resid::testing::involuted_posets_up_to(5)) {
        const Poset& p = ip.poset();
        const Poset d = p.dual();
        for (Index x = 0; x < p.size(); ++x) {
            for (Index y = 0; y < p.size(); ++y) CHECK(p.leq(x, y) == d.leq(ip.involution()(x), ip.involution()(y)));
        }
    }
}
