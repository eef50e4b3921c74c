#include <doctest.h>

#include <fstream>
#include <sstream>

#include "../support/corpus.hpp"
#include "../support/helpers.hpp"
#include "resid/constructions.hpp"
#include "resid/fixtures.hpp"
#include "resid/structure_file.hpp"

using namespace resid;
using resid::testing::error_kind;

namespace {

std::string read_file(const std::string& relative) {
    std::ifstream in(std::string(RESID_TEST_DATA) + "/" + relative, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string error_message(const std::string& text) {
    try {
        parse_structure(text);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

const char* n5_body = R"("elements": ["0", "a", "b", "c", "1"],
  "covers": [["0", "a"], ["0", "c"], ["a", "b"], ["b", "1"], ["c", "1"]])";

}  // namespace

TEST_CASE("fixture files parse to the richest kind") {
    const auto n5 = parse_structure(read_file("fixtures/n5.json"));
    CHECK(n5.kind() == StructureKind::involuted_poset);
    CHECK(n5.poset == fixtures::n5());
    CHECK(*n5.involution == fixtures::n5_involuted().involution());

    const auto plain = parse_structure(read_file("fixtures/n5_poset.json"));
    CHECK(plain.kind() == StructureKind::poset);
    CHECK(error_kind([&] { plain.involuted(); }) == ErrorKind::schema_violation);

    CHECK(parse_structure(read_file("fixtures/cube.json")).poset == fixtures::cube());
    const auto kleene = parse_structure(read_file("fixtures/kleene6.json"));
    CHECK(kleene.poset == fixtures::kleene_six().poset());
    const auto pseudo = parse_structure(read_file("fixtures/pseudo_kleene9.json"));
    CHECK(pseudo.poset == fixtures::pseudo_kleene_nine().poset());
    CHECK(*pseudo.involution == fixtures::pseudo_kleene_nine().involution());
}

TEST_CASE("identity involution on N5 cites the antitone witness") {
    const std::string doc = std::string("{") + n5_body +
                            R"(, "involution": {"0": "0", "a": "a", "b": "b", "c": "c", "1": "1"}})";
    CHECK(error_kind([&] { parse_structure(doc); }) == ErrorKind::invariant_violation);
    CHECK(error_message(doc) == "InvariantViolation: /involution: check 'antitone' fails at (0, 1)");
}

TEST_CASE("missing odot row names the label") {
    const std::string doc = std::string("{") + R"("elements": ["0", "1"], "covers": [["0", "1"]],
        "unit": "1",
        "odot": {"0": {"0": "0", "1": "0"}},
        "arrow": {"0": {"0": "1", "1": "1"}, "1": {"0": "0", "1": "1"}}})";
    CHECK(error_kind([&] { parse_structure(doc); }) == ErrorKind::schema_violation);
    CHECK(error_message(doc).find("/odot: missing row '1'") != std::string::npos);
}

TEST_CASE("schema and syntax errors") {
    CHECK(error_kind([] { parse_structure("{\"elements\": [\"a\",}"); }) == ErrorKind::malformed_document);
    CHECK(error_kind([] { parse_structure("[]"); }) == ErrorKind::schema_violation);
    CHECK(error_kind([] { parse_structure(R"({"elements": ["a"], "colour": 1})"); }) == ErrorKind::schema_violation);
    CHECK(error_message(R"({"elements": ["a", "a"]})").find("/elements/1") != std::string::npos);
    CHECK(error_message(R"({"elements": ["a"], "covers": [["a", "z"]]})").find("/covers/0/1") != std::string::npos);
    CHECK(error_message(R"({"elements": ["a"], "covers": [["a", "a"]]})").find("/covers/0") != std::string::npos);
    CHECK(error_kind([] { parse_structure(R"({"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})"); }) ==
          ErrorKind::invariant_violation);
    CHECK(error_kind([] { parse_structure(R"({"elements": ["a"], "unit": "a"})"); }) == ErrorKind::schema_violation);
    CHECK(error_kind([] { parse_structure(R"({"elements": [1]})"); }) == ErrorKind::schema_violation);
    CHECK(error_kind([] { parse_structure(R"({"elements": ["a"], "involution": {}})"); }) == ErrorKind::schema_violation);
    CHECK(error_kind([] { read_structure_file("/nonexistent/structure.json"); }) == ErrorKind::malformed_document);
}

TEST_CASE("full-order input accepts reflexive and transitive pairs") {
    const std::string doc = R"({"elements": ["x", "y", "z"], "covers": [["x", "x"], ["x", "y"], ["y", "z"], ["x", "z"]]})";
    CHECK(error_kind([&] { parse_structure(doc); }) == ErrorKind::schema_violation);
    const auto file = parse_structure(doc, OrderInput::full_order);
    CHECK(file.poset.is_chain());
    CHECK(file.poset.covers().size() == 2);
}

TEST_CASE("text tables match the golden files byte for byte") {
    const auto frame = extend_by_four_chain(fixtures::n5_involuted(), ExtensionMode::reuse_bounds).structure;
    CHECK(render_tables(frame, TableFormat::text) == read_file("golden/n5_frame_tables.txt"));
    CHECK(render_tables(residuated_chain(5).structure, TableFormat::text) == read_file("golden/chain5_tables.txt"));
    const auto cube_split = extend_boolean(fixtures::cube_algebra(), 2).structure;
    CHECK(render_tables(cube_split, TableFormat::text) == read_file("golden/cube_split2_tables.txt"));
}

TEST_CASE("csv tables") {
    const auto chain = residuated_chain(3).structure;
    const std::string expected =
        "⊙,#c1,#c2,#c3\r\n#c1,#c1,#c1,#c1\r\n#c2,#c1,#c1,#c2\r\n#c3,#c1,#c2,#c3\r\n"
        "\r\n"
        "→,#c1,#c2,#c3\r\n#c1,#c3,#c3,#c3\r\n#c2,#c2,#c3,#c3\r\n#c3,#c1,#c2,#c3\r\n";
    CHECK(render_tables(chain, TableFormat::csv) == expected);

    // Labels with commas or quotes are quoted.
    const InvolutedPoset odd(Poset::from_covers({"x,y"}, {}), Involution::identity(1));
    const auto r = extend_by_four_chain(odd, ExtensionMode::add_four).structure;
    const auto csv = render_tables(r, TableFormat::csv);
    CHECK(csv.find("\"x,y\"") != std::string::npos);
}

TEST_CASE("DOT export") {
    const std::string n5 = export_dot(fixtures::n5());
    CHECK(n5.rfind("digraph poset {", 0) == 0);
    CHECK(count(n5, ";\n") - count(n5, " -> ") - 1 == 5);
    CHECK(count(n5, " -> ") == 5);

    const auto frame = extend_by_four_chain(fixtures::n5_involuted(), ExtensionMode::reuse_bounds).structure.poset;
    const std::string seven = export_dot(frame);
    CHECK(count(seven, " -> ") == 7);
    CHECK(count(seven, ";\n") - count(seven, " -> ") - 1 == 7);

    const std::string one = export_dot(fixtures::antichain(1));
    CHECK(count(one, " -> ") == 0);
    CHECK(count(one, ";\n") - 1 == 1);

    const auto ip = fixtures::n5_involuted();
    const std::string annotated = export_dot(ip.poset(), &ip.involution());
    CHECK(count(annotated, "style=dashed") == 2);
    CHECK(annotated.find("\"c\" [xlabel=\"c'=c\"]") != std::string::npos);
    CHECK(export_dot(fixtures::n5()) == n5);
}

TEST_CASE("property: serialisation round-trips every corpus structure") {
    std::vector<StructureFile> files;
    for (const auto& [name, ip] : resid::testing::involuted_corpus()) {
        files.push_back(to_structure_file(extend_by_four_chain(ip, ExtensionMode::add_four)));
        StructureFile plain;
        plain.poset = ip.poset();
        plain.involution = ip.involution();
        files.push_back(plain);
    }
    for (const auto& [name, p] : resid::testing::plain_corpus()) files.push_back(to_structure_file(extend_with_dual(p, 2, 1)));
    for (const auto& b : resid::testing::boolean_corpus()) files.push_back(to_structure_file(extend_boolean(b, 2)));

    for (const auto& f : files) {
        const std::string text = to_json(f).dump(2);
        const StructureFile back = parse_structure(text);
        CHECK(back.poset == f.poset);
        CHECK(back.involution == f.involution);
        CHECK(back.residuated == f.residuated);
        CHECK(back.provenance == f.provenance);
        CHECK(to_json(back).dump(2) == text);
    }
}

TEST_CASE("provenance records construction parameters") {
    const auto file = to_structure_file(extend_with_dual(fixtures::chain(2), 3, 1));
    CHECK(file.provenance == Json::parse(R"({"construction": "thm3", "n": 3, "k": 1})"));
    const auto mode = to_structure_file(extend_by_four_chain(fixtures::n5_involuted(), ExtensionMode::reuse_bounds));
    CHECK(mode.provenance == Json::parse(R"({"construction": "thm1", "mode": "reusebounds"})"));
}
