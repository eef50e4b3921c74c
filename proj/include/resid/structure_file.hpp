#pragma once

// The shared JSON structure document:
//
//   {
//     "elements":   ["0", "a", ...],
//     "covers":     [["0", "a"], ...],
//     "involution": {"0": "1", ...},                  optional
//     "unit": "1", "odot": {...}, "arrow": {...},     optional, all or none
//     "provenance": {...}                             optional, written by `extend`
//   }
//
// Operation tables are objects of objects: odot[x][y] is the label of x (.) y.
// Unknown top-level fields are rejected.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "resid/constructions.hpp"
#include "resid/involution.hpp"
#include "resid/residuation.hpp"

namespace resid {

using Json = nlohmann::ordered_json;

enum class StructureKind { poset, involuted_poset, residuated };

/// Parsed document, carrying whatever the fields support.
struct StructureFile {
    Poset poset;
    std::optional<Involution> involution;  ///< validated antitone involution
    std::optional<ResiduatedStructure> residuated;
    Json provenance;  ///< null when absent

    StructureKind kind() const;
    /// Throws SchemaViolation when the document has no involution.
    InvolutedPoset involuted() const;
};

enum class OrderInput {
    covers,      ///< "covers" is a Hasse relation; (x, x) pairs are rejected
    full_order,  ///< "covers" may hold any generating pairs, reflexive ones included
};

/// Throws MalformedDocument, SchemaViolation (message starts with a JSON
/// pointer) or InvariantViolation (message carries the witness).
StructureFile parse_structure(std::string_view text, OrderInput order = OrderInput::covers);

/// "-" reads standard input.
StructureFile read_structure_file(const std::string& path, OrderInput order = OrderInput::covers);

Json to_json(const StructureFile& file);
StructureFile to_structure_file(const ExtensionResult& result);
StructureFile to_structure_file(const ResiduatedStructure& s, std::optional<Involution> involution = std::nullopt);

enum class TableFormat { text, csv };

/// odot table then arrow table, rows and columns in element order.
std::string render_tables(const ResiduatedStructure& s, TableFormat format);

/// DOT digraph of the cover relation with edges from lower to upper element.
/// When an involution is given its pairs become dashed undirected edges and
/// fixed points are annotated.
std::string export_dot(const Poset& p, const Involution* involution = nullptr);

}  // namespace resid
