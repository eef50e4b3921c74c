#include "resid/structure_file.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "resid/error.hpp"

namespace resid {

namespace {

std::string pointer_token(std::string_view s) {
    std::string out;
    for (char ch : s) {
        if (ch == '~') out += "~0";
        else if (ch == '/') out += "~1";
        else out += ch;
    }
    return out;
}

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
    throw Error(ErrorKind::schema_violation, (pointer.empty() ? "/" : pointer) + ": " + what);
}

const Json& require_string(const Json& j, const std::string& pointer) {
    if (!j.is_string()) schema_error(pointer, "expected a string");
    return j;
}

Index label_index(const Poset& p, const Json& j, const std::string& pointer) {
    const auto& s = require_string(j, pointer).get_ref<const std::string&>();
    auto i = p.find(s);
    if (!i) schema_error(pointer, "unknown label '" + s + "'");
    return *i;
}

OpTable parse_table(const Poset& p, const Json& j, const std::string& pointer) {
    if (!j.is_object()) schema_error(pointer, "expected an object of rows");
    const Index n = p.size();
    OpTable t(n);
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!p.find(it.key())) schema_error(pointer + "/" + pointer_token(it.key()), "unknown label '" + it.key() + "'");
    }
    for (Index x = 0; x < n; ++x) {
        const std::string& lx = p.label(x);
        if (!j.contains(lx)) schema_error(pointer, "missing row '" + lx + "'");
        const Json& row = j.at(lx);
        const std::string row_ptr = pointer + "/" + pointer_token(lx);
        if (!row.is_object()) schema_error(row_ptr, "expected an object");
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (!p.find(it.key())) schema_error(row_ptr + "/" + pointer_token(it.key()), "unknown label '" + it.key() + "'");
        }
        for (Index y = 0; y < n; ++y) {
            const std::string& ly = p.label(y);
            if (!row.contains(ly)) schema_error(row_ptr, "missing entry for '" + ly + "'");
            t.set(x, y, label_index(p, row.at(ly), row_ptr + "/" + pointer_token(ly)));
        }
    }
    return t;
}

std::string witness_text(const Check& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.witness.size(); ++i) out += (i ? ", " : "") + c.witness[i];
    return out + ")";
}

Json table_json(const ResiduatedStructure& s, const OpTable& t) {
    Json out = Json::object();
    const Poset& p = s.poset;
    for (Index x = 0; x < p.size(); ++x) {
        Json row = Json::object();
        for (Index y = 0; y < p.size(); ++y) row[p.label(y)] = p.label(t(x, y));
        out[p.label(x)] = std::move(row);
    }
    return out;
}

// Counts code points so UTF-8 labels and operator symbols align.
std::size_t display_width(std::string_view s) {
    std::size_t w = 0;
    for (unsigned char ch : s) {
        if ((ch & 0xC0) != 0x80) ++w;
    }
    return w;
}

std::string pad(std::string_view s, std::size_t width) {
    std::string out(s);
    out.append(width - std::min(width, display_width(s)), ' ');
    return out;
}

void rstrip(std::string& line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
}

void text_table(std::ostringstream& out, const Poset& p, const OpTable& t, std::string_view op) {
    std::size_t w = display_width(op);
    for (const auto& l : p.elements()) w = std::max(w, display_width(l));
    std::string header = pad(op, w) + " |";
    for (const auto& l : p.elements()) header += " " + pad(l, w);
    rstrip(header);
    out << header << '\n';
    out << std::string(w + 1, '-') << '+' << std::string((w + 1) * p.size(), '-') << '\n';
    for (Index x = 0; x < p.size(); ++x) {
        std::string line = pad(p.label(x), w) + " |";
        for (Index y = 0; y < p.size(); ++y) line += " " + pad(p.label(t(x, y)), w);
        rstrip(line);
        out << line << '\n';
    }
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void csv_table(std::ostringstream& out, const Poset& p, const OpTable& t, std::string_view op) {
    out << csv_field(op);
    for (const auto& l : p.elements()) out << ',' << csv_field(l);
    out << "\r\n";
    for (Index x = 0; x < p.size(); ++x) {
        out << csv_field(p.label(x));
        for (Index y = 0; y < p.size(); ++y) out << ',' << csv_field(p.label(t(x, y)));
        out << "\r\n";
    }
}

std::string dot_id(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

const std::set<std::string, std::less<>> known_fields{"elements", "covers", "involution", "unit", "odot", "arrow", "provenance"};

}  // namespace

StructureKind StructureFile::kind() const {
    if (residuated) return StructureKind::residuated;
    if (involution) return StructureKind::involuted_poset;
    return StructureKind::poset;
}

InvolutedPoset StructureFile::involuted() const {
    if (!involution) schema_error("/involution", "this command needs an involution");
    return InvolutedPoset(poset, *involution);
}

StructureFile parse_structure(std::string_view text, OrderInput order) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::malformed_document, e.what());
    }
    if (!doc.is_object()) schema_error("", "expected a JSON object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!known_fields.contains(it.key())) schema_error("/" + pointer_token(it.key()), "unknown field");
    }

    if (!doc.contains("elements")) schema_error("", "missing field 'elements'");
    const Json& elements = doc.at("elements");
    if (!elements.is_array()) schema_error("/elements", "expected an array of strings");
    std::vector<Label> labels;
    std::set<std::string, std::less<>> seen;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto& l = require_string(elements[i], "/elements/" + std::to_string(i)).get_ref<const std::string&>();
        if (!seen.insert(l).second) schema_error("/elements/" + std::to_string(i), "duplicate label '" + l + "'");
        labels.push_back(l);
    }

    std::vector<LabelPair> pairs;
    if (doc.contains("covers")) {
        const Json& covers = doc.at("covers");
        if (!covers.is_array()) schema_error("/covers", "expected an array of pairs");
        for (std::size_t i = 0; i < covers.size(); ++i) {
            const std::string ptr = "/covers/" + std::to_string(i);
            const Json& pair = covers[i];
            if (!pair.is_array() || pair.size() != 2) schema_error(ptr, "expected a 2-array of labels");
            const auto& lo = require_string(pair[0], ptr + "/0").get_ref<const std::string&>();
            const auto& hi = require_string(pair[1], ptr + "/1").get_ref<const std::string&>();
            if (!seen.contains(lo)) schema_error(ptr + "/0", "unknown label '" + lo + "'");
            if (!seen.contains(hi)) schema_error(ptr + "/1", "unknown label '" + hi + "'");
            if (lo == hi && order == OrderInput::covers) schema_error(ptr, "cover relates '" + lo + "' to itself");
            pairs.emplace_back(lo, hi);
        }
    }

    StructureFile file;
    try {
        file.poset = order == OrderInput::covers ? Poset::from_covers(labels, pairs) : Poset::from_order(labels, pairs);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::cycle_detected) throw Error(ErrorKind::invariant_violation, std::string("/covers: ") + e.what());
        throw;
    }
    const Poset& p = file.poset;

    if (doc.contains("involution")) {
        const Json& inv = doc.at("involution");
        if (!inv.is_object()) schema_error("/involution", "expected an object mapping label to label");
        std::vector<Index> images(p.size(), p.size());
        for (auto it = inv.begin(); it != inv.end(); ++it) {
            const std::string ptr = "/involution/" + pointer_token(it.key());
            auto from = p.find(it.key());
            if (!from) schema_error(ptr, "unknown label '" + it.key() + "'");
            images[*from] = label_index(p, it.value(), ptr);
        }
        for (Index x = 0; x < p.size(); ++x) {
            if (images[x] == p.size()) schema_error("/involution", "missing image for '" + p.label(x) + "'");
        }
        const auto report = check_antitone_involution(p, images);
        for (const auto& c : report.checks()) {
            if (!c.passed) {
                throw Error(ErrorKind::invariant_violation,
                            "/involution: check '" + c.name + "' fails at " + witness_text(c));
            }
        }
        file.involution = Involution(std::move(images));
    }

    const int table_fields = doc.contains("unit") + doc.contains("odot") + doc.contains("arrow");
    if (table_fields != 0 && table_fields != 3) schema_error("", "'unit', 'odot' and 'arrow' must appear together");
    if (table_fields == 3) {
        ResiduatedStructure s;
        s.poset = p;
        s.unit = label_index(p, doc.at("unit"), "/unit");
        s.odot = parse_table(p, doc.at("odot"), "/odot");
        s.arrow = parse_table(p, doc.at("arrow"), "/arrow");
        file.residuated = std::move(s);
    }

    if (doc.contains("provenance")) file.provenance = doc.at("provenance");
    return file;
}

StructureFile read_structure_file(const std::string& path, OrderInput order) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error(ErrorKind::malformed_document, "cannot read '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return parse_structure(text, order);
}

Json to_json(const StructureFile& file) {
    const Poset& p = file.poset;
    Json out = Json::object();
    out["elements"] = p.elements();
    Json covers = Json::array();
    for (const auto& [lo, hi] : p.covers()) covers.push_back(Json::array({p.label(lo), p.label(hi)}));
    out["covers"] = std::move(covers);
    if (file.involution) {
        Json inv = Json::object();
        for (Index x = 0; x < p.size(); ++x) inv[p.label(x)] = p.label((*file.involution)(x));
        out["involution"] = std::move(inv);
    }
    if (file.residuated) {
        const ResiduatedStructure& s = *file.residuated;
        out["unit"] = p.label(s.unit);
        out["odot"] = table_json(s, s.odot);
        out["arrow"] = table_json(s, s.arrow);
    }
    if (!file.provenance.is_null()) out["provenance"] = file.provenance;
    return out;
}

StructureFile to_structure_file(const ResiduatedStructure& s, std::optional<Involution> involution) {
    StructureFile file;
    file.poset = s.poset;
    file.involution = std::move(involution);
    file.residuated = s;
    return file;
}

StructureFile to_structure_file(const ExtensionResult& result) {
    StructureFile file = to_structure_file(result.structure, result.involution);
    Json prov = Json::object();
    prov["construction"] = result.provenance.construction;
    for (const auto& [key, value] : result.provenance.parameters) {
        const bool numeric = !value.empty() && value.find_first_not_of("0123456789") == std::string::npos;
        if (numeric) prov[key] = std::stoull(value);
        else prov[key] = value;
    }
    file.provenance = std::move(prov);
    return file;
}

std::string render_tables(const ResiduatedStructure& s, TableFormat format) {
    validate_shape(s);
    std::ostringstream out;
    if (format == TableFormat::text) {
        text_table(out, s.poset, s.odot, "⊙");
        out << '\n';
        text_table(out, s.poset, s.arrow, "→");
    } else {
        csv_table(out, s.poset, s.odot, "⊙");
        out << "\r\n";
        csv_table(out, s.poset, s.arrow, "→");
    }
    return out.str();
}

std::string export_dot(const Poset& p, const Involution* involution) {
    std::ostringstream out;
    out << "digraph poset {\n";
    out << "  rankdir=BT;\n";
    for (Index x = 0; x < p.size(); ++x) {
        out << "  " << dot_id(p.label(x));
        if (involution != nullptr && (*involution)(x) == x) out << " [xlabel=" << dot_id(p.label(x) + "'=" + p.label(x)) << "]";
        out << ";\n";
    }
    for (const auto& [lo, hi] : p.covers()) out << "  " << dot_id(p.label(lo)) << " -> " << dot_id(p.label(hi)) << ";\n";
    if (involution != nullptr) {
        for (Index x = 0; x < p.size(); ++x) {
            const Index y = (*involution)(x);
            if (x < y) {
                out << "  " << dot_id(p.label(x)) << " -> " << dot_id(p.label(y))
                    << " [style=dashed, dir=none, constraint=false];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace resid
