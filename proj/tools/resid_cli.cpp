// resid: command-line front end for the residuation library.
//
// Exit codes: 0 success, 1 negative verdict (report on stdout), 2 input or
// usage error (diagnostic on stderr).

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "resid/classify.hpp"
#include "resid/constructions.hpp"
#include "resid/error.hpp"
#include "resid/miner.hpp"
#include "resid/structure_file.hpp"

namespace {

using namespace resid;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_input = 2;

struct Invocation {
    std::string input = "-";
    std::string output;
    std::string format;
    bool full_order = false;
};

struct Outcome {
    std::string text;
    int code = exit_ok;
};

StructureFile load(const Invocation& inv, const std::string& path) {
    return read_structure_file(path, inv.full_order ? OrderInput::full_order : OrderInput::covers);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string tuple_text(const std::vector<Label>& labels) {
    std::string out = "(";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? ", " : "") + labels[i];
    return out + ")";
}

std::string report_text(const VerificationReport& report) {
    std::size_t width = 0;
    for (const auto& c : report.checks()) width = std::max(width, c.name.size());
    std::ostringstream out;
    for (const auto& c : report.checks()) {
        out << c.name << std::string(width - c.name.size() + 2, ' ');
        if (c.passed) out << "pass\n";
        else out << "FAIL at " << tuple_text(c.witness) << '\n';
    }
    out << "overall" << std::string(width > 7 ? width - 7 + 2 : 2, ' ') << (report.overall() ? "pass" : "FAIL") << '\n';
    return out.str();
}

Json report_json(const VerificationReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks()) {
        Json entry = Json::object();
        entry["name"] = c.name;
        entry["passed"] = c.passed;
        if (!c.passed) entry["witness"] = c.witness;
        checks.push_back(std::move(entry));
    }
    Json out = Json::object();
    out["overall"] = report.overall();
    out["checks"] = std::move(checks);
    return out;
}

Check negation_matches(const ResiduatedStructure& s, const Involution& involution) {
    Check c{"negation-involution", true, {}};
    const auto neg = derived_negation(s);
    for (Index x = 0; x < s.size(); ++x) {
        if (neg[x] != involution(x)) {
            c.passed = false;
            c.witness = {s.poset.label(x)};
            break;
        }
    }
    return c;
}

std::string structure_summary(const StructureFile& file) {
    const Poset& p = file.poset;
    std::ostringstream out;
    out << "elements:";
    for (const auto& l : p.elements()) out << ' ' << l;
    out << "\ncovers:";
    for (const auto& [lo, hi] : p.covers()) out << ' ' << p.label(lo) << '<' << p.label(hi);
    out << '\n';
    if (file.involution) {
        out << "involution:";
        for (Index x = 0; x < p.size(); ++x) out << ' ' << p.label(x) << "->" << p.label((*file.involution)(x));
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Subcommands

Outcome run_verify(const Invocation& inv) {
    const StructureFile file = load(inv, inv.input);
    VerificationReport report;
    if (file.residuated) {
        const ResiduatedStructure& s = *file.residuated;
        report = verify_residuated(s);
        report.append(check_integrality(s));
        if (s.poset.bounds().bottom) {
            report.append(check_lemma1(s));
            if (file.involution) report.add(negation_matches(s, *file.involution));
        }
    } else if (file.involution) {
        report = check_antitone_involution(file.poset, file.involution->images());
    } else {
        report.add(Check{"partial-order", true, {}});
    }
    const int code = report.overall() ? exit_ok : exit_negative;
    if (inv.format == "json") return {dump(report_json(report)), code};
    return {report_text(report), code};
}

Outcome run_involutions(const Invocation& inv) {
    const StructureFile file = load(inv, inv.input);
    const Poset& p = file.poset;
    const auto all = enumerate_antitone_involutions(p);
    if (inv.format == "json") {
        Json arr = Json::array();
        for (const auto& i : all) {
            Json m = Json::object();
            for (Index x = 0; x < p.size(); ++x) m[p.label(x)] = p.label(i(x));
            arr.push_back(std::move(m));
        }
        return {dump(arr), exit_ok};
    }
    std::ostringstream out;
    out << all.size() << " antitone involution(s)\n";
    for (const auto& i : all) {
        for (Index x = 0; x < p.size(); ++x) out << (x ? " " : "") << p.label(x) << "->" << p.label(i(x));
        out << '\n';
    }
    return {out.str(), exit_ok};
}

Outcome render_structure(const StructureFile& file, const std::string& format) {
    if (format == "json") return {dump(to_json(file)), exit_ok};
    if (format == "dot") return {export_dot(file.poset, file.involution ? &*file.involution : nullptr), exit_ok};
    if (!file.residuated) {
        if (format == "csv") throw Error(ErrorKind::schema_violation, "/odot: csv output needs operation tables");
        return {structure_summary(file), exit_ok};
    }
    return {render_tables(*file.residuated, format == "csv" ? TableFormat::csv : TableFormat::text), exit_ok};
}

std::optional<BooleanAlgebra> boolean_input(const StructureFile& file) {
    auto b = recognize_boolean(file.poset);
    if (!b) throw Error(ErrorKind::invariant_violation, "/covers: the order is not a Boolean algebra");
    return b;
}

struct ExtendParams {
    std::string construction;
    std::string mode = "addfour";
    std::int64_t n = 0;
    std::int64_t k = 0;
};

Outcome run_extend(const Invocation& inv, const ExtendParams& params) {
    const auto n = static_cast<Index>(params.n);
    const auto k = static_cast<Index>(params.k);
    const std::string& c = params.construction;
    if (c == "cor1") return render_structure(to_structure_file(residuated_chain(n)), inv.format);

    const StructureFile file = load(inv, inv.input);
    if (c == "thm3") return render_structure(to_structure_file(extend_with_dual(file.poset, n, k)), inv.format);
    if (c == "lemma2") {
        const auto b = boolean_input(file);
        StructureFile out = to_structure_file(boolean_residuation(*b), b->complement());
        out.provenance = Json::object({{"construction", "lemma2"}});
        return render_structure(out, inv.format);
    }
    if (c == "thm5") return render_structure(to_structure_file(extend_boolean(*boolean_input(file), n)), inv.format);

    const InvolutedPoset ip = file.involuted();
    if (c == "thm2") return render_structure(to_structure_file(extend_by_split_chain(ip, n)), inv.format);
    const ExtensionMode mode = params.mode == "reusebounds" ? ExtensionMode::reuse_bounds
                               : params.mode == "reusefour" ? ExtensionMode::reuse_four
                                                            : ExtensionMode::add_four;
    return render_structure(to_structure_file(extend_by_four_chain(ip, mode)), inv.format);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Outcome run_classify(const Invocation& inv) {
    const StructureFile file = load(inv, inv.input);
    const Poset& p = file.poset;
    const Bounds bounds = p.bounds();
    const bool lattice = p.is_lattice();

    Json out = Json::object();
    out["lattice"] = lattice;
    out["chain"] = p.is_chain();
    out["bounded"] = bounds.bottom.has_value() && bounds.top.has_value();
    int code = lattice ? exit_ok : exit_negative;
    if (lattice) {
        const auto d = is_distributive(p);
        out["distributive"] = d.distributive;
        if (d.witness) {
            out["distributive_witness"] = {p.label((*d.witness)[0]), p.label((*d.witness)[1]), p.label((*d.witness)[2])};
        }
        out["boolean"] = recognize_boolean(p).has_value();
        if (file.involution) {
            const auto k = check_pseudo_kleene(p, *file.involution);
            out["pseudo_kleene"] = k.pseudo_kleene;
            out["kleene"] = k.kleene;
            out["checks"] = report_json(k.report)["checks"];
            if (!k.pseudo_kleene) code = exit_negative;
        }
    }
    if (inv.format == "json") return {dump(out), code};

    std::ostringstream text;
    text << "lattice: " << yes_no(lattice) << '\n';
    text << "chain: " << yes_no(out["chain"].get<bool>()) << '\n';
    text << "bounded: " << yes_no(out["bounded"].get<bool>()) << '\n';
    if (lattice) {
        text << "distributive: " << yes_no(out["distributive"].get<bool>());
        if (out.contains("distributive_witness")) {
            text << " at " << tuple_text(out["distributive_witness"].get<std::vector<Label>>());
        }
        text << '\n';
        text << "boolean: " << yes_no(out["boolean"].get<bool>()) << '\n';
        if (file.involution) {
            text << "pseudo-kleene: " << yes_no(out["pseudo_kleene"].get<bool>()) << '\n';
            for (const auto& c : out["checks"]) {
                text << "  " << c["name"].get<std::string>() << ": ";
                if (c["passed"].get<bool>()) text << "pass\n";
                else text << "FAIL at " << tuple_text(c["witness"].get<std::vector<Label>>()) << '\n';
            }
            text << "kleene: " << yes_no(out["kleene"].get<bool>()) << '\n';
        }
    }
    return {text.str(), code};
}

struct MineParams {
    bool require_negation = true;
    std::int64_t limit = 16;
    bool naive = false;
    bool stats_json = false;
    bool serial = false;
};

Json stats_json(const MinerStats& s) {
    return Json::object({{"nodes", s.nodes},
                         {"complete_tables", s.complete_tables},
                         {"pruned_integrality", s.pruned_integrality},
                         {"pruned_negation", s.pruned_negation},
                         {"pruned_monotonicity", s.pruned_monotonicity},
                         {"pruned_associativity", s.pruned_associativity},
                         {"rejected_no_residual", s.rejected_no_residual},
                         {"rejected_verification", s.rejected_verification}});
}

Outcome run_mine(const Invocation& inv, const MineParams& params) {
    const StructureFile file = load(inv, inv.input);
    const InvolutedPoset ip = file.involuted();
    MinerOptions options;
    options.require_negation = params.require_negation;
    options.limit = static_cast<std::size_t>(params.limit);
    options.exec = params.serial ? Execution::serial : Execution::parallel;
    if (params.naive && ip.size() > naive_size_limit) {
        throw Error(ErrorKind::invariant_violation,
                    "--naive is limited to " + std::to_string(naive_size_limit) + " elements, input has " +
                        std::to_string(ip.size()));
    }
    const MinerOutcome result = params.naive ? find_residuations_naive(ip, options) : find_residuations(ip, options);
    const int code = result.satisfiable ? exit_ok : exit_negative;

    if (inv.format == "json") {
        Json out = Json::object();
        out["satisfiable"] = result.satisfiable;
        Json structures = Json::array();
        for (const auto& s : result.structures) structures.push_back(to_json(to_structure_file(s, ip.involution())));
        out["structures"] = std::move(structures);
        out["stats"] = stats_json(result.stats);
        return {dump(out), code};
    }
    std::ostringstream text;
    if (!result.satisfiable) {
        text << "Unsatisfiable\n";
    } else {
        text << "Satisfiable: " << result.structures.size() << " structure(s) (limit " << options.limit << ")\n";
        for (std::size_t i = 0; i < result.structures.size(); ++i) {
            text << "\nstructure " << (i + 1) << '\n' << render_tables(result.structures[i], TableFormat::text);
        }
    }
    if (params.stats_json) text << stats_json(result.stats).dump() << '\n';
    return {text.str(), code};
}

Outcome run_diff(const Invocation& inv, const std::string& left_path, const std::string& right_path, bool free) {
    const StructureFile left = load(inv, left_path);
    const StructureFile right = load(inv, right_path);
    if (!left.residuated || !right.residuated) {
        throw Error(ErrorKind::schema_violation, "/odot: diff compares residuated structures");
    }
    const Poset& lp = left.poset;
    const Poset& rp = right.poset;
    std::vector<IndexPair> anchors;
    if (!free) {
        for (Index x = 0; x < lp.size(); ++x) {
            const Label& l = lp.label(x);
            if (l.starts_with('#')) continue;
            if (auto y = rp.find(l)) anchors.emplace_back(x, *y);
        }
    }
    const auto iso = find_structural_isomorphism(*left.residuated, *right.residuated, anchors);
    std::ostringstream text;
    if (!iso) {
        text << "different\n";
        return {text.str(), exit_negative};
    }
    text << "equal\n";
    for (Index x = 0; x < lp.size(); ++x) text << lp.label(x) << " -> " << rp.label((*iso)[x]) << '\n';
    return {text.str(), exit_ok};
}

// ---------------------------------------------------------------------------

void add_input(CLI::App* cmd, Invocation& inv) {
    cmd->add_option("input,-i,--input", inv.input, "Structure file, '-' for standard input")->capture_default_str();
    cmd->add_flag("--full-order", inv.full_order, "Read \"covers\" as arbitrary order pairs and close them");
}

void add_output(CLI::App* cmd, Invocation& inv, std::vector<std::string> formats, std::string fallback) {
    cmd->add_option("-o,--output", inv.output, "Write to this file instead of standard output");
    cmd->add_option("--format", inv.format, "Output format")
        ->check(CLI::IsMember(std::move(formats)))
        ->default_val(std::move(fallback));
}

CLI::Validator at_least(std::int64_t lo, const std::string& name) {
    return CLI::Validator(
        [lo, name](std::string& value) -> std::string {
            try {
                if (std::stoll(value) >= lo) return {};
            } catch (const std::exception&) {
            }
            return name + " must be an integer >= " + std::to_string(lo);
        },
        ">=" + std::to_string(lo));
}

int emit(const Invocation& inv, const Outcome& outcome) {
    if (inv.output.empty()) {
        std::cout << outcome.text << std::flush;
        return outcome.code;
    }
    std::ofstream out(inv.output, std::ios::binary);
    out << outcome.text;
    if (!out) {
        std::cerr << "error: cannot write '" << inv.output << "'\n";
        return exit_input;
    }
    return outcome.code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Residuated extensions of finite posets with antitone involution"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    Invocation inv;
    std::function<Outcome()> action;
    const std::vector<std::string> table_formats{"text", "csv", "json", "dot"};
    const std::vector<std::string> report_formats{"text", "json"};

    auto* verify = app.add_subcommand("verify", "Check the axioms the input claims");
    add_input(verify, inv);
    add_output(verify, inv, report_formats, "text");
    verify->callback([&] { action = [&] { return run_verify(inv); }; });

    auto* involutions = app.add_subcommand("involutions", "List every antitone involution of the order");
    add_input(involutions, inv);
    add_output(involutions, inv, report_formats, "text");
    involutions->callback([&] { action = [&] { return run_involutions(inv); }; });

    auto* extend = app.add_subcommand("extend", "Build a residuated extension");
    extend->require_subcommand(1);
    ExtendParams ext;
    const std::int64_t no_max = std::numeric_limits<std::int32_t>::max();
    auto add_construction = [&](const std::string& name, const std::string& about, bool takes_input) {
        auto* sub = extend->add_subcommand(name, about);
        if (takes_input) add_input(sub, inv);
        add_output(sub, inv, table_formats, "text");
        sub->callback([&, name] {
            ext.construction = name;
            action = [&] { return run_extend(inv, ext); };
        });
        return sub;
    };
    auto* thm1 = add_construction("thm1", "Adjoin the four-element frame around an involuted poset", true);
    thm1->add_option("--mode", ext.mode, "addfour, reusebounds or reusefour")
        ->check(CLI::IsMember({"addfour", "reusebounds", "reusefour"}))
        ->capture_default_str();
    auto* thm2 = add_construction("thm2", "Sandwich an involuted poset between two n-chains", true);
    thm2->add_option("--n", ext.n, "Chain length, n > 1")->required()->check(at_least(2, "--n") & CLI::Range(no_max));
    auto* thm3 = add_construction("thm3", "Stack a poset and its dual inside a chain", true);
    thm3->add_option("--n", ext.n, "Outer chain length, n > 1")->required()->check(at_least(2, "--n") & CLI::Range(no_max));
    thm3->add_option("--k", ext.k, "Elements between the poset and its dual, k >= 0")
        ->check(at_least(0, "--k") & CLI::Range(no_max))
        ->capture_default_str();
    auto* cor1 = add_construction("cor1", "Residuated n-chain", false);
    cor1->add_option("--n", ext.n, "Chain length, n >= 3")->required()->check(at_least(3, "--n") & CLI::Range(no_max));
    add_construction("lemma2", "Residuation of a Boolean algebra", true);
    auto* thm5 = add_construction("thm5", "Sandwich a Boolean algebra between two n-chains", true);
    thm5->add_option("--n", ext.n, "Chain length, n >= 1")->required()->check(at_least(1, "--n") & CLI::Range(no_max));

    auto* classify = app.add_subcommand("classify", "Lattice, distributivity, Boolean and (pseudo-)Kleene verdicts");
    add_input(classify, inv);
    add_output(classify, inv, report_formats, "text");
    classify->callback([&] { action = [&] { return run_classify(inv); }; });

    auto* mine = app.add_subcommand("mine", "Search for residuations compatible with the involution");
    add_input(mine, inv);
    add_output(mine, inv, report_formats, "text");
    MineParams mp;
    mine->add_flag("--require-negation,!--no-require-negation", mp.require_negation,
                   "Require x -> 0 to equal the involution (default on)");
    mine->add_option("--limit", mp.limit, "Stop after this many structures")
        ->check(at_least(1, "--limit") & CLI::Range(no_max))
        ->capture_default_str();
    mine->add_flag("--naive", mp.naive, "Unpruned enumeration (at most 4 elements)");
    mine->add_flag("--stats-json", mp.stats_json, "Append search statistics as a JSON line");
    mine->add_flag("--serial", mp.serial, "Explore subtrees on one thread");
    mine->callback([&] { action = [&] { return run_mine(inv, mp); }; });

    auto* show = app.add_subcommand("show", "Render a structure file");
    add_input(show, inv);
    add_output(show, inv, table_formats, "text");
    show->callback([&] { action = [&] { return render_structure(load(inv, inv.input), inv.format); }; });

    auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT");
    add_input(dot, inv);
    dot->add_option("-o,--output", inv.output, "Write to this file instead of standard output");
    dot->callback([&] {
        action = [&] {
            const StructureFile file = load(inv, inv.input);
            return Outcome{export_dot(file.poset, file.involution ? &*file.involution : nullptr), exit_ok};
        };
    });

    auto* diff = app.add_subcommand("diff", "Structural equality of two residuated structures");
    std::string left;
    std::string right;
    bool free = false;
    diff->add_option("left", left, "First structure file")->required();
    diff->add_option("right", right, "Second structure file")->required();
    diff->add_flag("--free", free, "Do not pin labels shared by both files");
    diff->add_flag("--full-order", inv.full_order, "Read \"covers\" as arbitrary order pairs and close them");
    diff->add_option("-o,--output", inv.output, "Write to this file instead of standard output");
    diff->callback([&] { action = [&] { return run_diff(inv, left, right, free); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        return emit(inv, action());
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return exit_input;
}
