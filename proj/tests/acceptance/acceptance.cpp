// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
//   acceptance --cli <path to resid> --data <tests directory>

#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/corpus.hpp"
#include "../support/process.hpp"
#include "resid/constructions.hpp"
#include "resid/error.hpp"
#include "resid/fixtures.hpp"
#include "resid/miner.hpp"

using namespace resid;
using resid::testing::quoted;
using resid::testing::run_command;

namespace {

std::string cli_path;
std::string data_dir;

struct Verdict {
    bool passed = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

// Counts matching table entries (cells right of the '|' on data rows) between two text renderings.
std::pair<std::size_t, std::size_t> matching_entries(const std::string& got, const std::string& want) {
    auto rows = [](const std::string& text) {
        std::vector<std::vector<std::string>> out;
        std::istringstream in(text);
        bool header = true;
        for (std::string line; std::getline(in, line);) {
            if (line.empty()) {
                header = true;
                continue;
            }
            if (line.find('+') != std::string::npos && line.find_first_not_of("-+") == std::string::npos) continue;
            const auto bar = line.find(" |");
            if (bar == std::string::npos) continue;
            if (header) {
                header = false;
                continue;
            }
            out.push_back(split_ws(line.substr(bar + 2)));
        }
        return out;
    };
    const auto g = rows(got);
    const auto w = rows(want);
    std::size_t total = 0;
    std::size_t same = 0;
    for (std::size_t r = 0; r < w.size(); ++r) {
        for (std::size_t c = 0; c < w[r].size(); ++c) {
            ++total;
            if (r < g.size() && c < g[r].size() && g[r][c] == w[r][c]) ++same;
        }
    }
    return {same, total};
}

Verdict golden_reproduction(const std::string& args, const std::string& golden, std::size_t expected_entries) {
    const auto start = Clock::now();
    const auto r = run_command(quoted(cli_path) + " " + args);
    const double t = seconds_since(start);
    const std::string want = read_file(data_dir + "/golden/" + golden);
    const auto [same, total] = matching_entries(r.out, want);
    Verdict v;
    v.passed = r.code == 0 && r.out == want && same == expected_entries && total == expected_entries && t < 1.0;
    std::ostringstream d;
    d << same << "/" << expected_entries << " entries, byte-equal " << (r.out == want ? "yes" : "no") << ", " << t
      << " s";
    v.detail = d.str();
    return v;
}

std::string fixture(const std::string& name) { return quoted(data_dir + "/fixtures/" + name); }

bool bounded(const Poset& p) {
    const Bounds b = p.bounds();
    return b.bottom && b.top;
}

// Runs every guarantee an extension output must meet; returns an empty string on success.
std::string audit(const ResiduatedStructure& s, const Involution& involution) {
    const auto report = verify_residuated(s);
    for (const auto& c : report.checks()) {
        if (!c.passed) return c.name;
    }
    if (!check_lemma1(s).overall()) return "lemma1";
    if (!check_integrality(s).overall()) return "integrality";
    if (derived_negation(s) != involution.images()) return "negation";
    return {};
}

struct CorpusOutput {
    std::string name;
    ResiduatedStructure structure;
    Involution involution;
};

std::vector<CorpusOutput> corpus_outputs() {
    std::vector<CorpusOutput> out;
    auto keep = [&](const std::string& name, ExtensionResult r) {
        out.push_back({name, std::move(r.structure), std::move(r.involution)});
    };
    const auto modes = {std::pair{ExtensionMode::add_four, "addfour"}, std::pair{ExtensionMode::reuse_bounds, "reusebounds"},
                        std::pair{ExtensionMode::reuse_four, "reusefour"}};
    for (const auto& [name, ip] : resid::testing::involuted_corpus()) {
        for (const auto& [mode, mode_name] : modes) {
            try {
                keep(name + " thm1 " + mode_name, extend_by_four_chain(ip, mode, Verify::no));
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::mode_unsatisfiable) throw;
            }
        }
        for (Index n = 2; n <= 3; ++n) keep(name + " thm2 n=" + std::to_string(n), extend_by_split_chain(ip, n, Verify::no));
    }
    for (Index n = 3; n <= 10; ++n) keep("cor1 n=" + std::to_string(n), residuated_chain(n, Verify::no));
    for (const auto& [name, p] : resid::testing::plain_corpus()) {
        for (Index n = 2; n <= 3; ++n) {
            for (Index k = 0; k <= 2; ++k) {
                keep(name + " thm3 n=" + std::to_string(n) + " k=" + std::to_string(k), extend_with_dual(p, n, k, Verify::no));
            }
        }
    }
    for (const auto& b : resid::testing::boolean_corpus()) {
        out.push_back({"lemma2 |B|=" + std::to_string(b.size()), boolean_residuation(b), b.complement()});
        for (Index n = 1; n <= 3; ++n) {
            keep("thm5 |B|=" + std::to_string(b.size()) + " n=" + std::to_string(n), extend_boolean(b, n, Verify::no));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

Verdict criterion_n5_frame() {
    return golden_reproduction("extend thm1 --mode reusebounds -i " + fixture("n5.json"), "n5_frame_tables.txt", 98);
}

Verdict criterion_chain5() { return golden_reproduction("extend cor1 --n 5", "chain5_tables.txt", 50); }

Verdict criterion_cube_split() {
    return golden_reproduction("extend thm5 --n 2 -i " + fixture("cube.json"), "cube_split2_tables.txt", 288);
}

Verdict criterion_n5_unsat() {
    const auto start = Clock::now();
    const auto r = run_command(quoted(cli_path) + " mine --require-negation -i " + fixture("n5.json"));
    const double t = seconds_since(start);
    Verdict v;
    v.passed = r.code == 1 && r.out == "Unsatisfiable\n" && t < 10.0;

    std::size_t compared = 0;
    std::size_t mismatched = 0;
    for (const InvolutedPoset& ip : resid::testing::involuted_posets_up_to(naive_size_limit)) {
        if (!bounded(ip.poset())) continue;
        for (bool negation : {true, false}) {
            MinerOptions options;
            options.require_negation = negation;
            options.limit = 1U << 20;
            const auto pruned = find_residuations(ip, options);
            const auto naive = find_residuations_naive(ip, options);
            ++compared;
            if (pruned.structures != naive.structures || pruned.satisfiable != naive.satisfiable) ++mismatched;
        }
    }
    v.passed = v.passed && compared > 0 && mismatched == 0;
    std::ostringstream d;
    d << "N5 " << (r.out == "Unsatisfiable\n" ? "unsatisfiable" : "NOT unsatisfiable") << " in " << t << " s; "
      << compared - mismatched << "/" << compared << " small searches equal the naive oracle";
    v.detail = d.str();
    return v;
}

Verdict criterion_soundness() {
    const auto start = Clock::now();
    const auto outputs = corpus_outputs();
    std::size_t failures = 0;
    std::string first;
    for (const auto& o : outputs) {
        const std::string bad = audit(o.structure, o.involution);
        if (!bad.empty()) {
            if (failures++ == 0) first = o.name + " (" + bad + ")";
        }
    }
    const double t = seconds_since(start);
    Verdict v;
    v.passed = failures == 0 && t < 120.0;
    std::ostringstream d;
    d << outputs.size() << " outputs, " << failures << " failures";
    if (!first.empty()) d << ", first " << first;
    d << ", " << t << " s";
    v.detail = d.str();
    return v;
}

Verdict criterion_coherence() {
    std::size_t checked = 0;
    std::size_t different = 0;
    for (const auto& [name, ip] : resid::testing::involuted_corpus()) {
        ++checked;
        if (!structurally_equal(extend_by_split_chain(ip, 2), extend_by_four_chain(ip, ExtensionMode::add_four))) ++different;
    }
    const InvolutedPoset empty(Poset::from_covers({}, {}), Involution::identity(0));
    const bool chain_equal = structurally_equal(residuated_chain(4), extend_by_four_chain(empty, ExtensionMode::add_four));

    // The same fact through the command line.
    const std::string tmp = "/tmp/resid-acceptance-" + std::to_string(::getpid());
    run_command(quoted(cli_path) + " extend thm2 --n 2 --format json -o " + quoted(tmp + "-a.json") + " " + fixture("n5.json"));
    run_command(quoted(cli_path) + " extend thm1 --format json -o " + quoted(tmp + "-b.json") + " " + fixture("n5.json"));
    const auto diff = run_command(quoted(cli_path) + " diff " + quoted(tmp + "-a.json") + " " + quoted(tmp + "-b.json"));
    std::remove((tmp + "-a.json").c_str());
    std::remove((tmp + "-b.json").c_str());

    Verdict v;
    v.passed = different == 0 && chain_equal && diff.code == 0;
    std::ostringstream d;
    d << checked - different << "/" << checked << " split n=2 equal four-frame; 4-chain "
      << (chain_equal ? "equal" : "DIFFERENT") << "; cli diff exit " << diff.code;
    v.detail = d.str();
    return v;
}

Verdict criterion_kleene() {
    auto classify = [](const Poset& p, const Involution& inv) {
        const auto k = check_pseudo_kleene(p, inv);
        return k.kleene ? 2 : k.pseudo_kleene ? 1 : 0;
    };
    const auto six = fixtures::kleene_six();
    const auto nine = fixtures::pseudo_kleene_nine();
    const auto n5 = fixtures::n5_involuted();
    const bool named = classify(six.poset(), six.involution()) == 2 && classify(nine.poset(), nine.involution()) == 1 &&
                       classify(n5.poset(), n5.involution()) == 0;

    std::size_t checked = 0;
    std::size_t changed = 0;
    for (const auto& [name, ip] : resid::testing::involuted_corpus()) {
        if (!ip.poset().is_lattice()) continue;
        const int before = classify(ip.poset(), ip.involution());
        for (auto mode : {ExtensionMode::add_four, ExtensionMode::reuse_bounds, ExtensionMode::reuse_four}) {
            try {
                const auto r = extend_by_four_chain(ip, mode);
                ++checked;
                if (classify(r.structure.poset, r.involution) != before) ++changed;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::mode_unsatisfiable) throw;
            }
        }
    }
    const auto cli_n5 = run_command(quoted(cli_path) + " classify " + fixture("n5.json"));
    const auto cli_six = run_command(quoted(cli_path) + " classify " + fixture("kleene6.json"));
    const bool cli_ok = cli_n5.code == 1 && cli_six.code == 0 && cli_six.out.find("kleene: yes") != std::string::npos;

    Verdict v;
    v.passed = named && changed == 0 && checked > 0 && cli_ok;
    std::ostringstream d;
    d << "named fixtures " << (named ? "classified" : "MISCLASSIFIED") << "; " << checked - changed << "/" << checked
      << " extensions keep their class";
    v.detail = d.str();
    return v;
}

Verdict criterion_boolean_restriction() {
    std::size_t entries = 0;
    std::size_t wrong = 0;
    for (const auto& b : resid::testing::boolean_corpus()) {
        const Lattice& l = b.lattice();
        for (Index n = 1; n <= 3; ++n) {
            const auto r = extend_boolean(b, n);
            const auto& s = r.structure;
            const Index zero = *s.poset.bounds().bottom;
            for (Index x = 0; x < b.size(); ++x) {
                for (Index y = 0; y < b.size(); ++y) {
                    const Index m = l.meet(x, y);
                    const Index j = l.join(b.complement()(x), y);
                    const Index want_odot = m == b.bottom() ? zero : r.embedding[m];
                    const Index want_arrow = j == b.top() ? s.unit : r.embedding[j];
                    entries += 2;
                    wrong += s.odot(r.embedding[x], r.embedding[y]) != want_odot;
                    wrong += s.arrow(r.embedding[x], r.embedding[y]) != want_arrow;
                }
            }
        }
    }
    Verdict v;
    v.passed = wrong == 0;
    v.detail = std::to_string(entries - wrong) + "/" + std::to_string(entries) + " sub-table entries";
    return v;
}

Verdict criterion_fault_injection() {
    const auto outputs = corpus_outputs();
    std::mt19937_64 gen(20240611);
    std::uniform_int_distribution<std::size_t> pick(0, outputs.size() - 1);
    const std::size_t trials = 500;
    std::size_t detected = 0;
    std::size_t replayed = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto& o = outputs[pick(gen)];
        ResiduatedStructure bad = o.structure;
        const Index n = bad.size();
        std::uniform_int_distribution<Index> cell(0, n - 1);
        OpTable& table = t % 2 ? bad.arrow : bad.odot;
        const Index a = cell(gen);
        const Index b = cell(gen);
        Index value = cell(gen);
        if (n > 1) {
            while (value == table(a, b)) value = cell(gen);
        }
        table.set(a, b, value);

        VerificationReport report = verify_residuated(bad);
        report.append(check_integrality(bad));
        if (report.overall()) continue;
        ++detected;
        bool all_replay = true;
        for (const auto& c : report.checks()) {
            if (c.passed) continue;
            std::vector<Index> w;
            for (const auto& l : c.witness) w.push_back(bad.poset.index_of(l));
            if (holds_at(bad, c.name, w)) all_replay = false;
        }
        replayed += all_replay;
    }
    Verdict v;
    v.passed = detected == trials && replayed == trials;
    v.detail = std::to_string(detected) + "/" + std::to_string(trials) + " corruptions detected, " +
               std::to_string(replayed) + " with replayable witnesses";
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::strcmp(argv[i], "--cli") == 0) cli_path = argv[++i];
        else if (std::strcmp(argv[i], "--data") == 0) data_dir = argv[++i];
    }
    if (cli_path.empty() || data_dir.empty()) {
        std::cerr << "usage: acceptance --cli <resid> --data <tests dir>\n";
        return 2;
    }

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"1 N5 four-frame tables (reuse bounds) match golden", criterion_n5_frame},
        {"2 residuated 5-chain tables match golden", criterion_chain5},
        {"3 cube between two 2-chains tables match golden", criterion_cube_split},
        {"4 N5 mining unsatisfiable; pruned search equals naive oracle", criterion_n5_unsat},
        {"5 soundness of every construction over the corpus", criterion_soundness},
        {"6 split chain n=2 equals four-frame; 4-chain equals empty frame", criterion_coherence},
        {"7 Kleene classification and its preservation", criterion_kleene},
        {"8 Boolean restriction law", criterion_boolean_restriction},
        {"9 single-cell fault injection detected with replayable witness", criterion_fault_injection},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        all = all && v.passed;
        std::cout << (v.passed ? "PASS " : "FAIL ") << name << " [" << v.detail << "]" << std::endl;
    }
    std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILURES") << std::endl;
    return all ? 0 : 1;
}
