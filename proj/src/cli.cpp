#include "skeinforge/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "skeinforge/classical.hpp"
#include "skeinforge/corpus.hpp"
#include "skeinforge/fusion.hpp"
#include "skeinforge/skein.hpp"

namespace skeinforge::cli {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open input file");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Diagram load_diagram(const std::string& text, const std::string& format) {
    std::string fmt = format;
    if (fmt == "sniff") {
        size_t pos = text.find_first_not_of(" \t\r\n");
        if (pos == std::string::npos) throw ParseError("empty input");
        char c = text[pos];
        if (c == '{') {
            nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
            if (j.is_discarded()) throw ParseError("bad JSON input");
            fmt = j.contains("strands") ? "braid" : "pd";
            if (j.contains("strands")) return braid_closure(parse_braid_json(text));
            return parse_diagram_json(text);
        }
        if (c == 'B') fmt = "braid";
        else fmt = "pd";
    }
    if (fmt == "braid") {
        size_t pos = text.find_first_not_of(" \t\r\n");
        if (pos != std::string::npos && text[pos] == '{')
            return braid_closure(parse_braid_json(text));
        return braid_closure(parse_braid(text));
    }
    if (fmt == "pd") {
        size_t pos = text.find_first_not_of(" \t\r\n");
        if (pos != std::string::npos && text[pos] == '{') return parse_diagram_json(text);
        return parse_pd(text);
    }
    throw ParseError("unknown input format '" + format + "'");
}

int cmd_invariant(const std::string& input, const std::string& format, const std::string& form_s,
                  const std::string& mode, bool normalized, bool json, std::ostream& out) {
    Diagram d = load_diagram(read_input(input), format);
    FormName form = form_from_string(form_s);
    SkeinContext& ctx = SkeinContext::global();
    if (mode == "so8") {
        CycNum v = normalized ? ctx.normalized_so8(d, form)
                              : ctx.unnormalized_so8(d.shadow(), form);
        if (json)
            out << "{\"value\":" << v.to_json() << "}\n";
        else
            out << v.to_string() << "\n";
        return 0;
    }
    if (mode != "symbolic") throw ParseError("unknown mode '" + mode + "'");
    FracLaurent2 v = normalized ? ctx.normalized_symbolic(d, form)
                                : ctx.unnormalized_symbolic(d.shadow(), form);
    if (json)
        out << "{\"value\":" << v.to_json() << "}\n";
    else
        out << v.to_string() << "\n";
    return 0;
}

void print_classical_line(std::ostream& out, const std::string& tag,
                          const ClassicalCheckReport& rep) {
    out << tag << ": engine=" << rep.engine.to_string()
        << " classical=" << rep.classical.to_string()
        << " equal=" << (rep.equal ? "yes" : "no")
        << " abstract=" << rep.abstract.to_string() << " (informational)\n";
}

nlohmann::json classical_json(const ClassicalCheckReport& rep) {
    nlohmann::json j;
    j["engine"] = nlohmann::json::parse(rep.engine.to_json());
    j["classical"] = nlohmann::json::parse(rep.classical.to_json());
    j["equal"] = rep.equal;
    j["abstract_variant"] = nlohmann::json::parse(rep.abstract.to_json());
    return j;
}

int cmd_verify_classical(const std::string& input, const std::string& corpus_dir, bool json,
                         std::ostream& out) {
    SkeinContext& ctx = SkeinContext::global();
    bool all_equal = true;
    nlohmann::json jout = nlohmann::json::array();

    if (!input.empty()) {
        Diagram d = load_diagram(read_input(input), "sniff");
        ClassicalCheckReport rep = verify_classical(d, ctx);
        all_equal = rep.equal;
        if (json) {
            nlohmann::json e = classical_json(rep);
            e["input"] = input;
            jout.push_back(e);
        } else {
            print_classical_line(out, input, rep);
        }
    } else {
        auto entries = load_corpus_dir(corpus_dir);
        for (const auto& entry : entries) {
            for (size_t di = 0; di < entry.diagrams.size(); ++di) {
                std::string tag = entry.name + "[" + std::to_string(di) + "]";
                ClassicalCheckReport rep = verify_classical(entry.diagrams[di], ctx);
                if (!rep.equal) all_equal = false;
                if (json) {
                    nlohmann::json e = classical_json(rep);
                    e["input"] = tag;
                    jout.push_back(e);
                } else {
                    print_classical_line(out, tag, rep);
                }
                // pinned expected values participate in the verdict
                for (const auto& [key, want] : entry.expected) {
                    auto colon = key.find(':');
                    if (colon == std::string::npos || key.substr(colon + 1) != "so8") continue;
                    CycNum got =
                        ctx.specialize_so8(entry.diagrams[di], form_from_string(key.substr(0, colon)));
                    if (got != want) {
                        all_equal = false;
                        if (!json)
                            out << tag << ": expected " << key << "=" << want.to_string()
                                << " differs from computed " << got.to_string() << "\n";
                    }
                }
            }
        }
    }
    if (json) out << jout.dump(2) << "\n";
    if (!json) out << (all_equal ? "RESULT: all equal\n" : "RESULT: inequality found\n");
    return all_equal ? 0 : 1;
}

int cmd_fusion(int n, const std::string& check, bool json, std::ostream& out) {
    nlohmann::json jout;
    jout["n"] = n;
    bool all_ok = true;
    auto want = [&](const std::string& c) { return check == "all" || check == c; };

    FusionRing ring = build_metaplectic(n);

    if (want("associativity") || want("dims")) {
        FusionReport rep = verify_ring(ring);
        if (!rep.ok) all_ok = false;
        jout["ring"] = {{"ok", rep.ok}, {"detail", rep.detail}};
        if (!json)
            out << "ring axioms       : " << (rep.ok ? "pass" : "FAIL") << " (" << rep.detail
                << ")\n";
    }
    if (want("grading")) {
        GradingResult g = grading(ring);
        nlohmann::json cj = nlohmann::json::array();
        for (size_t c = 0; c < g.components.size(); ++c) {
            nlohmann::json comp;
            comp["name"] = g.component_names[c];
            comp["labels"] = nlohmann::json::array();
            for (int i : g.components[c])
                comp["labels"].push_back(ring.labels[static_cast<size_t>(i)]);
            cj.push_back(comp);
        }
        jout["grading"] = cj;
        if (!json) {
            out << "grading           : pass (";
            for (size_t c = 0; c < g.components.size(); ++c) {
                if (c) out << "; ";
                out << g.component_names[c] << " has " << g.components[c].size() << " labels";
            }
            out << ")\n";
        }
    }
    if (want("symmetric")) {
        SubRing s = symmetric_subring(ring);
        nlohmann::json sj;
        sj["dim"] = s.dim.str();
        sj["members"] = nlohmann::json::array();
        for (int i : s.members) sj["members"].push_back(ring.labels[static_cast<size_t>(i)]);
        jout["symmetric_subring"] = sj;
        if (!json) {
            out << "symmetric subring : pass (dim " << s.dim.str() << ", members";
            for (int i : s.members) out << " " << ring.labels[static_cast<size_t>(i)];
            out << ")\n";
        }
    }
    if (want("containment")) {
        AdjointContainmentReport rep = adjoint_containment_check(n);
        if (!rep.pass) all_ok = false;
        nlohmann::json tj;
        tj["pass"] = rep.pass;
        tj["centralizer_dim"] = rep.centralizer.dim.str();
        tj["witnesses"] = nlohmann::json::array();
        for (int wtn : rep.witnesses)
            tj["witnesses"].push_back(ring.labels[static_cast<size_t>(wtn)]);
        jout["adjoint_containment"] = tj;
        if (!json)
            out << "adjoint contained : " << (rep.pass ? "pass" : "FAIL")
                << " (centralizer dim " << rep.centralizer.dim.str() << ")\n";
    }
    if (want("numerology")) {
        if (check == "numerology" || n == 8) {
            NumerologyReport rep = center_numerology(n);
            jout["numerology"] = {{"dim_c", rep.dim_c},
                                  {"dim_center", rep.dim_center},
                                  {"group_order", rep.group_order},
                                  {"rank_c", rep.rank_c},
                                  {"asserted_center_rank", rep.asserted_center_rank},
                                  {"group", rep.group}};
            if (!json)
                out << "numerology        : dim(C)=" << rep.dim_c
                    << " dim(Z(C))=" << rep.dim_center << " rank(C)=" << rep.rank_c
                    << " asserted rank(Z(C))=" << rep.asserted_center_rank << " [" << rep.group
                    << "]\n";
        }
    }
    jout["ok"] = all_ok;
    if (json) out << jout.dump(2) << "\n";
    else out << (all_ok ? "RESULT: pass\n" : "RESULT: fail\n");
    return all_ok ? 0 : 1;
}

int cmd_corpus_run(const std::string& dir, uint64_t seed, int random_count, int max_crossings,
                   bool json, std::ostream& out) {
    SkeinContext& ctx = SkeinContext::global();
    auto entries = load_corpus_dir(dir);
    bool all_ok = true;
    nlohmann::json jout;
    nlohmann::json jentries = nlohmann::json::array();

    auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
    if (!json) {
        out << std::left << std::setw(24) << "entry" << std::setw(10) << "diagrams"
            << std::setw(11) << "classical" << std::setw(11) << "lickorish" << std::setw(14)
            << "substitution" << std::setw(14) << "independence" << "expected\n";
    }
    for (const auto& entry : entries) {
        EntryCheck ec = run_entry_checks(entry, ctx);
        if (!ec.all_ok()) all_ok = false;
        if (json) {
            nlohmann::json je;
            je["name"] = ec.name;
            je["diagrams"] = ec.diagrams;
            je["classical"] = ec.classical_ok;
            je["lickorish"] = ec.lickorish_ok;
            je["substitution"] = ec.substitution_ok;
            je["independence"] = ec.independence_ok;
            je["expected"] = ec.expected_ok;
            je["knot_triviality"] = ec.knot_trivial_ok;
            je["failures"] = ec.failures;
            jentries.push_back(je);
        } else {
            out << std::left << std::setw(24) << ec.name << std::setw(10) << ec.diagrams
                << std::setw(11) << mark(ec.classical_ok) << std::setw(11)
                << mark(ec.lickorish_ok) << std::setw(14) << mark(ec.substitution_ok)
                << std::setw(14) << mark(ec.independence_ok) << mark(ec.expected_ok) << "\n";
            for (const auto& f : ec.failures) out << "    ! " << f << "\n";
        }
    }
    int random_pass = 0;
    nlohmann::json jrandom = nlohmann::json::array();
    if (random_count > 0) {
        auto words = random_braids(seed, random_count, max_crossings);
        for (int i = 0; i < random_count; ++i) {
            RandomCheck rc = run_random_check(i, words[static_cast<size_t>(i)], ctx);
            if (rc.all_ok())
                ++random_pass;
            else {
                all_ok = false;
                if (!json)
                    out << "random[" << i << "] " << rc.braid << ": classical="
                        << mark(rc.classical_ok) << " lickorish=" << mark(rc.lickorish_ok)
                        << " substitution=" << mark(rc.substitution_ok) << "\n";
            }
            if (json) {
                nlohmann::json jr;
                jr["index"] = rc.index;
                jr["braid"] = rc.braid;
                jr["ok"] = rc.all_ok();
                jrandom.push_back(jr);
            }
        }
        if (!json)
            out << "random braids: " << random_pass << " of " << random_count
                << " pass (seed " << seed << ", max crossings " << max_crossings << ")\n";
    }
    if (json) {
        jout["entries"] = jentries;
        jout["random"] = jrandom;
        jout["seed"] = seed;
        jout["ok"] = all_ok;
        out << jout.dump(2) << "\n";
    } else {
        out << "convention: " << substitution_check(braid_closure(parse_braid("B 2: 1")), ctx)
                                     .convention
            << "\n";
        out << (all_ok ? "RESULT: PASS\n" : "RESULT: FAIL\n");
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Kauffman polynomial and metaplectic fusion toolkit"};
    app.require_subcommand(1);

    // invariant
    auto* inv = app.add_subcommand("invariant", "compute a Kauffman polynomial invariant");
    std::string inv_input, inv_format = "sniff", inv_form, inv_mode = "symbolic";
    bool inv_normalized = true, inv_json = false;
    inv->add_option("--input", inv_input, "input file or - for stdin")->required();
    inv->add_option("--format", inv_format, "pd|braid (default: sniff)");
    inv->add_option("--form", inv_form, "dubrovnik|kauffman|wenzl")->required();
    inv->add_option("--mode", inv_mode, "symbolic|so8");
    inv->add_flag("--normalized,!--unnormalized", inv_normalized,
                  "writhe-normalized value (default on)");
    inv->add_flag("--json", inv_json, "JSON output");

    // verify-classical
    auto* ver = app.add_subcommand(
        "verify-classical", "compare the wenzl so8 specialization with the sublink linking sum");
    std::string ver_input, ver_corpus;
    bool ver_json = false;
    ver->add_option("--input", ver_input, "single diagram input");
    ver->add_option("--corpus", ver_corpus, "corpus directory");
    ver->add_flag("--json", ver_json, "JSON output");

    // fusion
    auto* fus = app.add_subcommand("fusion", "metaplectic fusion-ring checks");
    int fus_n = 0;
    std::string fus_check = "all";
    bool fus_json = false;
    fus->add_option("--n", fus_n, "metaplectic parameter N")->required();
    fus->add_option("--check", fus_check,
                    "associativity|dims|grading|symmetric|containment|numerology|all");
    fus->add_flag("--json", fus_json, "JSON output");

    // corpus run
    auto* corpus = app.add_subcommand("corpus", "corpus operations");
    corpus->require_subcommand(1);
    auto* crun = corpus->add_subcommand("run", "run all checks over the corpus");
    std::string crun_dir = "corpus";
    uint64_t crun_seed = 7;
    int crun_random = 0, crun_max = 12;
    bool crun_json = false;
    crun->add_option("--dir", crun_dir, "corpus directory");
    crun->add_option("--seed", crun_seed, "random braid seed");
    crun->add_option("--random", crun_random, "number of random braid closures");
    crun->add_option("--max-crossings", crun_max, "maximum letters per random braid");
    crun->add_flag("--json", crun_json, "JSON output");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help() << "\n";
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (inv->parsed())
            return cmd_invariant(inv_input, inv_format, inv_form, inv_mode, inv_normalized,
                                 inv_json, out);
        if (ver->parsed()) {
            if (ver_input.empty() == ver_corpus.empty())
                throw ParseError("verify-classical needs exactly one of --input or --corpus");
            return cmd_verify_classical(ver_input, ver_corpus, ver_json, out);
        }
        if (fus->parsed()) return cmd_fusion(fus_n, fus_check, fus_json, out);
        if (corpus->parsed() && crun->parsed())
            return cmd_corpus_run(crun_dir, crun_seed, crun_random, crun_max, crun_json, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const EngineError& e) {
        err << "engine error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace skeinforge::cli
