#include "skeinforge/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace skeinforge {

namespace {

Diagram diagram_from_spec(const nlohmann::json& spec, const std::string& filename) {
    if (!spec.is_object() || !spec.contains("format") || !spec.contains("text"))
        throw ParseError(filename + ": each diagram needs 'format' and 'text'");
    std::string format = spec["format"].get<std::string>();
    std::string text = spec["text"].get<std::string>();
    if (format == "braid") return braid_closure(parse_braid(text));
    if (format == "pd") return parse_pd(text);
    throw ParseError(filename + ": unknown diagram format '" + format + "'");
}

}  // namespace

CorpusEntry parse_corpus_entry(const std::string& json_text, const std::string& filename) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw ParseError(filename + ": bad JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("name") || !j.contains("diagrams"))
        throw ParseError(filename + ": corpus entry needs 'name' and 'diagrams'");
    CorpusEntry entry;
    entry.source_file = filename;
    entry.name = j["name"].get<std::string>();
    for (const auto& spec : j["diagrams"]) entry.diagrams.push_back(diagram_from_spec(spec, filename));
    if (entry.diagrams.empty()) throw ParseError(filename + ": entry has no diagrams");
    if (j.contains("expected")) {
        for (auto it = j["expected"].begin(); it != j["expected"].end(); ++it) {
            const auto& v = it.value();
            if (!v.is_object() || !v.contains("num") || !v.contains("den"))
                throw ParseError(filename + ": expected values must be {num, den} objects");
            CycInt n;
            const auto& num = v["num"];
            if (!num.is_array() || num.size() != 8)
                throw ParseError(filename + ": expected 'num' must have 8 entries");
            for (int i = 0; i < 8; ++i) n[i] = Int(num[static_cast<size_t>(i)].get<long long>());
            entry.expected[it.key()] = CycNum(n, Int(v["den"].get<long long>()));
        }
    }
    return entry;
}

CorpusEntry load_corpus_entry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open corpus file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_corpus_entry(ss.str(), path);
}

std::vector<CorpusEntry> load_corpus_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw ParseError(dir + ": not a directory");
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json")
            files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ParseError(dir + ": no corpus entries (*.json) found");
    std::vector<CorpusEntry> entries;
    for (const auto& f : files) entries.push_back(load_corpus_entry(f));
    std::sort(entries.begin(), entries.end(),
              [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
    return entries;
}

std::vector<BraidWord> random_braids(uint64_t seed, int count, int max_crossings) {
    std::mt19937_64 rng(seed);
    std::vector<BraidWord> out;
    for (int i = 0; i < count; ++i) {
        BraidWord w;
        w.strands = 2 + static_cast<int>(rng() % 3);
        int len = 1 + static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, max_crossings)));
        for (int j = 0; j < len; ++j) {
            int k = 1 + static_cast<int>(rng() % static_cast<uint64_t>(w.strands - 1));
            bool neg = rng() & 1;
            w.letters.push_back(neg ? -k : k);
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::string braid_to_text(const BraidWord& w) {
    std::ostringstream os;
    os << "B " << w.strands << ":";
    for (int k : w.letters) os << " " << k;
    return os.str();
}

EntryCheck run_entry_checks(const CorpusEntry& entry, SkeinContext& ctx) {
    EntryCheck res;
    res.name = entry.name;
    res.diagrams = entry.diagrams.size();

    std::vector<FracLaurent2> sym_values[3];
    for (size_t di = 0; di < entry.diagrams.size(); ++di) {
        const Diagram& d = entry.diagrams[di];
        std::string tag = entry.name + "[" + std::to_string(di) + "]";

        ClassicalCheckReport rep = verify_classical(d, ctx);
        if (!rep.equal) {
            res.classical_ok = false;
            res.failures.push_back(tag + ": engine " + rep.engine.to_string() +
                                   " != classical " + rep.classical.to_string());
        }
        if (d.component_count() == 1 && rep.engine != CycNum(Int(1))) {
            res.knot_trivial_ok = false;
            res.failures.push_back(tag + ": knot value " + rep.engine.to_string() + " != 1");
        }
        LickorishReport lick = lickorish_check(d, ctx);
        if (!lick.equal) {
            res.lickorish_ok = false;
            res.failures.push_back(tag + ": lickorish " + lick.lhs.to_string() +
                                   " != " + lick.rhs.to_string());
        }
        SubstitutionReport sub = substitution_check(d, ctx);
        if (!sub.equal) {
            res.substitution_ok = false;
            res.failures.push_back(tag + ": substitution " + sub.wenzl.to_string() +
                                   " != " + sub.dubrovnik.to_string());
        }
        for (FormName f :
             {FormName::semi_oriented, FormName::wenzl, FormName::dubrovnik})
            sym_values[static_cast<size_t>(f)].push_back(ctx.normalized_symbolic(d, f));

        // pinned values
        for (const auto& [key, want] : entry.expected) {
            auto colon = key.find(':');
            if (colon == std::string::npos || key.substr(colon + 1) != "so8") continue;
            FormName f = form_from_string(key.substr(0, colon));
            CycNum got = ctx.specialize_so8(d, f);
            if (got != want) {
                res.expected_ok = false;
                res.failures.push_back(tag + ": expected " + key + " = " + want.to_string() +
                                       ", got " + got.to_string());
            }
        }
    }
    for (size_t f = 0; f < 3; ++f) {
        for (size_t di = 1; di < sym_values[f].size(); ++di) {
            if (!(sym_values[f][di] == sym_values[f][0])) {
                res.independence_ok = false;
                res.failures.push_back(entry.name + ": diagram " + std::to_string(di) +
                                       " disagrees symbolically (" +
                                       form_to_string(static_cast<FormName>(f)) + ")");
            }
        }
    }
    return res;
}

RandomCheck run_random_check(int index, const BraidWord& w, SkeinContext& ctx) {
    RandomCheck res;
    res.index = index;
    res.braid = braid_to_text(w);
    Diagram d = braid_closure(w);
    ClassicalCheckReport rep = verify_classical(d, ctx);
    res.classical_ok = rep.equal;
    if (d.component_count() == 1) res.knot_trivial_ok = (rep.engine == CycNum(Int(1)));
    res.lickorish_ok = lickorish_check(d, ctx).equal;
    res.substitution_ok = substitution_check(d, ctx).equal;
    return res;
}

}  // namespace skeinforge
