#pragma once

#include <map>
#include <string>
#include <vector>

#include "skeinforge/classical.hpp"
#include "skeinforge/diagram.hpp"
#include "skeinforge/skein.hpp"

namespace skeinforge {

struct CorpusEntry {
    std::string name;
    std::vector<Diagram> diagrams;                // >= 1 inputs for the same link
    std::map<std::string, CycNum> expected;       // "form:mode" -> value (so8 only)
    std::string source_file;
};

CorpusEntry parse_corpus_entry(const std::string& json_text, const std::string& filename = "");
CorpusEntry load_corpus_entry(const std::string& path);
// All *.json entries in the directory, sorted by name.
std::vector<CorpusEntry> load_corpus_dir(const std::string& dir);

// Seeded random braid words: 2..4 strands, 1..max_crossings letters drawn
// uniformly over the generators and their inverses.  Byte-stable across
// platforms (mt19937_64 with modular draws).
std::vector<BraidWord> random_braids(uint64_t seed, int count, int max_crossings);

std::string braid_to_text(const BraidWord& w);

struct EntryCheck {
    std::string name;
    size_t diagrams = 0;
    bool classical_ok = true;      // engine equals sublink sum on every diagram
    bool lickorish_ok = true;
    bool substitution_ok = true;
    bool independence_ok = true;   // identical symbolic invariants across diagrams
    bool expected_ok = true;       // matches any pinned values
    bool knot_trivial_ok = true;   // 1-component diagrams evaluate to 1
    std::vector<std::string> failures;

    bool all_ok() const {
        return classical_ok && lickorish_ok && substitution_ok && independence_ok &&
               expected_ok && knot_trivial_ok;
    }
};

EntryCheck run_entry_checks(const CorpusEntry& entry,
                            SkeinContext& ctx = SkeinContext::global());

struct RandomCheck {
    int index = 0;
    std::string braid;
    bool classical_ok = true;
    bool lickorish_ok = true;
    bool substitution_ok = true;
    bool knot_trivial_ok = true;
    bool all_ok() const {
        return classical_ok && lickorish_ok && substitution_ok && knot_trivial_ok;
    }
};

RandomCheck run_random_check(int index, const BraidWord& w,
                             SkeinContext& ctx = SkeinContext::global());

}  // namespace skeinforge
