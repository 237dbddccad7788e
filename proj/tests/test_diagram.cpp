#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "skeinforge/diagram.hpp"

using namespace skeinforge;

namespace {

const char* kTrefoilPD = "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\nL 0\n";

BraidWord braid(int strands, std::vector<int> letters) {
    return BraidWord{strands, std::move(letters)};
}

// independent oracle: cycle count of the permutation a braid induces
int permutation_cycles(const BraidWord& w) {
    std::vector<int> perm(static_cast<size_t>(w.strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int k : w.letters) {
        int i = std::abs(k) - 1;
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(i) + 1]);
    }
    std::vector<bool> seen(static_cast<size_t>(w.strands), false);
    int cycles = 0;
    for (int i = 0; i < w.strands; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        ++cycles;
        int j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            j = perm[static_cast<size_t>(j)];
        }
    }
    return cycles;
}

// scrambles a shadow by arc relabeling, crossing reordering, and tuple
// rotation by two slots
ShadowDiagram scramble(const ShadowDiagram& s, std::mt19937_64& rng) {
    std::set<int> arc_set;
    for (const auto& t : s.crossings)
        for (int x : t) arc_set.insert(x);
    std::vector<int> arcs(arc_set.begin(), arc_set.end());
    std::vector<int> target(arcs.size());
    std::iota(target.begin(), target.end(), 0);
    std::shuffle(target.begin(), target.end(), rng);
    std::map<int, int> rel;
    for (size_t i = 0; i < arcs.size(); ++i)
        rel[arcs[i]] = 1 + static_cast<int>(target[i]) * 3 + static_cast<int>(rng() % 3);
    // keep the relabeling injective
    std::set<int> used;
    for (auto& [from, to] : rel) {
        (void)from;
        while (used.count(to)) ++to;
        used.insert(to);
    }
    ShadowDiagram out = s;
    for (auto& t : out.crossings)
        for (int& x : t) x = rel[x];
    std::shuffle(out.crossings.begin(), out.crossings.end(), rng);
    for (auto& t : out.crossings)
        if (rng() & 1) t = Crossing{t[2], t[3], t[0], t[1]};
    return out;
}

}  // namespace

TEST_CASE("parse_pd basics") {
    Diagram unknot = parse_pd("L 1\n");
    CHECK(unknot.crossings.empty());
    CHECK(unknot.free_loops == 1);
    CHECK(unknot.component_count() == 1);

    Diagram kink = parse_pd("X 1 2 2 1\nL 0\n");
    CHECK(kink.crossings.size() == 1);
    CHECK(kink.component_count() == 1);

    Diagram trefoil = parse_pd(kTrefoilPD);
    CHECK(trefoil.crossings.size() == 3);
    CHECK(trefoil.component_count() == 1);
    // cross-check against the braid closure of sigma_1^3
    Diagram closure = braid_closure(braid(2, {1, 1, 1}));
    CHECK(closure.component_count() == trefoil.component_count());
}

TEST_CASE("parse_pd errors") {
    CHECK_THROWS_AS(parse_pd(""), ParseError);
    CHECK_THROWS_AS(parse_pd("X 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_pd("X 1 2 3 4\n"), ParseError);  // arcs appear once
    CHECK_THROWS_AS(parse_pd("Y 1 2 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_pd("X 1 1 2 2\nX 3 3 4 4\nL 0\nX 1 1 2 2\n"), ParseError);
    // arc appearing twice as outgoing under strand cannot be oriented
    CHECK_THROWS_AS(parse_pd("X 1 2 3 4\nX 1 4 3 2\n"), ParseError);
}

TEST_CASE("parse_braid") {
    BraidWord w = parse_braid("B 3: 1 -2 1 -2\n");
    CHECK(w.strands == 3);
    CHECK(w.letters == std::vector<int>{1, -2, 1, -2});
    CHECK_THROWS_AS(parse_braid("B 2: 2\n"), ParseError);
    CHECK_THROWS_AS(parse_braid("B 2 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_braid("2: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_braid("B 2: 0\n"), ParseError);
}

TEST_CASE("json round trips") {
    Diagram d = braid_closure(braid(2, {1, 1}));
    Diagram d2 = parse_diagram_json(diagram_to_json(d));
    CHECK(d2.crossings == d.crossings);
    CHECK(d2.over_rev == d.over_rev);
    BraidWord w = parse_braid_json("{\"strands\":3,\"word\":[1,-2]}");
    CHECK(w.strands == 3);
    CHECK(w.letters == std::vector<int>{1, -2});
}

TEST_CASE("braid closures") {
    Diagram empty1 = braid_closure(braid(1, {}));
    CHECK(empty1.crossings.empty());
    CHECK(empty1.free_loops == 1);

    Diagram hopf = braid_closure(braid(2, {1, 1}));
    CHECK(hopf.crossings.size() == 2);
    CHECK(hopf.component_count() == 2);

    Diagram fig8 = braid_closure(braid(3, {1, -2, 1, -2}));
    CHECK(fig8.component_count() == 1);
    CHECK(fig8.crossings.size() == 4);
}

TEST_CASE("crossing signs are calibrated on sigma_1") {
    CHECK(braid_closure(braid(2, {1})).crossing_signs() == std::vector<int>{1});
    CHECK(braid_closure(braid(2, {-1})).crossing_signs() == std::vector<int>{-1});
    CHECK(braid_closure(braid(2, {1, 1, 1})).crossing_signs() == std::vector<int>{1, 1, 1});
}

TEST_CASE("pd parser agrees with braid-generated signs") {
    for (auto letters : {std::vector<int>{1, 1}, std::vector<int>{1, 1, 1},
                         std::vector<int>{-1, -1, -1}, std::vector<int>{1, -2, 1, -2}}) {
        int strands = 2;
        for (int k : letters) strands = std::max(strands, std::abs(k) + 1);
        Diagram d = braid_closure(braid(strands, letters));
        Diagram reparsed = parse_diagram_json(diagram_to_json(d));
        CHECK(reparsed.writhe() == d.writhe());
        CHECK(reparsed.over_rev == d.over_rev);
    }
}

TEST_CASE("writhe") {
    CHECK(parse_pd("L 1\n").writhe() == 0);
    CHECK(braid_closure(braid(2, {1, 1})).writhe() == 2);
    CHECK(braid_closure(braid(3, {1, -2, 1, -2})).writhe() == 0);
    CHECK(parse_pd(kTrefoilPD).writhe() == -3);  // table form is the left-handed one
}

TEST_CASE("linking matrix") {
    Diagram unlink = braid_closure(braid(2, {}));
    CHECK(unlink.linking_matrix() ==
          std::vector<std::vector<long long>>{{0, 0}, {0, 0}});

    auto hopf = braid_closure(braid(2, {1, 1})).linking_matrix();
    CHECK(hopf[0][1] == 1);
    CHECK(hopf[1][0] == 1);
    CHECK(hopf[0][0] == 0);

    auto solomon = braid_closure(braid(2, {1, 1, 1, 1})).linking_matrix();
    CHECK(solomon[0][1] == 2);
}

TEST_CASE("switch crossing") {
    ShadowDiagram kink = braid_closure(braid(2, {1})).shadow();
    ShadowDiagram neg = switch_crossing(kink, 0);
    CHECK(simplify(neg).kinks == std::vector<int>{-1});
    CHECK(switch_crossing(neg, 0) == kink);  // involution up to rotation
    ShadowDiagram hopf = braid_closure(braid(2, {1, 1})).shadow();
    ShadowDiagram switched = switch_crossing(hopf, 0);
    SimplifyResult sim = simplify(switched);
    CHECK(sim.shadow.crossings.empty());
    CHECK(sim.removed_circles == 2);  // unlink
    CHECK_THROWS_AS(switch_crossing(hopf, 5), EngineError);
}

TEST_CASE("smooth crossing") {
    ShadowDiagram kink = braid_closure(braid(2, {1})).shadow();
    ShadowDiagram sa = smooth_crossing(kink, 0, SmoothMode::A);
    ShadowDiagram sb = smooth_crossing(kink, 0, SmoothMode::B);
    long long a_loops = sa.free_loops, b_loops = sb.free_loops;
    CHECK(sa.crossings.empty());
    CHECK(sb.crossings.empty());
    CHECK(((a_loops == 1 && b_loops == 2) || (a_loops == 2 && b_loops == 1)));

    ShadowDiagram hopf = braid_closure(braid(2, {1, 1})).shadow();
    for (SmoothMode m : {SmoothMode::A, SmoothMode::B}) {
        ShadowDiagram sm = smooth_crossing(hopf, 0, m);
        CHECK(sm.crossings.size() == 1);
        // one-crossing kink
        SimplifyResult sim = simplify(sm);
        CHECK(sim.shadow.crossings.empty());
        CHECK(sim.kinks.size() == 1);
    }
    CHECK_THROWS_AS(smooth_crossing(hopf, 7, SmoothMode::A), EngineError);
}

TEST_CASE("simplify") {
    // positive kink
    SimplifyResult pos = simplify(braid_closure(braid(2, {1})).shadow());
    CHECK(pos.shadow.empty());
    CHECK(pos.kinks == std::vector<int>{1});
    CHECK(pos.removed_circles == 1);
    // R2 pair
    SimplifyResult r2 = simplify(braid_closure(braid(2, {1, -1})).shadow());
    CHECK(r2.shadow.empty());
    CHECK(r2.kinks.empty());
    CHECK(r2.removed_circles == 2);
    // Hopf has nothing to simplify
    ShadowDiagram hopf = braid_closure(braid(2, {1, 1})).shadow();
    SimplifyResult h = simplify(hopf);
    CHECK(h.shadow.crossings.size() == 2);
    CHECK(h.kinks.empty());
    CHECK(h.removed_circles == 0);
    // two same-handed curls are not a Reidemeister-2 pair
    SimplifyResult curls = simplify(braid_closure(braid(3, {1, 2})).shadow());
    CHECK(curls.kinks == std::vector<int>{1, 1});
    CHECK(curls.removed_circles == 1);
}

TEST_CASE("simplify keeps components and never adds crossings") {
    std::mt19937_64 rng(555);
    for (int t = 0; t < 120; ++t) {
        int strands = 2 + static_cast<int>(rng() % 3);
        int len = 1 + static_cast<int>(rng() % 10);
        std::vector<int> letters;
        for (int i = 0; i < len; ++i) {
            int k = 1 + static_cast<int>(rng() % static_cast<uint64_t>(strands - 1));
            letters.push_back((rng() & 1) ? -k : k);
        }
        ShadowDiagram s = braid_closure(braid(strands, letters)).shadow();
        SimplifyResult sim = simplify(s);
        CHECK(sim.shadow.crossings.size() <= s.crossings.size());
        CHECK(sim.shadow.components() + sim.removed_circles == s.components());
    }
}

TEST_CASE("components of braid closures match permutation cycles, 200 words") {
    std::mt19937_64 rng(909);
    for (int t = 0; t < 200; ++t) {
        int strands = 2 + static_cast<int>(rng() % 3);
        int len = static_cast<int>(rng() % 12);
        std::vector<int> letters;
        for (int i = 0; i < len; ++i) {
            int k = 1 + static_cast<int>(rng() % static_cast<uint64_t>(strands - 1));
            letters.push_back((rng() & 1) ? -k : k);
        }
        BraidWord w = braid(strands, letters);
        CHECK(braid_closure(w).component_count() == permutation_cycles(w));
    }
}

TEST_CASE("mirror and disjoint union") {
    Diagram tre = braid_closure(braid(2, {1, 1, 1}));
    CHECK(mirror(tre).writhe() == -3);
    CHECK(mirror(mirror(tre)).crossings == tre.crossings);
    CHECK(mirror(mirror(tre)).over_rev == tre.over_rev);

    Diagram unknot = parse_pd("L 1\n");
    Diagram hopf = braid_closure(braid(2, {1, 1}));
    CHECK(disjoint_union(unknot, hopf).component_count() == 3);

    auto lm = hopf.linking_matrix();
    auto lmm = mirror(hopf).linking_matrix();
    CHECK(lmm[0][1] == -lm[0][1]);
}

TEST_CASE("mirror/linking properties on random braids") {
    std::mt19937_64 rng(31007);
    for (int t = 0; t < 60; ++t) {
        int strands = 2 + static_cast<int>(rng() % 3);
        int len = 1 + static_cast<int>(rng() % 10);
        std::vector<int> letters;
        for (int i = 0; i < len; ++i) {
            int k = 1 + static_cast<int>(rng() % static_cast<uint64_t>(strands - 1));
            letters.push_back((rng() & 1) ? -k : k);
        }
        Diagram d = braid_closure(braid(strands, letters));
        Diagram m = mirror(d);
        CHECK(m.writhe() == -d.writhe());
        auto lm = d.linking_matrix();
        auto lmm = m.linking_matrix();
        for (size_t i = 0; i < lm.size(); ++i)
            for (size_t j = 0; j < lm.size(); ++j) {
                CHECK(lm[i][j] == lm[j][i]);
                CHECK(lmm[i][j] == -lm[i][j]);
                if (i == j) CHECK(lm[i][j] == 0);
            }
    }
}

TEST_CASE("canonical key invariance, 100 scrambles per diagram") {
    std::mt19937_64 rng(112233);
    std::vector<ShadowDiagram> shadows = {
        braid_closure(braid(2, {1, 1, 1})).shadow(),
        braid_closure(braid(2, {1, 1})).shadow(),
        braid_closure(braid(3, {1, -2, 1, -2})).shadow(),
        braid_closure(braid(3, {1, -2, 1, -2, 1})).shadow(),
        braid_closure(braid(3, {1, 2, 1, 2, -1})).shadow(),
    };
    for (const auto& s : shadows) {
        std::string key = canonical_key(s);
        for (int t = 0; t < 100; ++t) CHECK(canonical_key(scramble(s, rng)) == key);
    }
}

TEST_CASE("canonical key separates different shadows") {
    ShadowDiagram tre = braid_closure(braid(2, {1, 1, 1})).shadow();
    CHECK(canonical_key(tre) != canonical_key(switch_crossing(tre, 0)));
    ShadowDiagram empty1{{}, 1};
    ShadowDiagram empty2{{}, 2};
    CHECK(canonical_key(empty1) == "L1");
    CHECK(canonical_key(empty2) == "L2");
    CHECK(canonical_key(empty1) != canonical_key(empty2));
}
