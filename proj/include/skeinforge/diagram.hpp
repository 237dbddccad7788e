#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skeinforge/common.hpp"

namespace skeinforge {

// One PD crossing: arc ids listed counterclockwise.  In oriented diagrams
// slot 0 is the incoming under-strand arc and the under-strand runs
// slot0 -> slot2; the over-strand occupies slots 1 and 3.  In shadows the
// under diagonal is still {0,2} but there is no distinguished direction.
using Crossing = std::array<int, 4>;

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;  // k means sigma_k, -k means sigma_k^{-1}; |k| < strands
};

// Unoriented diagram: what the skein recursion operates on.
struct ShadowDiagram {
    std::vector<Crossing> crossings;
    long long free_loops = 0;

    bool empty() const { return crossings.empty() && free_loops == 0; }
    int strand_components() const;  // closed strands through crossings
    long long components() const { return strand_components() + free_loops; }
    bool operator==(const ShadowDiagram& o) const {
        return crossings == o.crossings && free_loops == o.free_loops;
    }
};

// Oriented diagram.  over_rev[c] is true when the over-strand runs from
// slot 3 to slot 1, which is the positive-crossing direction under the
// calibration that the closure of sigma_1 has sign +1.
struct Diagram {
    std::vector<Crossing> crossings;
    std::vector<bool> over_rev;
    long long free_loops = 0;

    std::map<int, int> successor() const;       // next arc along the orientation
    std::vector<std::vector<int>> components() const;  // arc cycles, no free loops
    long long component_count() const;           // cycles + free loops
    std::vector<int> crossing_signs() const;
    long long writhe() const;
    // Symmetric, zero diagonal; entry (p,q) is half the signed count of
    // crossings between components p and q.  Free loops come last.
    std::vector<std::vector<long long>> linking_matrix() const;
    ShadowDiagram shadow() const;
};

Diagram parse_pd(const std::string& text);
BraidWord parse_braid(const std::string& text);
Diagram parse_diagram_json(const std::string& text);
BraidWord parse_braid_json(const std::string& text);

Diagram braid_closure(const BraidWord& w);
Diagram mirror(const Diagram& d);
Diagram disjoint_union(const Diagram& a, const Diagram& b);

std::string diagram_to_json(const Diagram& d);

// --- shadow surgery -------------------------------------------------------

ShadowDiagram switch_crossing(const ShadowDiagram& s, int c);

enum class SmoothMode { A, B };  // A reconnects slots 0-1/2-3, B reconnects 0-3/1-2
ShadowDiagram smooth_crossing(const ShadowDiagram& s, int c, SmoothMode mode);

struct SimplifyResult {
    ShadowDiagram shadow;              // fixed point, free_loops == 0
    std::vector<int> kinks;            // twist handedness, +1 or -1, removal order
    long long removed_circles = 0;     // crossingless components swept up
};
SimplifyResult simplify(const ShadowDiagram& s);

// --- canonical form -------------------------------------------------------

// One strand passage through a crossing; slot is the entry slot in the
// shadow's current tuples.
struct Passage {
    int crossing;
    int slot;
};

struct TraversalPlan {
    // Per strand component in walk order: the starting arc and which of its
    // two occurrences (sorted by (crossing, slot)) the walk enters first.
    std::vector<std::pair<int, int>> starts;
};

struct CanonicalForm {
    std::string key;                  // relabel-invariant byte string
    TraversalPlan plan;               // the walk that realized the key
    std::vector<Passage> passages;    // concatenated component walks
    std::vector<int> component_of;    // component index per passage
};

CanonicalForm canonicalize(const ShadowDiagram& s);
std::string canonical_key(const ShadowDiagram& s);

// Re-run a stored plan on a shadow with identical arcs (used after crossing
// switches, which keep all arc ids and occurrences).
std::vector<Passage> replay_plan(const ShadowDiagram& s, const TraversalPlan& plan,
                                 std::vector<int>* component_of = nullptr);

}  // namespace skeinforge
