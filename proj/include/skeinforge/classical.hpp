#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "skeinforge/cyclo.hpp"
#include "skeinforge/diagram.hpp"
#include "skeinforge/skein.hpp"

namespace skeinforge {

// Closed-form invariant: half the sum of i^lk(X, L-X) over all subsets X of
// the component set, where i = zeta^4 and lk is the total linking number of
// the sublink with its complement.
struct SublinkSumResult {
    CycNum value;
    std::map<uint32_t, long long> per_sublink;  // bitmask -> lk(X, L-X)
};

SublinkSumResult classical_invariant(const Diagram& d);

// Abstract's variant: (1/2)(-1)^w(D) sum over subsets of (-i)^lk(X, L-X).
// Reported for comparison only; not writhe-stable, never used as ground
// truth.
CycNum abstract_variant(const Diagram& d);

struct ClassicalCheckReport {
    CycNum engine;     // wenzl specialization at the so8 point
    CycNum classical;  // sublink linking sum
    CycNum abstract;   // informational variant
    bool equal = false;
};

ClassicalCheckReport verify_classical(const Diagram& d,
                                      SkeinContext& ctx = SkeinContext::global());

}  // namespace skeinforge
