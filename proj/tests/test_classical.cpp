#include "doctest.h"
#include "skeinforge/classical.hpp"

using namespace skeinforge;

namespace {

Diagram closure(int strands, std::vector<int> letters) {
    return braid_closure(BraidWord{strands, std::move(letters)});
}

}  // namespace

TEST_CASE("classical invariant on the named links") {
    CycNum one(Int(1));
    CycNum i = CycNum::i();
    // unknot: subsets {} and {1} both contribute i^0
    CHECK(classical_invariant(parse_pd("L 1\n")).value == one);
    // hopf with lk +1: (1 + i + i + 1)/2
    CHECK(classical_invariant(closure(2, {1, 1})).value == one + i);
    // borromean rings: all pairwise linking zero, 8 subsets
    CHECK(classical_invariant(closure(3, {1, -2, 1, -2, 1, -2})).value == CycNum(Int(4)));
    // sigma_1^4 has lk 2: (1 + i^2 + i^2 + 1)/2 = 0
    CHECK(classical_invariant(closure(2, {1, 1, 1, 1})).value == CycNum(Int(0)));
}

TEST_CASE("per-sublink map and complement symmetry") {
    SublinkSumResult res = classical_invariant(closure(2, {1, 1, 1, 1}));
    REQUIRE(res.per_sublink.size() == 4);
    CHECK(res.per_sublink.at(0) == 0);
    CHECK(res.per_sublink.at(1) == 2);
    CHECK(res.per_sublink.at(2) == 2);
    CHECK(res.per_sublink.at(3) == 0);
    // complement symmetry on a 3-component link
    SublinkSumResult borr = classical_invariant(closure(3, {1, -2, 1, -2, 1, -2}));
    uint32_t full = (1u << 3) - 1;
    for (const auto& [mask, lk] : borr.per_sublink)
        CHECK(lk == borr.per_sublink.at(full ^ mask));
}

TEST_CASE("value is in half the Gaussian integers") {
    for (const Diagram& d :
         {closure(2, {1, 1}), closure(2, {1, 1, 1}), closure(3, {1, -2, 1, -2, 1}),
          closure(3, {1, 1, 2, 2})}) {
        SublinkSumResult res = classical_invariant(d);
        CHECK((res.value.den() == 1 || res.value.den() == 2));
        for (int j = 0; j < 8; ++j)
            if (j != 0 && j != 4) CHECK(res.value.num()[j] == 0);
        // doubling lands in Z[i]
        CycNum doubled = res.value + res.value;
        CHECK(doubled.den() == 1);
    }
}

TEST_CASE("classical invariant sees only the linking matrix") {
    // whitehead link has linking number zero, like the 2-unlink
    CycNum unlink2 = classical_invariant(closure(2, {})).value;
    CycNum white = classical_invariant(closure(3, {1, -2, 1, -2, 1})).value;
    CHECK(unlink2 == CycNum(Int(2)));
    CHECK(white == unlink2);
}

TEST_CASE("abstract variant") {
    CycNum one(Int(1));
    CycNum i = CycNum::i();
    CHECK(abstract_variant(parse_pd("L 1\n")) == one);
    // hopf from sigma_1^2: w = 2, lk = 1: (1 + (-i) + (-i) + 1)/2
    CHECK(abstract_variant(closure(2, {1, 1})) == one - i);
    // positive kink unknot: w = 1 flips the sign; not a link invariant
    CHECK(abstract_variant(closure(2, {1})) == -one);
}

TEST_CASE("empty link and component guard") {
    Diagram empty;
    CHECK_THROWS_AS(classical_invariant(empty), EngineError);
    Diagram many;
    many.free_loops = 25;
    CHECK_THROWS_AS(classical_invariant(many), EngineError);
}

TEST_CASE("split unions multiply by the circle value") {
    SkeinContext ctx(1000000);
    Diagram unknot = parse_pd("L 1\n");
    Diagram hopf = closure(2, {1, 1});
    Diagram split = disjoint_union(unknot, hopf);
    CycNum two_plus_2i = CycNum(Int(2)) + CycNum::i() + CycNum::i();
    CHECK(classical_invariant(split).value == two_plus_2i);
    auto rep = verify_classical(split, ctx);
    CHECK(rep.equal);
    CHECK(rep.engine == two_plus_2i);
}

TEST_CASE("verify_classical report") {
    SkeinContext ctx(1000000);
    auto rep = verify_classical(parse_pd("L 1\n"), ctx);
    CHECK(rep.equal);
    CHECK(rep.engine == CycNum(Int(1)));
    CHECK(rep.classical == CycNum(Int(1)));
    CHECK(verify_classical(closure(2, {1, 1}), ctx).equal);
    CHECK(verify_classical(closure(3, {1, -2, 1, -2, 1}), ctx).equal);
    // every knot evaluates to 1: half of (i^0 + i^0)
    for (auto letters : {std::vector<int>{1, 1, 1}, std::vector<int>{-1, -1, -1}}) {
        auto r = verify_classical(closure(2, letters), ctx);
        CHECK(r.equal);
        CHECK(r.engine == CycNum(Int(1)));
    }
}
