#include "skeinforge/classical.hpp"

namespace skeinforge {

namespace {

constexpr int kMaxComponents = 24;  // subset enumeration is 2^components

// lk(X, complement) for every subset bitmask, from the linking matrix
std::map<uint32_t, long long> sublink_linking(const Diagram& d) {
    auto m = d.linking_matrix();
    int n = static_cast<int>(m.size());
    if (n < 1) throw EngineError("empty link");
    if (n > kMaxComponents)
        throw EngineError("diagram has " + std::to_string(n) + " components; limit is " +
                          std::to_string(kMaxComponents));
    std::map<uint32_t, long long> out;
    uint32_t total = 1u << n;
    for (uint32_t mask = 0; mask < total; ++mask) {
        long long lk = 0;
        for (int p = 0; p < n; ++p) {
            if (!(mask & (1u << p))) continue;
            for (int q = 0; q < n; ++q) {
                if (mask & (1u << q)) continue;
                lk += m[static_cast<size_t>(p)][static_cast<size_t>(q)];
            }
        }
        out[mask] = lk;
    }
    return out;
}

}  // namespace

SublinkSumResult classical_invariant(const Diagram& d) {
    SublinkSumResult res;
    res.per_sublink = sublink_linking(d);
    CycNum sum(Int(0));
    CycNum i = CycNum::i();
    for (const auto& [mask, lk] : res.per_sublink) {
        (void)mask;
        sum += i.pow(lk);
    }
    res.value = CycNum::half() * sum;
    return res;
}

CycNum abstract_variant(const Diagram& d) {
    auto lks = sublink_linking(d);
    CycNum sum(Int(0));
    CycNum mi = -CycNum::i();
    for (const auto& [mask, lk] : lks) {
        (void)mask;
        sum += mi.pow(lk);
    }
    CycNum sign = (d.writhe() % 2 == 0) ? CycNum(Int(1)) : CycNum(Int(-1));
    return CycNum::half() * sign * sum;
}

ClassicalCheckReport verify_classical(const Diagram& d, SkeinContext& ctx) {
    ClassicalCheckReport rep;
    rep.engine = ctx.specialize_so8(d, FormName::wenzl);
    rep.classical = classical_invariant(d).value;
    rep.abstract = abstract_variant(d);
    rep.equal = (rep.engine == rep.classical);
    return rep;
}

}  // namespace skeinforge
