#include "skeinforge/skein.hpp"

#include <cstdlib>
#include <map>

namespace skeinforge {

FormName form_from_string(const std::string& name) {
    if (name == "semi_oriented" || name == "kauffman" || name == "semi-oriented")
        return FormName::semi_oriented;
    if (name == "wenzl") return FormName::wenzl;
    if (name == "dubrovnik") return FormName::dubrovnik;
    throw ParseError("unknown skein form '" + name + "'");
}

std::string form_to_string(FormName f) {
    switch (f) {
        case FormName::semi_oriented: return "semi_oriented";
        case FormName::wenzl: return "wenzl";
        case FormName::dubrovnik: return "dubrovnik";
    }
    return "?";
}

SkeinForm make_form(FormName name) {
    SkeinForm f;
    f.name = name;
    switch (name) {
        case FormName::semi_oriented: {
            f.vars = {"a", "z"};
            f.switch_sign = -1;
            f.smooth_sign = 1;
            f.factor = FracLaurent2(Laurent2::monomial(f.vars, 0, 1));
            f.kink_pos = FracLaurent2(Laurent2::monomial(f.vars, 1, 0));
            f.kink_neg = FracLaurent2(Laurent2::monomial(f.vars, -1, 0));
            Laurent2 delta(f.vars);
            delta.set_term(1, -1, Int(1));
            delta.set_term(-1, -1, Int(1));
            delta.set_term(0, 0, Int(-1));
            f.loop_value = FracLaurent2(std::move(delta));
            f.norm_base = Laurent2::monomial(f.vars, 1, 0);
            break;
        }
        case FormName::dubrovnik: {
            f.vars = {"alpha", "omega"};
            f.switch_sign = 1;
            f.smooth_sign = -1;
            f.factor = FracLaurent2(Laurent2::monomial(f.vars, 0, 1));
            f.kink_pos = FracLaurent2(Laurent2::monomial(f.vars, 1, 0));
            f.kink_neg = FracLaurent2(Laurent2::monomial(f.vars, -1, 0));
            Laurent2 delta(f.vars);
            delta.set_term(1, -1, Int(1));
            delta.set_term(-1, -1, Int(-1));
            delta.set_term(0, 0, Int(1));
            f.loop_value = FracLaurent2(std::move(delta));
            f.norm_base = Laurent2::monomial(f.vars, 1, 0);
            break;
        }
        case FormName::wenzl: {
            f.vars = {"r", "q"};
            f.switch_sign = 1;
            f.smooth_sign = -1;
            Laurent2 qdiff(f.vars);
            qdiff.set_term(0, 1, Int(1));
            qdiff.set_term(0, -1, Int(-1));
            f.factor = FracLaurent2(qdiff);
            f.kink_pos = FracLaurent2(Laurent2::monomial(f.vars, 1, 0));
            f.kink_neg = FracLaurent2(Laurent2::monomial(f.vars, -1, 0));
            Laurent2 rdiff(f.vars);
            rdiff.set_term(1, 0, Int(1));
            rdiff.set_term(-1, 0, Int(-1));
            f.loop_value = FracLaurent2(qdiff + rdiff, qdiff);
            f.norm_base = Laurent2::monomial(f.vars, 1, 0);
            break;
        }
    }
    return f;
}

SkeinForm make_form(const std::string& name) { return make_form(form_from_string(name)); }

std::pair<CycNum, CycNum> so8_point(FormName f) {
    CycNum q = CycNum::zeta_pow(1);
    switch (f) {
        case FormName::wenzl:
            // r = -q^-1 = zeta^7
            return {CycNum::zeta_pow(7), q};
        case FormName::semi_oriented:
            // a = -q^-5 = zeta^3, z = q^5 + q^-5 = zeta^5 - zeta^3
            return {CycNum::zeta_pow(3), CycNum::zeta_pow(5) - CycNum::zeta_pow(3)};
        case FormName::dubrovnik:
            // alpha = r = zeta^7, omega = q - q^-1 = zeta + zeta^7
            return {CycNum::zeta_pow(7), CycNum::zeta_pow(1) + CycNum::zeta_pow(7)};
    }
    throw ParseError("unknown form");
}

namespace {

template <class V>
struct FormConstants {
    V one;
    V factor, kink_pos, kink_neg, delta;
    int switch_sign, smooth_sign;
};

FormConstants<FracLaurent2> symbolic_constants(FormName name) {
    SkeinForm f = make_form(name);
    FormConstants<FracLaurent2> k;
    k.one = FracLaurent2(Laurent2::constant(f.vars, Int(1)));
    k.factor = f.factor;
    k.kink_pos = f.kink_pos;
    k.kink_neg = f.kink_neg;
    k.delta = f.loop_value;
    k.switch_sign = f.switch_sign;
    k.smooth_sign = f.smooth_sign;
    return k;
}

FormConstants<CycNum> so8_form_constants(FormName name) {
    SkeinForm f = make_form(name);
    auto [x, y] = so8_point(name);
    FormConstants<CycNum> k;
    k.one = CycNum(Int(1));
    k.factor = f.factor.evaluate(x, y);
    k.kink_pos = f.kink_pos.evaluate(x, y);
    k.kink_neg = f.kink_neg.evaluate(x, y);
    k.delta = f.loop_value.evaluate(x, y);
    k.switch_sign = f.switch_sign;
    k.smooth_sign = f.smooth_sign;
    return k;
}

template <class V>
V vpow(const V& base, long long e, const V& one) {
    V r = one;
    V b = base;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

template <class V>
class Engine {
public:
    Engine(FormConstants<V> k, MemoTable<V>& memo) : k_(std::move(k)), memo_(memo) {}

    V eval(const ShadowDiagram& s) {
        if (s.empty()) throw EngineError("empty link has no skein value");
        SimplifyResult sim = simplify(s);
        V factor = k_.one;
        for (int h : sim.kinks) factor = factor * (h > 0 ? k_.kink_pos : k_.kink_neg);
        if (sim.shadow.crossings.empty())
            return factor * vpow(k_.delta, sim.removed_circles - 1, k_.one);
        V core = eval_core(sim.shadow, nullptr, 0);
        return factor * vpow(k_.delta, sim.removed_circles, k_.one) * core;
    }

private:
    // inherited != nullptr keeps the parent's traversal through a chain of
    // crossing switches; switches change no arcs, so the walk replays and
    // each switch pushes the first under-first-visit strictly later.  A
    // chain longer than the crossing count means the walk was not stable,
    // which only happens for shadows that are not planar.
    V eval_core(const ShadowDiagram& s, const TraversalPlan* inherited, size_t chain_len) {
        if (chain_len > s.crossings.size())
            throw EngineError("switch chain exceeds crossing count; diagram is not planar");
        CanonicalForm cf = canonicalize(s);
        if (auto hit = memo_.lookup(cf.key)) return *hit;

        std::vector<Passage> passages;
        std::vector<int> comp_of;
        const TraversalPlan* plan;
        if (inherited) {
            passages = replay_plan(s, *inherited, &comp_of);
            plan = inherited;
        } else {
            passages = cf.passages;
            comp_of = cf.component_of;
            plan = &cf.plan;
        }

        int pivot = -1;
        std::vector<char> visited(s.crossings.size(), 0);
        for (const Passage& p : passages) {
            if (visited[static_cast<size_t>(p.crossing)]) continue;
            visited[static_cast<size_t>(p.crossing)] = 1;
            if (p.slot % 2 == 0) {
                pivot = p.crossing;
                break;
            }
        }

        V result = k_.one;
        if (pivot < 0) {
            result = descending_value(s, passages, comp_of);
        } else {
            ShadowDiagram switched = switch_crossing(s, pivot);
            V vs = eval_core(switched, plan, chain_len + 1);
            V va = eval(smooth_crossing(s, pivot, SmoothMode::A));
            V vb = eval(smooth_crossing(s, pivot, SmoothMode::B));
            V comb = (k_.smooth_sign > 0) ? va + vb : va - vb;
            V tail = k_.factor * comb;
            result = (k_.switch_sign > 0) ? vs + tail : tail - vs;
        }
        memo_.insert(cf.key, result);
        return result;
    }

    // Every crossing is first met on the over-strand along the walk, so the
    // diagram is regular-isotopic to split unknots with twists: circles
    // contribute delta each past the first, self-crossings their twist
    // factors, and crossings between distinct components nothing.
    V descending_value(const ShadowDiagram& s, const std::vector<Passage>& passages,
                       const std::vector<int>& comp_of) {
        long long comps = s.free_loops;
        std::map<int, std::pair<Passage, int>> first;  // crossing -> (passage, comp)
        long long pos = 0, neg = 0;
        int max_comp = -1;
        for (size_t i = 0; i < passages.size(); ++i) {
            max_comp = std::max(max_comp, comp_of[i]);
            const Passage& p = passages[i];
            auto it = first.find(p.crossing);
            if (it == first.end()) {
                first[p.crossing] = {p, comp_of[i]};
                continue;
            }
            if (it->second.second != comp_of[i]) continue;  // inter-component
            int s1 = it->second.first.slot, s2 = p.slot;
            int under = (s1 % 2 == 0) ? s1 : s2;
            int over = (s1 % 2 == 0) ? s2 : s1;
            if (over == (under + 3) % 4)
                ++pos;
            else
                ++neg;
        }
        comps += max_comp + 1;
        V r = vpow(k_.delta, comps - 1, k_.one);
        r = r * vpow(k_.kink_pos, pos, k_.one);
        r = r * vpow(k_.kink_neg, neg, k_.one);
        return r;
    }

    FormConstants<V> k_;
    MemoTable<V>& memo_;
};

size_t memo_limit_from_env() {
    const char* env = std::getenv("SKEINFORGE_MEMO_LIMIT");
    if (!env) return 10'000'000;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || v == 0) return 10'000'000;
    return static_cast<size_t>(v);
}

}  // namespace

SkeinContext::SkeinContext() : SkeinContext(memo_limit_from_env()) {}

SkeinContext::SkeinContext(size_t cap)
    : sym_{MemoTable<FracLaurent2>(cap), MemoTable<FracLaurent2>(cap),
           MemoTable<FracLaurent2>(cap)},
      num_{MemoTable<CycNum>(cap), MemoTable<CycNum>(cap), MemoTable<CycNum>(cap)} {}

SkeinContext& SkeinContext::global() {
    static SkeinContext ctx;
    return ctx;
}

FracLaurent2 SkeinContext::unnormalized_symbolic(const ShadowDiagram& s, FormName f) {
    Engine<FracLaurent2> eng(symbolic_constants(f), sym_[idx(f)]);
    return eng.eval(s);
}

CycNum SkeinContext::unnormalized_so8(const ShadowDiagram& s, FormName f) {
    Engine<CycNum> eng(so8_form_constants(f), num_[idx(f)]);
    return eng.eval(s);
}

FracLaurent2 SkeinContext::normalized_symbolic(const Diagram& d, FormName f) {
    SkeinForm form = make_form(f);
    long long w = d.writhe();
    FracLaurent2 norm(form.norm_base.pow(-w));
    return norm * unnormalized_symbolic(d.shadow(), f);
}

CycNum SkeinContext::normalized_so8(const Diagram& d, FormName f) {
    auto [x, y] = so8_point(f);
    (void)y;
    long long w = d.writhe();
    return x.pow(-w) * unnormalized_so8(d.shadow(), f);
}

CycNum SkeinContext::specialize_so8(const Diagram& d, FormName f, bool via_symbolic) {
    if (!via_symbolic) return normalized_so8(d, f);
    auto [x, y] = so8_point(f);
    return normalized_symbolic(d, f).evaluate(x, y);
}

LickorishReport lickorish_check(const Diagram& d, SkeinContext& ctx) {
    LickorishReport rep;
    rep.components = d.component_count();
    rep.lhs = ctx.specialize_so8(d, FormName::wenzl);
    rep.rhs_raw = ctx.specialize_so8(d, FormName::semi_oriented);
    CycNum sign = (rep.components - 1) % 2 == 0 ? CycNum(Int(1)) : CycNum(Int(-1));
    rep.rhs = sign * rep.rhs_raw;
    rep.equal = (rep.lhs == rep.rhs);
    rep.note =
        "semi-oriented form evaluated at (a, z) = (-q^-5, q^5 + q^-5) with q = zeta; "
        "sign (-1)^(components-1)";
    return rep;
}

SubstitutionReport substitution_check(const Diagram& d, SkeinContext& ctx) {
    SubstitutionReport rep;
    rep.wenzl = ctx.specialize_so8(d, FormName::wenzl);
    rep.dubrovnik = ctx.specialize_so8(d, FormName::dubrovnik);
    rep.equal = (rep.wenzl == rep.dubrovnik);
    rep.convention =
        "dubrovnik form evaluated at (alpha, omega) = (r, q - q^-1) with "
        "(r, q) = (-zeta^-1, zeta); positive twists carry r and alpha respectively";
    return rep;
}

}  // namespace skeinforge
