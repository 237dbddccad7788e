#pragma once

#include <array>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "skeinforge/cyclo.hpp"
#include "skeinforge/diagram.hpp"
#include "skeinforge/laurent.hpp"

namespace skeinforge {

enum class FormName { semi_oriented, wenzl, dubrovnik };

FormName form_from_string(const std::string& name);  // accepts "kauffman" too
std::string form_to_string(FormName f);

// Skein relation data.  The engine rewrites the value of a diagram at a
// crossing (read in its stored tuple orientation) as
//   P(D) = switch_sign * P(switched) + factor * (P(A) + smooth_sign * P(B))
// where A reconnects slots 0-1/2-3 and B reconnects slots 0-3/1-2.
// kink_pos / kink_neg are the factors acquired when removing a positive /
// negative twist, loop_value the factor for an extra disjoint circle, and
// norm_base the variable whose -writhe power normalizes the invariant.
struct SkeinForm {
    FormName name;
    std::pair<std::string, std::string> vars;
    int switch_sign;
    int smooth_sign;
    FracLaurent2 factor;
    FracLaurent2 kink_pos;
    FracLaurent2 kink_neg;
    FracLaurent2 loop_value;
    Laurent2 norm_base;
};

SkeinForm make_form(FormName name);
SkeinForm make_form(const std::string& name);  // throws ParseError on unknown name

// Exact evaluation point in Q(zeta16) per form: wenzl at (r, q) =
// (-zeta^-1, zeta); semi-oriented at (a, z) = (-q^-5, q^5 + q^-5); dubrovnik
// at the substitution point (alpha, omega) = (r, q - q^-1).
std::pair<CycNum, CycNum> so8_point(FormName f);

template <class V>
class MemoTable {
public:
    explicit MemoTable(size_t capacity) : capacity_(capacity) {}

    std::optional<V> lookup(const std::string& key) const {
        std::shared_lock lk(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    // Idempotent: concurrent duplicate inserts of the same key are allowed
    // and keep the first value.
    void insert(const std::string& key, V value) {
        std::unique_lock lk(mu_);
        if (map_.size() >= capacity_ && !map_.count(key))
            throw EngineError("memo capacity exceeded (" + std::to_string(capacity_) +
                              " entries); raise SKEINFORGE_MEMO_LIMIT");
        map_.emplace(key, std::move(value));
    }

    size_t size() const {
        std::shared_lock lk(mu_);
        return map_.size();
    }

private:
    mutable std::shared_mutex mu_;
    std::unordered_map<std::string, V> map_;
    size_t capacity_;
};

// Shared memo tables for all computations in a process; see
// SKEINFORGE_MEMO_LIMIT (entries per table, default 10^7).
class SkeinContext {
public:
    SkeinContext();
    explicit SkeinContext(size_t memo_capacity);

    static SkeinContext& global();

    FracLaurent2 unnormalized_symbolic(const ShadowDiagram& s, FormName f);
    CycNum unnormalized_so8(const ShadowDiagram& s, FormName f);

    FracLaurent2 normalized_symbolic(const Diagram& d, FormName f);
    CycNum normalized_so8(const Diagram& d, FormName f);

    // Normalized exact value at the so8 point; via_symbolic computes the
    // symbolic polynomial first and evaluates it (the two paths must agree).
    CycNum specialize_so8(const Diagram& d, FormName f, bool via_symbolic = false);

    MemoTable<FracLaurent2>& symbolic_memo(FormName f) { return sym_[idx(f)]; }
    MemoTable<CycNum>& so8_memo(FormName f) { return num_[idx(f)]; }

private:
    static size_t idx(FormName f) { return static_cast<size_t>(f); }

    std::array<MemoTable<FracLaurent2>, 3> sym_;
    std::array<MemoTable<CycNum>, 3> num_;
};

struct LickorishReport {
    CycNum lhs;          // wenzl specialization
    CycNum rhs;          // (-1)^(components-1) * semi-oriented specialization
    CycNum rhs_raw;      // semi-oriented specialization before the sign
    long long components = 0;
    bool equal = false;
    std::string note;    // evaluation points used
};
LickorishReport lickorish_check(const Diagram& d, SkeinContext& ctx = SkeinContext::global());

struct SubstitutionReport {
    CycNum wenzl;
    CycNum dubrovnik;
    bool equal = false;
    std::string convention;  // the substitution under which equality holds
};
SubstitutionReport substitution_check(const Diagram& d,
                                      SkeinContext& ctx = SkeinContext::global());

}  // namespace skeinforge
