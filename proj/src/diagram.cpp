#include "skeinforge/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace skeinforge {

namespace {

// occurrence table: each arc id -> its (crossing, slot) pairs
std::map<int, std::vector<std::pair<int, int>>> occurrences(const std::vector<Crossing>& xs) {
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int c = 0; c < static_cast<int>(xs.size()); ++c)
        for (int s = 0; s < 4; ++s) occ[xs[c][s]].push_back({c, s});
    return occ;
}

// (a,b,c,d) and (c,d,a,b) present the same unoriented crossing; shadows keep
// the lexicographically smaller rotation so structural equality matches
// geometric equality.
void normalize_rotations(std::vector<Crossing>& xs) {
    for (auto& t : xs) {
        Crossing r{t[2], t[3], t[0], t[1]};
        if (r < t) t = r;
    }
}

void validate_arc_counts(const std::vector<Crossing>& xs) {
    for (const auto& [arc, os] : occurrences(xs))
        if (os.size() != 2)
            throw ParseError("arc " + std::to_string(arc) + " appears " +
                             std::to_string(os.size()) + " times (expected 2)");
}

struct UnionFind {
    std::map<int, int> parent;
    int find(int x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        if (it->second == x) return x;
        int r = find(it->second);
        parent[x] = r;
        return r;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

// --- ShadowDiagram ----------------------------------------------------------

int ShadowDiagram::strand_components() const {
    UnionFind uf;
    for (const auto& t : crossings) {
        uf.unite(t[0], t[2]);
        uf.unite(t[1], t[3]);
    }
    std::set<int> roots;
    for (const auto& t : crossings)
        for (int s = 0; s < 4; ++s) roots.insert(uf.find(t[s]));
    return static_cast<int>(roots.size());
}

// --- Diagram ---------------------------------------------------------------

std::map<int, int> Diagram::successor() const {
    std::map<int, int> succ;
    for (size_t c = 0; c < crossings.size(); ++c) {
        const Crossing& t = crossings[c];
        succ[t[0]] = t[2];
        if (over_rev[c])
            succ[t[3]] = t[1];
        else
            succ[t[1]] = t[3];
    }
    return succ;
}

std::vector<std::vector<int>> Diagram::components() const {
    auto succ = successor();
    std::vector<std::vector<int>> comps;
    std::set<int> seen;
    for (const auto& [a, b] : succ) {
        (void)b;
        if (seen.count(a)) continue;
        std::vector<int> cyc;
        int x = a;
        while (!seen.count(x)) {
            seen.insert(x);
            cyc.push_back(x);
            x = succ.at(x);
        }
        comps.push_back(std::move(cyc));
    }
    return comps;
}

long long Diagram::component_count() const {
    return static_cast<long long>(components().size()) + free_loops;
}

std::vector<int> Diagram::crossing_signs() const {
    std::vector<int> signs(crossings.size());
    for (size_t c = 0; c < crossings.size(); ++c) signs[c] = over_rev[c] ? 1 : -1;
    return signs;
}

long long Diagram::writhe() const {
    long long w = 0;
    for (int s : crossing_signs()) w += s;
    return w;
}

std::vector<std::vector<long long>> Diagram::linking_matrix() const {
    auto comps = components();
    std::map<int, int> comp_of;
    for (size_t i = 0; i < comps.size(); ++i)
        for (int a : comps[i]) comp_of[a] = static_cast<int>(i);
    size_t n = comps.size() + static_cast<size_t>(free_loops);
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    auto signs = crossing_signs();
    for (size_t c = 0; c < crossings.size(); ++c) {
        int under = comp_of.at(crossings[c][0]);
        int over = comp_of.at(crossings[c][1]);
        if (under == over) continue;
        m[static_cast<size_t>(under)][static_cast<size_t>(over)] += signs[c];
        m[static_cast<size_t>(over)][static_cast<size_t>(under)] += signs[c];
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (m[i][j] % 2 != 0)
                throw EngineError("odd inter-component crossing count; invalid diagram");
            m[i][j] /= 2;
        }
    return m;
}

ShadowDiagram Diagram::shadow() const {
    ShadowDiagram s{crossings, free_loops};
    normalize_rotations(s.crossings);
    return s;
}

// --- orientation solver -----------------------------------------------------

namespace {

// Assigns the over-strand direction at every crossing.  Slot roles: slot 0
// terminates its arc and slot 2 starts one; for the over pair the roles
// depend on the direction variable v (true = over runs slot1 -> slot3).
// Each arc must terminate exactly once and start exactly once.  Unforced
// directions are fixed by a numbering heuristic: prefer assignments that
// maximize successor(x) == x + 1, tie broken toward v = true at the lowest
// crossing.
std::vector<bool> solve_orientation(const std::vector<Crossing>& xs) {
    int n = static_cast<int>(xs.size());
    auto occ = occurrences(xs);

    // literal per occurrence: head(c, slot0) = true, head(c, slot2) = false,
    // head(c, slot1) = v_c, head(c, slot3) = !v_c.
    enum Role { HEAD, TAIL, VAR, NOTVAR };
    auto role_of = [](int slot) {
        switch (slot) {
            case 0: return HEAD;
            case 2: return TAIL;
            case 1: return VAR;
            default: return NOTVAR;
        }
    };

    std::vector<int> value(static_cast<size_t>(n), -1);  // -1 unknown, 0/1 assigned
    // graph edges between variables: (other crossing, parity); parity 1
    // means the values must differ
    std::vector<std::vector<std::pair<int, int>>> edges(static_cast<size_t>(n));
    std::vector<std::pair<int, int>> forced;  // (crossing, value)

    for (const auto& [arc, os] : occ) {
        Role r1 = role_of(os[0].second), r2 = role_of(os[1].second);
        int c1 = os[0].first, c2 = os[1].first;
        bool f1 = (r1 == HEAD || r1 == TAIL), f2 = (r2 == HEAD || r2 == TAIL);
        if (f1 && f2) {
            bool h1 = (r1 == HEAD), h2 = (r2 == HEAD);
            if (h1 == h2)
                throw ParseError("inconsistent orientation at arc " + std::to_string(arc));
        } else if (f1 || f2) {
            bool fixed_head = f1 ? (r1 == HEAD) : (r2 == HEAD);
            Role lit = f1 ? r2 : r1;
            int c = f1 ? c2 : c1;
            // literal must equal !fixed_head
            bool want = !fixed_head;
            int v = (lit == VAR) ? (want ? 1 : 0) : (want ? 0 : 1);
            forced.push_back({c, v});
        } else {
            // lit1 == !lit2
            int parity;  // v_c1 == v_c2 ^ parity
            if ((r1 == VAR) == (r2 == VAR))
                parity = 1;  // VAR vs VAR or NOTVAR vs NOTVAR: must differ
            else
                parity = 0;
            edges[static_cast<size_t>(c1)].push_back({c2, parity});
            edges[static_cast<size_t>(c2)].push_back({c1, parity});
        }
    }

    auto propagate = [&](int start) {
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (auto [d, parity] : edges[static_cast<size_t>(c)]) {
                int want = value[static_cast<size_t>(c)] ^ parity;
                if (value[static_cast<size_t>(d)] == -1) {
                    value[static_cast<size_t>(d)] = want;
                    stack.push_back(d);
                } else if (value[static_cast<size_t>(d)] != want) {
                    throw ParseError("inconsistent orientation near crossing " +
                                     std::to_string(d + 1));
                }
            }
        }
    };

    for (auto [c, v] : forced) {
        if (value[static_cast<size_t>(c)] == -1) {
            value[static_cast<size_t>(c)] = v;
            propagate(c);
        } else if (value[static_cast<size_t>(c)] != v) {
            throw ParseError("inconsistent orientation near crossing " + std::to_string(c + 1));
        }
    }

    // remaining free components: choose by the numbering heuristic
    for (int seed = 0; seed < n; ++seed) {
        if (value[static_cast<size_t>(seed)] != -1) continue;
        // collect the connected component
        std::vector<int> comp;
        {
            std::vector<int> stack{seed};
            std::set<int> seen{seed};
            while (!stack.empty()) {
                int c = stack.back();
                stack.pop_back();
                comp.push_back(c);
                for (auto [d, parity] : edges[static_cast<size_t>(c)]) {
                    (void)parity;
                    if (!seen.count(d) && value[static_cast<size_t>(d)] == -1) {
                        seen.insert(d);
                        stack.push_back(d);
                    }
                }
            }
        }
        auto try_assign = [&](int seed_val, std::map<int, int>& out) {
            out.clear();
            out[seed] = seed_val;
            std::vector<int> stack{seed};
            while (!stack.empty()) {
                int c = stack.back();
                stack.pop_back();
                for (auto [d, parity] : edges[static_cast<size_t>(c)]) {
                    if (value[static_cast<size_t>(d)] != -1) continue;
                    int want = out[c] ^ parity;
                    auto it = out.find(d);
                    if (it == out.end()) {
                        out[d] = want;
                        stack.push_back(d);
                    } else if (it->second != want) {
                        throw ParseError("inconsistent orientation near crossing " +
                                         std::to_string(d + 1));
                    }
                }
            }
        };
        auto score = [&](const std::map<int, int>& assign) {
            long long sc = 0;
            for (auto [c, v] : assign) {
                const Crossing& t = xs[static_cast<size_t>(c)];
                int from = v ? t[1] : t[3];
                int to = v ? t[3] : t[1];
                if (to == from + 1) ++sc;
            }
            return sc;
        };
        std::map<int, int> a1, a0;
        try_assign(1, a1);
        try_assign(0, a0);
        const auto& pick = (score(a0) > score(a1)) ? a0 : a1;
        for (auto [c, v] : pick) value[static_cast<size_t>(c)] = v;
    }

    // final validation: every arc terminates exactly once
    std::map<int, int> head_count, tail_count;
    for (int c = 0; c < n; ++c) {
        const Crossing& t = xs[static_cast<size_t>(c)];
        bool v = value[static_cast<size_t>(c)] == 1;
        head_count[t[0]]++;
        tail_count[t[2]]++;
        head_count[v ? t[1] : t[3]]++;
        tail_count[v ? t[3] : t[1]]++;
    }
    for (const auto& [arc, os] : occ) {
        (void)os;
        if (head_count[arc] != 1 || tail_count[arc] != 1)
            throw ParseError("inconsistent orientation at arc " + std::to_string(arc));
    }

    std::vector<bool> over_rev(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) over_rev[static_cast<size_t>(c)] = (value[static_cast<size_t>(c)] == 0);
    return over_rev;
}

Diagram build_diagram(std::vector<Crossing> xs, long long loops) {
    validate_arc_counts(xs);
    Diagram d;
    d.over_rev = solve_orientation(xs);
    d.crossings = std::move(xs);
    d.free_loops = loops;
    return d;
}

}  // namespace

// --- parsing ----------------------------------------------------------------

Diagram parse_pd(const std::string& text) {
    std::vector<Crossing> xs;
    long long loops = 0;
    std::istringstream in(text);
    std::string line;
    bool saw_any = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        saw_any = true;
        if (tag == "X") {
            Crossing t;
            for (int i = 0; i < 4; ++i) {
                long long v;
                if (!(ls >> v) || v <= 0)
                    throw ParseError("line " + std::to_string(lineno) +
                                     ": expected 4 positive arc ids after X");
                t[i] = static_cast<int>(v);
            }
            std::string extra;
            if (ls >> extra)
                throw ParseError("line " + std::to_string(lineno) + ": trailing data '" + extra + "'");
            xs.push_back(t);
        } else if (tag == "L") {
            long long v;
            if (!(ls >> v) || v < 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected a nonnegative loop count after L");
            loops += v;
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + tag + "'");
        }
    }
    if (!saw_any) throw ParseError("empty PD input");
    return build_diagram(std::move(xs), loops);
}

BraidWord parse_braid(const std::string& text) {
    std::istringstream in(text);
    std::string all, line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        all += line + " ";
    }
    std::istringstream ls(all);
    std::string tag;
    if (!(ls >> tag) || tag != "B") throw ParseError("braid input must start with 'B'");
    std::string rest;
    std::getline(ls, rest);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw ParseError("braid input missing ':'");
    BraidWord w;
    {
        std::istringstream hs(rest.substr(0, colon));
        if (!(hs >> w.strands) || w.strands < 1) throw ParseError("invalid strand count");
        std::string extra;
        if (hs >> extra) throw ParseError("unexpected token before ':'");
    }
    std::istringstream bs(rest.substr(colon + 1));
    long long k;
    while (bs >> k) {
        if (k == 0 || std::llabs(k) >= w.strands)
            throw ParseError("braid letter " + std::to_string(k) + " out of range for " +
                             std::to_string(w.strands) + " strands");
        w.letters.push_back(static_cast<int>(k));
    }
    if (!bs.eof()) throw ParseError("invalid braid letter");
    return w;
}

Diagram parse_diagram_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("crossings"))
        throw ParseError("diagram JSON needs a 'crossings' array");
    std::vector<Crossing> xs;
    for (const auto& c : j["crossings"]) {
        if (!c.is_array() || c.size() != 4) throw ParseError("each crossing must be [a,b,c,d]");
        Crossing t;
        for (int i = 0; i < 4; ++i) {
            long long v = c[static_cast<size_t>(i)].get<long long>();
            if (v <= 0) throw ParseError("arc ids must be positive");
            t[i] = static_cast<int>(v);
        }
        xs.push_back(t);
    }
    long long loops = j.value("free_loops", 0LL);
    if (loops < 0) throw ParseError("free_loops must be nonnegative");
    if (xs.empty() && loops == 0) throw ParseError("empty diagram JSON");
    return build_diagram(std::move(xs), loops);
}

BraidWord parse_braid_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("strands") || !j.contains("word"))
        throw ParseError("braid JSON needs 'strands' and 'word'");
    BraidWord w;
    w.strands = j["strands"].get<int>();
    if (w.strands < 1) throw ParseError("invalid strand count");
    for (const auto& x : j["word"]) {
        long long k = x.get<long long>();
        if (k == 0 || std::llabs(k) >= w.strands)
            throw ParseError("braid letter out of range");
        w.letters.push_back(static_cast<int>(k));
    }
    return w;
}

std::string diagram_to_json(const Diagram& d) {
    nlohmann::json j;
    j["crossings"] = nlohmann::json::array();
    for (const auto& t : d.crossings) j["crossings"].push_back({t[0], t[1], t[2], t[3]});
    j["free_loops"] = d.free_loops;
    return j.dump();
}

// --- braid closure ----------------------------------------------------------

Diagram braid_closure(const BraidWord& w) {
    if (w.strands < 1) throw ParseError("braid needs at least one strand");
    for (int k : w.letters)
        if (k == 0 || std::abs(k) >= w.strands) throw ParseError("braid letter out of range");

    int n = w.strands;
    std::vector<int> cur(static_cast<size_t>(n) + 1);
    for (int p = 1; p <= n; ++p) cur[static_cast<size_t>(p)] = p;
    int next_arc = n + 1;

    std::vector<Crossing> xs;
    std::vector<bool> over_rev;
    for (int letter : w.letters) {
        int k = std::abs(letter);
        int u = cur[static_cast<size_t>(k)], v = cur[static_cast<size_t>(k) + 1];
        int x = next_arc++, y = next_arc++;
        if (letter > 0) {
            xs.push_back({u, x, y, v});  // strand at k dives under toward k+1
            over_rev.push_back(true);
        } else {
            xs.push_back({v, u, x, y});
            over_rev.push_back(false);
        }
        cur[static_cast<size_t>(k)] = x;
        cur[static_cast<size_t>(k) + 1] = y;
    }

    // trace closure: bottom of position p rejoins its top arc
    long long loops = 0;
    for (int p = 1; p <= n; ++p) {
        int bottom = cur[static_cast<size_t>(p)];
        if (bottom == p) {
            ++loops;  // strand never crossed anything
            continue;
        }
        for (auto& t : xs)
            for (int s = 0; s < 4; ++s)
                if (t[s] == bottom) t[s] = p;
    }

    Diagram d;
    d.crossings = std::move(xs);
    d.over_rev = std::move(over_rev);
    d.free_loops = loops;
    return d;
}

Diagram mirror(const Diagram& d) {
    Diagram m;
    m.free_loops = d.free_loops;
    for (size_t c = 0; c < d.crossings.size(); ++c) {
        const Crossing& t = d.crossings[c];
        if (d.over_rev[c]) {
            m.crossings.push_back({t[3], t[0], t[1], t[2]});
            m.over_rev.push_back(false);
        } else {
            m.crossings.push_back({t[1], t[2], t[3], t[0]});
            m.over_rev.push_back(true);
        }
    }
    return m;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
    int shift = 0;
    for (const auto& t : a.crossings)
        for (int s = 0; s < 4; ++s) shift = std::max(shift, t[s]);
    Diagram u = a;
    for (size_t c = 0; c < b.crossings.size(); ++c) {
        Crossing t = b.crossings[c];
        for (int s = 0; s < 4; ++s) t[s] += shift;
        u.crossings.push_back(t);
        u.over_rev.push_back(b.over_rev[c]);
    }
    u.free_loops += b.free_loops;
    return u;
}

// --- shadow surgery ---------------------------------------------------------

namespace {

// Remove crossing idx, sewing the given slot pairs of that crossing.
// Sewing two ends of distinct arcs merges them; sewing the two ends of one
// arc closes a circle.
void remove_crossing_sewing(std::vector<Crossing>& xs, long long& loops, int idx,
                            const std::vector<std::pair<int, int>>& pairs) {
    Crossing t = xs[static_cast<size_t>(idx)];
    xs.erase(xs.begin() + idx);
    std::map<int, int> relabel;
    std::function<int(int)> cur = [&](int a) {
        auto it = relabel.find(a);
        while (it != relabel.end()) {
            a = it->second;
            it = relabel.find(a);
        }
        return a;
    };
    for (auto [i, j] : pairs) {
        int u = cur(t[i]), v = cur(t[j]);
        if (u == v) {
            ++loops;
            continue;
        }
        relabel[v] = u;
        for (auto& x : xs)
            for (int s = 0; s < 4; ++s)
                if (x[s] == v) x[s] = u;
    }
}

}  // namespace

ShadowDiagram switch_crossing(const ShadowDiagram& s, int c) {
    if (c < 0 || c >= static_cast<int>(s.crossings.size()))
        throw EngineError("crossing index out of range");
    ShadowDiagram r = s;
    const Crossing& t = s.crossings[static_cast<size_t>(c)];
    r.crossings[static_cast<size_t>(c)] = {t[1], t[2], t[3], t[0]};
    normalize_rotations(r.crossings);
    return r;
}

ShadowDiagram smooth_crossing(const ShadowDiagram& s, int c, SmoothMode mode) {
    if (c < 0 || c >= static_cast<int>(s.crossings.size()))
        throw EngineError("crossing index out of range");
    ShadowDiagram r = s;
    std::vector<std::pair<int, int>> pairs = (mode == SmoothMode::A)
                                                 ? std::vector<std::pair<int, int>>{{0, 1}, {2, 3}}
                                                 : std::vector<std::pair<int, int>>{{0, 3}, {1, 2}};
    remove_crossing_sewing(r.crossings, r.free_loops, c, pairs);
    normalize_rotations(r.crossings);
    return r;
}

namespace {

// Kink: one arc occupying two cyclically adjacent slots.  Returns the lower
// slot s of the pair (s, s+1 mod 4), or -1.
int find_kink_slot(const Crossing& t) {
    for (int s = 0; s < 4; ++s)
        if (t[s] == t[(s + 1) % 4]) return s;
    return -1;
}

struct Bigon {
    int c1, s1;  // arrival states of the two-corner face
    int c2, s2;
};

// Trace faces of the rotation system; the face containing the corner after
// arrival slot s departs at slot s+1.  Returns the first bigon whose two
// border arcs carry an over/over + under/under pattern, scanning states in
// (crossing, slot) order.
std::optional<Bigon> find_r2_bigon(const std::vector<Crossing>& xs) {
    auto occ = occurrences(xs);
    auto other_end = [&](int arc, int c, int s) {
        const auto& os = occ.at(arc);
        for (const auto& o : os)
            if (o.first != c || o.second != s) return o;
        return os[0];  // unreachable for valid shadows
    };
    int n = static_cast<int>(xs.size());
    std::vector<std::array<bool, 4>> seen(static_cast<size_t>(n), {false, false, false, false});
    for (int c0 = 0; c0 < n; ++c0) {
        for (int s0 = 0; s0 < 4; ++s0) {
            if (seen[static_cast<size_t>(c0)][static_cast<size_t>(s0)]) continue;
            // walk the face
            std::vector<std::pair<int, int>> face;
            int c = c0, s = s0;
            do {
                seen[static_cast<size_t>(c)][static_cast<size_t>(s)] = true;
                face.push_back({c, s});
                int dep = (s + 1) % 4;
                int arc = xs[static_cast<size_t>(c)][static_cast<size_t>(dep)];
                auto [nc, ns] = other_end(arc, c, dep);
                c = nc;
                s = ns;
            } while (!(c == c0 && s == s0));
            if (face.size() != 2) continue;
            auto [c1, s1] = face[0];
            auto [c2, s2] = face[1];
            if (c1 == c2) continue;
            int x = xs[static_cast<size_t>(c1)][static_cast<size_t>((s1 + 1) % 4)];
            int y = xs[static_cast<size_t>(c1)][static_cast<size_t>(s1)];
            if (x == y) continue;
            // x sits at (c1, s1+1) and (c2, s2); y at (c1, s1) and (c2, s2+1)
            bool x_over_1 = ((s1 + 1) % 4) % 2 == 1;
            bool x_over_2 = (s2 % 2) == 1;
            bool y_over_1 = (s1 % 2) == 1;
            bool y_over_2 = ((s2 + 1) % 4) % 2 == 1;
            bool removable = (x_over_1 && x_over_2 && !y_over_1 && !y_over_2) ||
                             (!x_over_1 && !x_over_2 && y_over_1 && y_over_2);
            if (removable) return Bigon{c1, s1, c2, s2};
        }
    }
    return std::nullopt;
}

}  // namespace

SimplifyResult simplify(const ShadowDiagram& s) {
    SimplifyResult res;
    res.shadow = s;
    res.removed_circles = s.free_loops;
    res.shadow.free_loops = 0;

    auto& xs = res.shadow.crossings;
    bool progress = true;
    while (progress) {
        progress = false;
        // twist removal first
        for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
            int slot = find_kink_slot(xs[static_cast<size_t>(c)]);
            if (slot < 0) continue;
            res.kinks.push_back(slot % 2 == 0 ? 1 : -1);
            remove_crossing_sewing(xs, res.removed_circles, c,
                                   {{(slot + 2) % 4, (slot + 3) % 4}});
            progress = true;
            break;
        }
        if (progress) continue;
        if (auto bigon = find_r2_bigon(xs)) {
            int hi = std::max(bigon->c1, bigon->c2);
            int lo = std::min(bigon->c1, bigon->c2);
            remove_crossing_sewing(xs, res.removed_circles, hi, {{0, 2}, {1, 3}});
            remove_crossing_sewing(xs, res.removed_circles, lo, {{0, 2}, {1, 3}});
            progress = true;
        }
    }
    normalize_rotations(xs);
    return res;
}

// --- canonical form ---------------------------------------------------------

namespace {

constexpr uint32_t kComponentMark = 0xFFFFFFFFu;

struct Occ2 {
    std::pair<int, int> a, b;  // sorted occurrence pair
};

std::map<int, Occ2> occurrence_pairs(const std::vector<Crossing>& xs) {
    auto occ = occurrences(xs);
    std::map<int, Occ2> out;
    for (auto& [arc, os] : occ) {
        if (os.size() != 2)
            throw EngineError("arc " + std::to_string(arc) + " appears " +
                              std::to_string(os.size()) + " times");
        std::sort(os.begin(), os.end());
        out[arc] = Occ2{os[0], os[1]};
    }
    return out;
}

struct WalkSim {
    const std::vector<Crossing>* xs;
    const std::map<int, Occ2>* occ;

    // Walk one full strand component starting on `arc` heading toward its
    // occurrence selected by `end_sel` (0 = lower, 1 = upper in the sorted
    // pair).  Invokes visit(crossing, entry_slot) per passage.
    template <class F>
    void walk(int arc, int end_sel, F&& visit) const {
        const Occ2& o = occ->at(arc);
        std::pair<int, int> target = end_sel == 0 ? o.a : o.b;
        int start_arc = arc;
        std::pair<int, int> start_target = target;
        while (true) {
            visit(target.first, target.second);
            int exit_slot = (target.second + 2) % 4;
            int next_arc = (*xs)[static_cast<size_t>(target.first)][static_cast<size_t>(exit_slot)];
            const Occ2& no = occ->at(next_arc);
            std::pair<int, int> from{target.first, exit_slot};
            std::pair<int, int> next_target = (no.a == from) ? no.b : no.a;
            arc = next_arc;
            target = next_target;
            if (arc == start_arc && target == start_target) break;
        }
    }
};

// arcs grouped into strand components, each sorted ascending
std::vector<std::vector<int>> strand_partition(const std::vector<Crossing>& xs) {
    UnionFind uf;
    for (const auto& t : xs) {
        uf.unite(t[0], t[2]);
        uf.unite(t[1], t[3]);
    }
    std::map<int, std::vector<int>> groups;
    std::set<int> arcs;
    for (const auto& t : xs)
        for (int s = 0; s < 4; ++s) arcs.insert(t[s]);
    for (int a : arcs) groups[uf.find(a)].push_back(a);
    std::vector<std::vector<int>> out;
    for (auto& [root, g] : groups) {
        (void)root;
        std::sort(g.begin(), g.end());
        out.push_back(std::move(g));
    }
    return out;
}

struct SearchState {
    std::vector<uint32_t> tokens;
    std::vector<int> cross_id;    // crossing -> first-visit id or -1
    std::vector<int> first_slot;  // crossing -> entry slot of first visit
    int next_id = 0;
};

}  // namespace

CanonicalForm canonicalize(const ShadowDiagram& s) {
    CanonicalForm best;
    if (s.crossings.empty()) {
        best.key = "L" + std::to_string(s.free_loops);
        return best;
    }
    auto occ = occurrence_pairs(s.crossings);
    auto comps = strand_partition(s.crossings);
    WalkSim sim{&s.crossings, &occ};
    int ncross = static_cast<int>(s.crossings.size());

    std::vector<uint32_t> best_tokens;
    TraversalPlan best_plan;
    bool have_best = false;

    // DFS over component orders and start choices with prefix pruning.
    std::vector<std::pair<int, int>> starts;
    std::vector<bool> used(comps.size(), false);
    SearchState st;
    st.cross_id.assign(static_cast<size_t>(ncross), -1);
    st.first_slot.assign(static_cast<size_t>(ncross), -1);

    // cmp < 0: current prefix already lexicographically smaller than best;
    // cmp == 0: equal so far.  Whenever a descendant lowers best, the tokens
    // on the stack are by construction a prefix of the new best, so the
    // remaining siblings compare from an equal prefix again.
    std::function<bool(size_t, int)> dfs = [&](size_t placed, int cmp) -> bool {
        if (placed == comps.size()) {
            if (!have_best || cmp < 0) {
                best_tokens = st.tokens;
                best_plan.starts = starts;
                have_best = true;
                return true;
            }
            return false;
        }
        bool lowered = false;
        for (size_t ci = 0; ci < comps.size(); ++ci) {
            if (used[ci]) continue;
            for (int arc : comps[ci]) {
                for (int end_sel = 0; end_sel < 2; ++end_sel) {
                    SearchState saved = st;
                    int ncmp = cmp;
                    bool pruned = false;
                    auto emit = [&](uint32_t tok) {
                        if (pruned) return;
                        size_t pos = st.tokens.size();
                        if (ncmp == 0 && have_best) {
                            if (pos >= best_tokens.size() || tok > best_tokens[pos]) {
                                pruned = true;
                                return;
                            }
                            if (tok < best_tokens[pos]) ncmp = -1;
                        }
                        st.tokens.push_back(tok);
                    };
                    emit(kComponentMark);
                    sim.walk(arc, end_sel, [&](int c, int slot) {
                        if (pruned) return;
                        if (st.cross_id[static_cast<size_t>(c)] < 0) {
                            st.cross_id[static_cast<size_t>(c)] = st.next_id++;
                            st.first_slot[static_cast<size_t>(c)] = slot;
                            uint32_t uo = (slot % 2 == 0) ? 0 : 1;
                            emit((static_cast<uint32_t>(st.cross_id[static_cast<size_t>(c)]) << 2) | uo);
                        } else {
                            int rel = ((slot - st.first_slot[static_cast<size_t>(c)]) % 4 + 4) % 4;
                            uint32_t rbit = (rel == 3) ? 1 : 0;
                            emit((static_cast<uint32_t>(st.cross_id[static_cast<size_t>(c)]) << 2) | 2 | rbit);
                        }
                    });
                    if (!pruned) {
                        used[ci] = true;
                        starts.push_back({arc, end_sel});
                        if (dfs(placed + 1, ncmp)) {
                            lowered = true;
                            cmp = 0;
                        }
                        starts.pop_back();
                        used[ci] = false;
                    }
                    st = std::move(saved);
                }
            }
        }
        return lowered;
    };
    dfs(0, 0);

    // serialize winning tokens
    std::string key;
    key.reserve(best_tokens.size() * 4 + 16);
    for (uint32_t t : best_tokens) {
        key.push_back(static_cast<char>(t & 0xFF));
        key.push_back(static_cast<char>((t >> 8) & 0xFF));
        key.push_back(static_cast<char>((t >> 16) & 0xFF));
        key.push_back(static_cast<char>((t >> 24) & 0xFF));
    }
    key += "L" + std::to_string(s.free_loops);

    best.key = std::move(key);
    best.plan = best_plan;
    best.passages = replay_plan(s, best.plan, &best.component_of);
    return best;
}

std::string canonical_key(const ShadowDiagram& s) { return canonicalize(s).key; }

std::vector<Passage> replay_plan(const ShadowDiagram& s, const TraversalPlan& plan,
                                 std::vector<int>* component_of) {
    std::vector<Passage> out;
    if (component_of) component_of->clear();
    if (s.crossings.empty()) return out;
    auto occ = occurrence_pairs(s.crossings);
    WalkSim sim{&s.crossings, &occ};
    for (size_t ci = 0; ci < plan.starts.size(); ++ci) {
        auto [arc, end_sel] = plan.starts[ci];
        sim.walk(arc, end_sel, [&](int c, int slot) {
            out.push_back(Passage{c, slot});
            if (component_of) component_of->push_back(static_cast<int>(ci));
        });
    }
    return out;
}

}  // namespace skeinforge
