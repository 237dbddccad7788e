#include "skeinforge/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace skeinforge {

namespace {

long long isqrt_exact(long long n) {  // exact square root or -1
    if (n < 0) return -1;
    long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? r : -1;
}

enum class Family { odd, two_mod_four, zero_mod_four };

Family family_of(int N) {
    if (N % 2 == 1) return Family::odd;
    return (N / 2) % 2 == 1 ? Family::two_mod_four : Family::zero_mod_four;
}

void add_term(std::vector<std::pair<int, int>>& terms, int label, int mult = 1) {
    for (auto& [l, m] : terms)
        if (l == label) {
            m += mult;
            return;
        }
    terms.push_back({label, mult});
}

}  // namespace

int FusionRing::find_label(const std::string& name) const {
    for (int i = 0; i < rank(); ++i)
        if (labels[static_cast<size_t>(i)] == name) return i;
    return -1;
}

int FusionRing::coeff(int i, int j, int k) const {
    for (const auto& [l, m] : products[static_cast<size_t>(i)][static_cast<size_t>(j)])
        if (l == k) return m;
    return 0;
}

FusionRing build_metaplectic(int N) {
    if (N < 2) throw ParseError("metaplectic fusion rules need N >= 2");
    FusionRing r;
    r.n_param = N;

    if (family_of(N) == Family::odd) {
        int m = (N - 1) / 2;
        r.labels = {"1", "Z"};
        for (int i = 1; i <= m; ++i) r.labels.push_back("Y" + std::to_string(i));
        int rank = r.rank();
        r.dual.resize(static_cast<size_t>(rank));
        for (int i = 0; i < rank; ++i) r.dual[static_cast<size_t>(i)] = i;
        r.dims.assign(static_cast<size_t>(rank), 2);
        r.dims[0] = r.dims[1] = 1;
        r.unit = 0;
        auto Y = [&](int i) { return 1 + i; };  // Y_i index
        r.products.assign(static_cast<size_t>(rank),
                          std::vector<std::vector<std::pair<int, int>>>(static_cast<size_t>(rank)));
        auto set = [&](int i, int j, std::vector<std::pair<int, int>> t) {
            r.products[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
            r.products[static_cast<size_t>(j)][static_cast<size_t>(i)] = std::move(t);
        };
        for (int i = 0; i < rank; ++i) set(0, i, {{i, 1}});
        set(1, 1, {{0, 1}});
        for (int i = 1; i <= m; ++i) set(1, Y(i), {{Y(i), 1}});
        for (int i = 1; i <= m; ++i)
            for (int j = i; j <= m; ++j) {
                if (i == j) {
                    set(Y(i), Y(i), {{0, 1}, {1, 1}, {Y(std::min(2 * i, N - 2 * i)), 1}});
                } else {
                    std::vector<std::pair<int, int>> t;
                    add_term(t, Y(std::min(i + j, N - i - j)));
                    add_term(t, Y(j - i));
                    set(Y(i), Y(j), std::move(t));
                }
            }
        return r;
    }

    int k = N / 2;
    bool two_mod = family_of(N) == Family::two_mod_four;
    if (two_mod) {
        // invertibles form Z_4 generated by g
        r.labels = {"1", "g", "g2", "g3"};
        for (int i = 1; i <= k - 1; ++i) r.labels.push_back("Y" + std::to_string(i));
        int rank = r.rank();
        r.dual.resize(static_cast<size_t>(rank));
        for (int i = 0; i < rank; ++i) r.dual[static_cast<size_t>(i)] = i;
        r.dual[1] = 3;
        r.dual[3] = 1;
        r.dims.assign(static_cast<size_t>(rank), 2);
        for (int i = 0; i < 4; ++i) r.dims[static_cast<size_t>(i)] = 1;
        r.unit = 0;
        auto Y = [&](int i) { return 3 + i; };
        r.products.assign(static_cast<size_t>(rank),
                          std::vector<std::vector<std::pair<int, int>>>(static_cast<size_t>(rank)));
        auto set = [&](int i, int j, std::vector<std::pair<int, int>> t) {
            r.products[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
            r.products[static_cast<size_t>(j)][static_cast<size_t>(i)] = std::move(t);
        };
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b) set(a, b, {{(a + b) % 4, 1}});
        for (int a = 0; a < 4; ++a)
            for (int i = 1; i <= k - 1; ++i)
                set(a, Y(i), {{(a % 2 == 0) ? Y(i) : Y(k - i), 1}});
        for (int i = 1; i <= k - 1; ++i)
            for (int j = i; j <= k - 1; ++j) {
                if (i == j) {
                    set(Y(i), Y(i), {{0, 1}, {2, 1}, {Y(std::min(2 * i, 2 * k - 2 * i)), 1}});
                } else if (i + j == k) {
                    std::vector<std::pair<int, int>> t{{1, 1}, {3, 1}};
                    add_term(t, Y(j - i));
                    set(Y(i), Y(j), std::move(t));
                } else {
                    std::vector<std::pair<int, int>> t;
                    add_term(t, Y(std::min(i + j, 2 * k - i - j)));
                    add_term(t, Y(j - i));
                    set(Y(i), Y(j), std::move(t));
                }
            }
        return r;
    }

    // N = 0 mod 4: invertibles 1, f, g, fg form Z_2 x Z_2 (bitmask order)
    r.labels = {"1", "f", "g", "fg"};
    for (int i = 1; i <= k - 1; ++i) r.labels.push_back("Y" + std::to_string(i));
    int rank = r.rank();
    r.dual.resize(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) r.dual[static_cast<size_t>(i)] = i;
    r.dims.assign(static_cast<size_t>(rank), 2);
    for (int i = 0; i < 4; ++i) r.dims[static_cast<size_t>(i)] = 1;
    r.unit = 0;
    auto Y = [&](int i) { return 3 + i; };
    r.products.assign(static_cast<size_t>(rank),
                      std::vector<std::vector<std::pair<int, int>>>(static_cast<size_t>(rank)));
    auto set = [&](int i, int j, std::vector<std::pair<int, int>> t) {
        r.products[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
        r.products[static_cast<size_t>(j)][static_cast<size_t>(i)] = std::move(t);
    };
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) set(a, b, {{a ^ b, 1}});
    for (int a = 0; a < 4; ++a)
        for (int i = 1; i <= k - 1; ++i) {
            // f and g flip the index, fg fixes it
            int target = (a == 0 || a == 3) ? i : k - i;
            set(a, Y(i), {{Y(target), 1}});
        }
    for (int i = 1; i <= k - 1; ++i)
        for (int j = i; j <= k - 1; ++j) {
            if (i == j) {
                if (2 * i == k)
                    set(Y(i), Y(i), {{0, 1}, {1, 1}, {2, 1}, {3, 1}});
                else
                    set(Y(i), Y(i), {{0, 1}, {3, 1}, {Y(std::min(2 * i, 2 * k - 2 * i)), 1}});
            } else if (i + j == k) {
                std::vector<std::pair<int, int>> t{{1, 1}, {2, 1}};
                add_term(t, Y(j - i));
                set(Y(i), Y(j), std::move(t));
            } else {
                std::vector<std::pair<int, int>> t;
                add_term(t, Y(std::min(i + j, 2 * k - i - j)));
                add_term(t, Y(j - i));
                set(Y(i), Y(j), std::move(t));
            }
        }
    return r;
}

FusionReport verify_ring(const FusionRing& r) {
    FusionReport rep;
    int n = r.rank();
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.detail = msg;
        return rep;
    };

    // unit laws
    for (int i = 0; i < n; ++i) {
        const auto& p = r.products[static_cast<size_t>(r.unit)][static_cast<size_t>(i)];
        if (p.size() != 1 || p[0] != std::make_pair(i, 1))
            return fail("unit law fails at " + r.labels[static_cast<size_t>(i)]);
    }
    // duality: N^unit_{ij} = delta_{j, i*}
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int expect = (j == r.dual[static_cast<size_t>(i)]) ? 1 : 0;
            if (r.coeff(i, j, r.unit) != expect)
                return fail("duality fails at (" + r.labels[static_cast<size_t>(i)] + ", " +
                            r.labels[static_cast<size_t>(j)] + ")");
        }
    // commutativity of the stored table
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (r.coeff(i, j, k) != r.coeff(j, i, k))
                    return fail("commutativity fails at (" + r.labels[static_cast<size_t>(i)] +
                                ", " + r.labels[static_cast<size_t>(j)] + ")");
    // dimension homomorphism
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long lhs = static_cast<long long>(r.dims[static_cast<size_t>(i)]) *
                            r.dims[static_cast<size_t>(j)];
            long long rhs = 0;
            for (const auto& [k, m] : r.products[static_cast<size_t>(i)][static_cast<size_t>(j)])
                rhs += static_cast<long long>(m) * r.dims[static_cast<size_t>(k)];
            if (lhs != rhs)
                return fail("dimension homomorphism fails at (" +
                            r.labels[static_cast<size_t>(i)] + ", " +
                            r.labels[static_cast<size_t>(j)] + ")");
        }
    // associativity via sparse expansion of (i x j) x l vs i x (j x l)
    std::vector<long long> left(static_cast<size_t>(n)), right(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                std::fill(left.begin(), left.end(), 0);
                std::fill(right.begin(), right.end(), 0);
                for (const auto& [m, c] :
                     r.products[static_cast<size_t>(i)][static_cast<size_t>(j)])
                    for (const auto& [k, c2] :
                         r.products[static_cast<size_t>(m)][static_cast<size_t>(l)])
                        left[static_cast<size_t>(k)] += static_cast<long long>(c) * c2;
                for (const auto& [m, c] :
                     r.products[static_cast<size_t>(j)][static_cast<size_t>(l)])
                    for (const auto& [k, c2] :
                         r.products[static_cast<size_t>(i)][static_cast<size_t>(m)])
                        right[static_cast<size_t>(k)] += static_cast<long long>(c) * c2;
                if (left != right)
                    return fail("associativity fails at (" + r.labels[static_cast<size_t>(i)] +
                                ", " + r.labels[static_cast<size_t>(j)] + ", " +
                                r.labels[static_cast<size_t>(l)] + ")");
            }
    rep.detail = "all checks passed (rank " + std::to_string(n) + ")";
    return rep;
}

namespace {

std::vector<int> fusion_closure(const FusionRing& r, std::vector<int> seeds) {
    std::set<int> in(seeds.begin(), seeds.end());
    in.insert(r.unit);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(in.begin(), in.end());
        for (int i : cur) {
            if (!in.count(r.dual[static_cast<size_t>(i)])) {
                in.insert(r.dual[static_cast<size_t>(i)]);
                grew = true;
            }
            for (int j : cur)
                for (const auto& [k, m] :
                     r.products[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                    (void)m;
                    if (!in.count(k)) {
                        in.insert(k);
                        grew = true;
                    }
                }
        }
    }
    return {in.begin(), in.end()};
}

Int subring_dim(const FusionRing& r, const std::vector<int>& members) {
    Int d = 0;
    for (int i : members) {
        Int di = r.dims[static_cast<size_t>(i)];
        d += di * di;
    }
    return d;
}

SubRing make_subring(const FusionRing& r, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    return SubRing{members, subring_dim(r, members)};
}

std::string member_names(const FusionRing& r, const std::vector<int>& members) {
    std::string s = "{";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) s += ", ";
        s += r.labels[static_cast<size_t>(members[i])];
    }
    return s + "}";
}

}  // namespace

GradingResult grading(const FusionRing& r) {
    int N = r.n_param;
    if (N < 3) throw ParseError("grading needs N >= 3");
    int n = r.rank();

    // adjoint sub-ring of the whole modeled ring
    std::vector<int> adj_gens;
    for (int i = 0; i < n; ++i)
        for (const auto& [k, m] :
             r.products[static_cast<size_t>(i)][static_cast<size_t>(r.dual[static_cast<size_t>(i)])]) {
            (void)m;
            adj_gens.push_back(k);
        }
    std::vector<int> adj = fusion_closure(r, adj_gens);
    std::set<int> adj_set(adj.begin(), adj.end());

    // orbits of the adjoint action
    GradingResult res;
    res.component_of.assign(static_cast<size_t>(n), -1);
    for (int seed = 0; seed < n; ++seed) {
        if (res.component_of[static_cast<size_t>(seed)] != -1) continue;
        int id = static_cast<int>(res.components.size());
        std::vector<int> comp;
        std::vector<int> stack{seed};
        res.component_of[static_cast<size_t>(seed)] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (int a : adj)
                for (const auto& [k, m] :
                     r.products[static_cast<size_t>(a)][static_cast<size_t>(x)]) {
                    (void)m;
                    if (res.component_of[static_cast<size_t>(k)] == -1) {
                        res.component_of[static_cast<size_t>(k)] = id;
                        stack.push_back(k);
                    }
                }
        }
        std::sort(comp.begin(), comp.end());
        res.components.push_back(std::move(comp));
    }

    // expected components per family, intersected with the modeled labels
    std::vector<std::vector<int>> expected;
    std::vector<std::string> names;
    if (family_of(N) == Family::odd) {
        std::vector<int> all(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
        expected = {all};
        names = {"C_1"};
    } else {
        int k = N / 2;
        std::vector<int> even{0}, other;
        bool two_mod = family_of(N) == Family::two_mod_four;
        if (two_mod) {
            even.push_back(2);  // g^2
            other = {1, 3};     // g, g^3
        } else {
            even.push_back(1);
            even.push_back(2);
            even.push_back(3);  // f, g, fg
        }
        for (int i = 1; i <= k - 1; ++i) {
            int label = 3 + i;
            if (i % 2 == 0)
                even.push_back(label);
            else
                other.push_back(label);
        }
        std::sort(even.begin(), even.end());
        std::sort(other.begin(), other.end());
        expected = {even, other};
        names = {"C_1", two_mod ? "C_g2" : "C_fg"};
    }

    if (res.components.size() != expected.size())
        throw EngineError("grading mismatch: computed " +
                          std::to_string(res.components.size()) + " components, expected " +
                          std::to_string(expected.size()));
    // match computed components against the expected lists (order free)
    std::vector<bool> taken(expected.size(), false);
    res.component_names.assign(res.components.size(), "");
    for (size_t c = 0; c < res.components.size(); ++c) {
        bool found = false;
        for (size_t e = 0; e < expected.size(); ++e) {
            if (taken[e] || expected[e] != res.components[c]) continue;
            taken[e] = true;
            res.component_names[c] = names[e];
            found = true;
            break;
        }
        if (!found)
            throw EngineError("grading mismatch: unexpected component " +
                              member_names(r, res.components[c]));
    }
    // unit's component first
    if (res.component_of[static_cast<size_t>(r.unit)] != 0) {
        // components are discovered from label 0 == unit, so this cannot
        // happen; keep the guard for safety
        throw EngineError("grading: unit not in the first component");
    }
    (void)adj_set;
    return res;
}

bool is_integral_metaplectic(int N) {
    if (N < 3) return false;
    if (N % 2 == 1) return isqrt_exact(N) >= 3;
    return isqrt_exact(N / 2) >= 2;
}

namespace {

struct FamilyParams {
    Family fam;
    long long root = 0;  // t for odd N, l for even N
};

FamilyParams integral_params(int N) {
    FamilyParams p{family_of(N), 0};
    if (p.fam == Family::odd) {
        p.root = isqrt_exact(N);
        if (p.root < 3)
            throw ParseError("N = " + std::to_string(N) +
                             " is not an integral metaplectic parameter (need an odd square >= 9)");
    } else {
        p.root = isqrt_exact(N / 2);
        if (p.root < 2)
            throw ParseError("N = " + std::to_string(N) +
                             " is not an integral metaplectic parameter (need N/2 a square >= 4)");
    }
    return p;
}

}  // namespace

SubRing symmetric_subring(const FusionRing& r) {
    int N = r.n_param;
    FamilyParams p = integral_params(N);
    std::vector<int> gens;
    if (p.fam == Family::odd) {
        long long t = p.root;
        gens = {0, 1};  // 1, Z
        for (long long i = 1; i <= (t - 1) / 2; ++i)
            gens.push_back(static_cast<int>(1 + i * t));
        auto closure = fusion_closure(r, gens);
        std::sort(gens.begin(), gens.end());
        if (closure != gens)
            throw EngineError("symmetric subring closure mismatch: closure is " +
                              member_names(r, closure));
        SubRing s = make_subring(r, gens);
        if (s.dim != Int(2 * t))
            throw EngineError("symmetric subring dimension " + s.dim.str() + " != 2t");
        return s;
    }
    long long l = p.root;
    bool two_mod = p.fam == Family::two_mod_four;
    if (two_mod)
        gens = {0, 2};  // 1, g^2
    else
        gens = {0, 1, 2, 3};  // 1, f, g, fg
    long long top = two_mod ? (l - 1) / 2 : (l - 2) / 2;
    for (long long m = 1; m <= top; ++m) gens.push_back(static_cast<int>(3 + 2 * l * m));
    auto closure = fusion_closure(r, gens);
    std::sort(gens.begin(), gens.end());
    if (closure != gens)
        throw EngineError("symmetric subring closure mismatch: closure is " +
                          member_names(r, closure));
    SubRing s = make_subring(r, gens);
    if (s.dim != Int(2 * l))
        throw EngineError("symmetric subring dimension " + s.dim.str() + " != 2l");
    return s;
}

SubRing claimed_centralizer(const FusionRing& r) {
    int N = r.n_param;
    FamilyParams p = integral_params(N);
    int seed;
    if (p.fam == Family::odd)
        seed = static_cast<int>(1 + p.root);  // Y_t
    else
        seed = static_cast<int>(3 + p.root);  // Y_l
    SubRing zc = make_subring(r, fusion_closure(r, {seed}));
    SubRing l28 = symmetric_subring(r);
    Int product = l28.dim * zc.dim;
    if (product != Int(4) * Int(N))
        throw EngineError("dimension identity violated: dim(L)*dim(Z) = " + product.str() +
                          " != " + (Int(4) * Int(N)).str());
    return zc;
}

SubRing adjoint_subring(const FusionRing& r, const SubRing& s) {
    std::vector<int> gens;
    for (int x : s.members)
        for (const auto& [k, m] :
             r.products[static_cast<size_t>(x)][static_cast<size_t>(r.dual[static_cast<size_t>(x)])]) {
            (void)m;
            gens.push_back(k);
        }
    return make_subring(r, fusion_closure(r, gens));
}

AdjointContainmentReport adjoint_containment_check(int N) {
    FusionRing r = build_metaplectic(N);
    AdjointContainmentReport rep;
    rep.symmetric = symmetric_subring(r);
    rep.centralizer = claimed_centralizer(r);
    rep.adjoint = adjoint_subring(r, rep.centralizer);
    std::set<int> l(rep.symmetric.members.begin(), rep.symmetric.members.end());
    for (int x : rep.adjoint.members)
        if (!l.count(x)) rep.witnesses.push_back(x);
    rep.pass = rep.witnesses.empty();
    return rep;
}

// --- balancing --------------------------------------------------------------

namespace {

CycNum cyc_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("cyclotomic JSON needs 'num' and 'den'");
    const auto& num = j["num"];
    if (!num.is_array() || num.size() != 8) throw ParseError("'num' must have 8 entries");
    CycInt n;
    for (int i = 0; i < 8; ++i) {
        const auto& v = num[static_cast<size_t>(i)];
        if (v.is_number_integer())
            n[i] = Int(v.get<long long>());
        else if (v.is_string())
            n[i] = Int(v.get<std::string>());
        else
            throw ParseError("'num' entries must be integers");
    }
    Int d;
    if (j["den"].is_number_integer())
        d = Int(j["den"].get<long long>());
    else if (j["den"].is_string())
        d = Int(j["den"].get<std::string>());
    else
        throw ParseError("'den' must be an integer");
    return CycNum(n, d);
}

nlohmann::json cyc_to_json_obj(const CycNum& x) {
    nlohmann::json j;
    j["num"] = nlohmann::json::array();
    for (int i = 0; i < 8; ++i) {
        const Int& c = x.num()[i];
        if (c >= std::numeric_limits<long long>::min() &&
            c <= std::numeric_limits<long long>::max())
            j["num"].push_back(static_cast<long long>(c));
        else
            j["num"].push_back(c.str());
    }
    if (x.den() <= std::numeric_limits<long long>::max())
        j["den"] = static_cast<long long>(x.den());
    else
        j["den"] = x.den().str();
    return j;
}

}  // namespace

ModularDataSlice modular_data_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    ModularDataSlice m;
    if (!j.contains("S") || !j.contains("theta") || !j.contains("dims") || !j.contains("N"))
        throw ParseError("modular data JSON needs S, theta, dims, N");
    for (const auto& row : j["S"]) {
        std::vector<CycNum> r;
        for (const auto& e : row) r.push_back(cyc_from_json(e));
        m.S.push_back(std::move(r));
    }
    for (const auto& e : j["theta"]) m.theta.push_back(cyc_from_json(e));
    for (const auto& e : j["dims"]) m.dims.push_back(cyc_from_json(e));
    for (const auto& plane : j["N"]) {
        std::vector<std::vector<int>> p;
        for (const auto& row : plane) {
            std::vector<int> r;
            for (const auto& e : row) r.push_back(e.get<int>());
            p.push_back(std::move(r));
        }
        m.N.push_back(std::move(p));
    }
    if (j.contains("dual"))
        for (const auto& e : j["dual"]) m.dual.push_back(e.get<int>());
    else {
        for (size_t i = 0; i < m.theta.size(); ++i) m.dual.push_back(static_cast<int>(i));
    }
    return m;
}

std::string modular_data_to_json(const ModularDataSlice& m) {
    nlohmann::json j;
    j["S"] = nlohmann::json::array();
    for (const auto& row : m.S) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& e : row) r.push_back(cyc_to_json_obj(e));
        j["S"].push_back(r);
    }
    j["theta"] = nlohmann::json::array();
    for (const auto& e : m.theta) j["theta"].push_back(cyc_to_json_obj(e));
    j["dims"] = nlohmann::json::array();
    for (const auto& e : m.dims) j["dims"].push_back(cyc_to_json_obj(e));
    j["N"] = m.N;
    j["dual"] = m.dual;
    return j.dump();
}

BalancingReport balancing_check(const ModularDataSlice& m) {
    size_t n = m.theta.size();
    if (m.S.size() != n || m.dims.size() != n || m.N.size() != n || m.dual.size() != n)
        throw ParseError("modular data shape mismatch");
    for (const auto& row : m.S)
        if (row.size() != n) throw ParseError("S is not square");
    for (const auto& plane : m.N) {
        if (plane.size() != n) throw ParseError("N shape mismatch");
        for (const auto& row : plane)
            if (row.size() != n) throw ParseError("N shape mismatch");
    }
    for (int d : m.dual)
        if (d < 0 || static_cast<size_t>(d) >= n) throw ParseError("dual index out of range");

    BalancingReport rep;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            CycNum lhs = m.theta[i] * m.theta[j] * m.S[i][j];
            CycNum rhs(Int(0));
            size_t istar = static_cast<size_t>(m.dual[i]);
            for (size_t k = 0; k < n; ++k) {
                int c = m.N[istar][j][k];
                if (c == 0) continue;
                rhs += CycNum(Int(c)) * m.dims[k] * m.theta[k];
            }
            if (lhs != rhs) {
                rep.ok = false;
                rep.violations.push_back({static_cast<int>(i), static_cast<int>(j)});
            }
        }
    if (!rep.ok) {
        std::ostringstream os;
        os << rep.violations.size() << " balancing violations; first at (i,j) = ("
           << rep.violations[0].first << "," << rep.violations[0].second << ")";
        rep.detail = os.str();
    } else {
        rep.detail = "balancing equation holds for all pairs";
    }
    return rep;
}

NumerologyReport center_numerology(int N) {
    if (N != 8) throw ParseError("numerology report is specific to N = 8");
    return NumerologyReport{};
}

}  // namespace skeinforge
