#pragma once

#include <string>
#include <vector>

#include "skeinforge/common.hpp"
#include "skeinforge/cyclo.hpp"

namespace skeinforge {

// Fusion ring of the dimension-1 and dimension-2 simple objects of the
// metaplectic families.  Labels by index; structure constants N^k_{ij} as
// small nonnegative integers.  All products of the modeled objects stay in
// the modeled set, so the checks below are exact.
struct FusionRing {
    int n_param = 0;  // the N the ring was built from
    std::vector<std::string> labels;
    std::vector<int> dual;  // involution on label indices
    std::vector<int> dims;  // 1 or 2
    int unit = 0;
    // products[i][j] = list of (label, multiplicity)
    std::vector<std::vector<std::vector<std::pair<int, int>>>> products;

    int rank() const { return static_cast<int>(labels.size()); }
    int find_label(const std::string& name) const;  // -1 when absent
    int coeff(int i, int j, int k) const;           // N^k_{ij}
    std::vector<std::pair<int, int>> product(int i, int j) const { return products[i][j]; }
};

// Builds the modeled sub-ring for N >= 2: N odd gives {1, Z, Y_i}; N = 2k
// with k odd gives {1, g, g^2, g^3, Y_i}; N = 2k with k even gives
// {1, f, g, fg, Y_i}.  Throws ParseError for N < 2.
FusionRing build_metaplectic(int N);

struct FusionReport {
    bool ok = true;
    std::string detail;  // first violation, or a summary
};

// Exhaustive associativity, duality, unit laws and the dimension
// homomorphism.  Violations are report content, not errors.
FusionReport verify_ring(const FusionRing& r);

struct GradingResult {
    // component index per label; component 0 contains the unit
    std::vector<int> component_of;
    std::vector<std::vector<int>> components;
    std::vector<std::string> component_names;
};

// Universal grading restricted to the modeled labels, computed from fusion
// closure over the adjoint sub-ring; verified against the known component
// lists per family.  Throws EngineError on mismatch; needs N >= 3.
GradingResult grading(const FusionRing& r);

struct SubRing {
    std::vector<int> members;  // sorted label indices
    Int dim;                   // sum of squared dimensions
};

bool is_integral_metaplectic(int N);  // N, or N/2, a perfect square as required

// Symmetric subcategory generators and closure per family; verifies the
// closure adds nothing and the dimension is 2t (N odd, t = sqrt N) or
// 2l (N even, l = sqrt(N/2)).  Throws ParseError for non-integral N.
SubRing symmetric_subring(const FusionRing& r);

// Fusion closure of Y_t (N odd) or Y_l (N even); verifies
// dim(L) * dim(closure) == 4N.  Throws ParseError / EngineError.
SubRing claimed_centralizer(const FusionRing& r);

SubRing adjoint_subring(const FusionRing& r, const SubRing& s);

struct AdjointContainmentReport {
    bool pass = false;
    SubRing symmetric;    // the symmetric subring L
    SubRing centralizer;  // claimed centralizer
    SubRing adjoint;      // adjoint of the centralizer
    std::vector<int> witnesses;  // adjoint members outside L (empty on pass)
};

AdjointContainmentReport adjoint_containment_check(int N);

struct ModularDataSlice {
    std::vector<std::vector<CycNum>> S;
    std::vector<CycNum> theta;
    std::vector<CycNum> dims;
    std::vector<int> dual;
    std::vector<std::vector<std::vector<int>>> N;  // N[i][j][k]
};

ModularDataSlice modular_data_from_json(const std::string& text);
std::string modular_data_to_json(const ModularDataSlice& m);

struct BalancingReport {
    bool ok = true;
    std::vector<std::pair<int, int>> violations;  // (i, j) pairs
    std::string detail;
};

// Checks theta_i * theta_j * S_ij == sum_k N^k_{i*,j} d_k theta_k for all
// (i, j), exactly.  Throws ParseError on shape mismatch.
BalancingReport balancing_check(const ModularDataSlice& m);

struct NumerologyReport {
    int n = 8;
    long long dim_c = 32;          // 4N
    long long dim_center = 1024;   // (dim C)^2
    long long group_order = 32;
    int rank_c = 11;               // k + 7
    int asserted_center_rank = 256;
    std::string group = "SmallGroup(32,49), nontrivial cocycle, 72 Morita classes";
};

// The N = 8 constants; the two rank figures are reported side by side and
// deliberately not reconciled.
NumerologyReport center_numerology(int N = 8);

}  // namespace skeinforge
