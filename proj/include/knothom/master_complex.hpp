#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knothom/curved_complex.hpp"
#include "knothom/graded_homology.hpp"
#include "knothom/snf.hpp"

namespace knothom::hfk {

struct SpecInvalid : std::runtime_error {
    explicit SpecInvalid(const std::string& m) : std::runtime_error(m) {}
};

// Knot Floer master complex over Q[U_1..U_k, V_1..V_k]: a curved complex with
// Maslov/Alexander bigrading, basepoint matchings a, b (permutations of
// 1..k) and a component assignment per basepoint pair.
struct MasterComplex {
    CurvedComplex C;             // gradings {"M","A"}; koszul parity = M
    int k = 0;                   // basepoint pairs
    std::vector<int> a, b;       // 1-based matchings, size k
    std::vector<int> component;  // 1-based component per basepoint pair
    bool punctured = false;

    int components() const {
        int m = 0;
        for (int c : component) m = std::max(m, c);
        return m;
    }
    // Eq-style curvature sum over basepoints: (U_a(i) - U_b(i)) V_i.
    MultiPoly matching_curvature() const;
    // First violated invariant, or nullopt.
    std::optional<std::string> validate() const;

    std::string to_json() const;
    static MasterComplex from_json(const std::string& text);
};

// Base curved complex shell with the master grading conventions installed.
CurvedComplex master_shell(int k);

// Strictly decreasing symmetric exponent list with implied alternating signs;
// encodes the Alexander polynomial of a staircase (L-space) knot.
struct StaircaseSpec {
    std::vector<long> exponents;
    void check() const;
};

// Zigzag master complex of the staircase knot: generators x0..x2m with
// A(x_i) = a_i, M fixed by the relative grading rules and M(x0) = 0, and
// differential out of the odd generators
//   d x_{2s+1} = U^{a_{2s}-a_{2s+1}} x_{2s} + V^{a_{2s+1}-a_{2s+2}} x_{2s+2}.
MasterComplex staircase(const StaircaseSpec& spec);

// Adds the puncture next to basepoint i: the mapping cone of U_i V_i with
// the source copy shifted by (-1, -1/2) and the target by (0, -1/2).
MasterComplex puncture_cone(const MasterComplex& m, int i);

// (0,3)-stabilization at basepoint i: doubles generators, introduces the
// basepoint pair k+1 with off-diagonal arrows U_a(i) - U_{k+1} and
// V_{k+1} - V_i, and rethreads the matchings.
MasterComplex stabilize(const MasterComplex& m, int i);

// Tensor over disjoint variable sets; matchings and components concatenate.
MasterComplex disjoint_union(const MasterComplex& m1, const MasterComplex& m2);

// The V_i -> (U_a^n - U_b^n)/(U_a - U_b) substitution (degenerating to
// n U^(n-1) when a(i) = b(i)). Output gradings ("grn", "M") with
// grn = -n M + 2(n-1) A; curvature collapses to zero.
CurvedComplex cfk_n(const MasterComplex& m, int n);

// Graded homology of CFK_n and, over a univariate ring, its module
// decomposition.
struct HFKnResult {
    int n = 0;
    GradedDims dims;                     // keyed by grn
    std::optional<ModuleDecomp> decomp;  // univariate routes only
};

// Route used for a given input:
//  - punctured complexes: homology of cfk_n directly;
//  - unpunctured: puncture cone at the lowest basepoint of the marked
//    component first (the mapping cone of n U^n when k = 1).
HFKnResult hfk_n(const MasterComplex& m, int n, int marked_component = 1,
                 std::optional<Rat> cutoff = std::nullopt);

// Quotient route for single-pair unpunctured knots: impose UV = 0 and
// V = n U^(n-1), i.e. work over Q[U]/(U^n).
GradedDims hfk_n_quotient(const MasterComplex& m, int n);

// Reduced theory: U_i = 0 at a basepoint of the marked component.
GradedDims reduced_hfk_n(const MasterComplex& m, int n, int marked_component = 1,
                         std::optional<Rat> cutoff = std::nullopt);

// Homology of the z-free part of the differential (entries of V-degree 0),
// reported in grn. The first page of the algebraic-grading filtration.
GradedDims e1_page(const MasterComplex& m, int n, std::optional<Rat> cutoff = std::nullopt);

// Homology of the w-free part (entries of U-degree 0) of the quotient-route
// complex over Q[U]/(U^n); single-pair unpunctured knots.
GradedDims w0_page(const MasterComplex& m, int n);

// The V-killed complex over Q[U_1..U_k] itself (for oracle cross-checks).
CurvedComplex z_free_complex(const MasterComplex& m);

Laurent1 alexander_from_staircase(const StaircaseSpec& spec);  // in q, t = q^2

}  // namespace knothom::hfk
