#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knothom/multipoly.hpp"

namespace knothom {

struct NotCurved : std::runtime_error {
    explicit NotCurved(const std::string& m) : std::runtime_error(m) {}
};
struct RingMismatch : std::runtime_error {
    explicit RingMismatch(const std::string& m) : std::runtime_error(m) {}
};

// Polynomial ring presented by its surviving variables and a monomial ideal
// (relations like U*V = 0 or U^n = 0). Linear relations are handled upstream
// by Elimination; only monomial relations reach the complex layer.
struct RingDesc {
    std::vector<VarId> vars;
    std::vector<Monomial> monomial_relations;

    bool has_var(VarId v) const {
        return std::find(vars.begin(), vars.end(), v) != vars.end();
    }
    bool monomial_is_zero(const Monomial& m) const {
        for (auto& r : monomial_relations)
            if (m.divisible_by(r)) return true;
        return false;
    }
    MultiPoly reduce(const MultiPoly& p) const {
        MultiPoly out;
        for (auto& [m, c] : p.terms())
            if (!monomial_is_zero(m)) out += MultiPoly::term(c, m);
        return out;
    }
    bool operator==(const RingDesc& o) const = default;
};

// Finitely generated free graded module with an endomorphism d satisfying
// d^2 = omega * Id. Generators carry a tuple of rational gradings; each
// ring variable and each homogeneous differential component has a declared
// degree in the same tuple. Values are immutable after construction in all
// public workflows (transformations return new complexes).
class CurvedComplex {
  public:
    struct Gen {
        std::string name;
        std::vector<Rat> deg;
    };

    RingDesc ring;
    std::vector<std::string> grading_names;
    std::map<VarId, std::vector<Rat>> var_degree;
    // Degrees a homogeneous differential component may have; empty = unchecked.
    std::vector<std::vector<Rat>> allowed_diff_degrees;
    // Koszul parity functional: dot(koszul, deg) must be an integer on all
    // generators; every differential component must flip its parity.
    std::vector<Rat> koszul;
    std::vector<Gen> gens;
    std::map<std::pair<int, int>, MultiPoly> diff;  // (source, target) -> coefficient
    MultiPoly curvature;                            // declared omega

    size_t size() const { return gens.size(); }
    int gen_index(const std::string& name) const;

    void set_entry(int src, int tgt, const MultiPoly& p) {
        MultiPoly r = ring.reduce(p);
        if (r.is_zero())
            diff.erase({src, tgt});
        else
            diff[{src, tgt}] = r;
    }
    MultiPoly entry(int src, int tgt) const {
        auto it = diff.find({src, tgt});
        return it == diff.end() ? MultiPoly() : it->second;
    }

    std::vector<Rat> var_deg(VarId v) const;
    std::vector<Rat> monomial_degree(const Monomial& m) const;
    // Degree of a homogeneous entry as a map gen[src] -> gen[tgt]; nullopt
    // when the entry mixes degrees.
    std::optional<std::vector<Rat>> entry_degree(int src, int tgt) const;

    long koszul_parity(int gi) const;  // 0 or 1

    // Computes d^2 and returns omega when d^2 = omega Id; NotCurved otherwise.
    MultiPoly computed_curvature() const;

    // Checks curvature against the declaration, homogeneity of every entry
    // against allowed_diff_degrees, and Koszul parity flips. Returns the
    // first violation as a diagnostic, or nullopt when well formed.
    std::optional<std::string> validate() const;

    // Graded tensor product over Q (disjoint variable sets) or over the
    // common ring (identical ring descriptors). Curvatures add.
    static CurvedComplex tensor(const CurvedComplex& c1, const CurvedComplex& c2);

    // Repeatedly cancels invertible scalar differential entries by the
    // zig-zag formula. Homotopy equivalence; graded homology unchanged.
    CurvedComplex gaussian_cancelled() const;

    CurvedComplex shifted(const std::vector<Rat>& delta) const;
    CurvedComplex renamed_vars(const std::map<VarId, VarId>& mapping) const;

    std::string to_json() const;
    static CurvedComplex from_json(const std::string& text);
};

}  // namespace knothom
