#pragma once

#include <string>
#include <vector>

#include "knothom/curved_complex.hpp"
#include "knothom/graded_homology.hpp"

namespace knothom {

struct NotPID : std::runtime_error {
    explicit NotPID(const std::string& m) : std::runtime_error(m) {}
};

// Graded module decomposition over a univariate polynomial ring: each summand
// is free or U-power torsion, with the grading of its generator class.
struct ModuleDecomp {
    struct Summand {
        bool free = false;
        int exp = 0;  // torsion exponent, >= 1 when !free
        std::vector<Rat> deg;
    };
    std::vector<Summand> summands;

    long torsion_total() const {
        long t = 0;
        for (auto& s : summands)
            if (!s.free) t += s.exp;
        return t;
    }
    bool has_free() const {
        for (auto& s : summands)
            if (s.free) return true;
        return false;
    }
    int max_torsion_exp() const {
        int m = 0;
        for (auto& s : summands)
            if (!s.free) m = std::max(m, s.exp);
        return m;
    }
    std::string str(const std::string& var_display = "U") const;
};

// Homology of a free graded complex over Q[U] (one ring variable, no
// monomial relations, curvature zero) by Smith normal form. Differential
// entries must be homogeneous, hence monomial; the reduction stays graded
// throughout, so summand generator degrees come out exactly.
ModuleDecomp snf_homology(const CurvedComplex& C);

// Expand a decomposition into dimensions per degree; free towers truncate at
// the cutoff in the primary coordinate.
GradedDims decomp_to_dims(const ModuleDecomp& d, const std::vector<Rat>& u_degree,
                          const std::vector<std::string>& grading_names, size_t primary, const Rat& cutoff);

}  // namespace knothom
