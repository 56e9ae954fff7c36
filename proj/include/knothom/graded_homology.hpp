#pragma once

#include <map>
#include <string>
#include <vector>

#include "knothom/curved_complex.hpp"
#include "knothom/laurent.hpp"

namespace knothom {

struct InfiniteDegreePiece : std::runtime_error {
    explicit InfiniteDegreePiece(const std::string& m) : std::runtime_error(m) {}
};
struct SplitInvalid : std::runtime_error {
    explicit SplitInvalid(const std::string& m) : std::runtime_error(m) {}
};

// Dimension-per-degree table of a graded vector space, possibly truncated at
// a cutoff in the designated primary coordinate.
struct GradedDims {
    std::vector<std::string> grading_names;
    std::map<std::vector<Rat>, long> dims;
    bool truncated = false;
    Rat cutoff = 0;

    long total() const {
        long t = 0;
        for (auto& [k, d] : dims) t += d;
        return t;
    }
    void add(const std::vector<Rat>& key, long d) {
        if (d == 0) return;
        dims[key] += d;
        if (dims[key] == 0) dims.erase(key);
    }
    // Poincare polynomial with exponent = functional . degree.
    Laurent1 poincare(const std::vector<Rat>& functional, const std::string& var = "q") const {
        Laurent1 p(var);
        for (auto& [k, d] : dims) {
            Rat e(0);
            for (size_t i = 0; i < functional.size() && i < k.size(); i++) e += functional[i] * k[i];
            p.add(e, Rat(d));
        }
        return p;
    }
    // Poincare polynomial in the first grading coordinate.
    Laurent1 poincare_single(const std::string& var = "q") const {
        std::vector<Rat> f(grading_names.empty() ? 1 : grading_names.size(), Rat(0));
        f[0] = 1;
        return poincare(f, var);
    }
    bool operator==(const GradedDims& o) const { return dims == o.dims; }
    std::string str() const;
};

// Poincare polynomials agree after shifting one of them by a monomial.
// Returns the shift applied to `b` when they do.
std::optional<Rat> equal_up_to_shift(const Laurent1& a, const Laurent1& b);

struct HomologyOptions {
    size_t primary = 0;       // truncation coordinate in the mapped grading
    Rat cutoff = Rat(64);     // report degrees with primary <= cutoff
    bool expect_finite = false;
};

// Homology of (C, d) computed degreewise over Q. The differential must be
// homogeneous of a single degree with respect to the mapped grading; every
// mapped variable weight in the primary coordinate must be positive (or the
// ring fully nilpotent), so pieces are finite dimensional.
//
// grading_map rows are functionals on C's grading tuple; identity when empty.
GradedDims graded_homology(const CurvedComplex& C, const HomologyOptions& opt,
                           const std::vector<std::vector<Rat>>& grading_map = {},
                           const std::vector<std::string>& mapped_names = {});

// Two-step homology H(H(C, d_first), d_second*). Entries are split by the
// mapped coordinate `v_coord`: components preserving it form d_first,
// components raising it by 2 form d_second; anything else is SplitInvalid.
GradedDims two_step_homology(const CurvedComplex& C, size_t v_coord, const HomologyOptions& opt,
                             const std::vector<std::vector<Rat>>& grading_map = {},
                             const std::vector<std::string>& mapped_names = {});

// Chain-level graded Euler characteristic truncated at the cutoff, with sign
// (-1)^(koszul parity). Finite only when the ring is nilpotent.
Laurent1 chain_euler(const CurvedComplex& C, const std::vector<Rat>& functional);

}  // namespace knothom
