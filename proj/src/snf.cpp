#include "knothom/snf.hpp"

#include <optional>
#include <sstream>

namespace knothom {

namespace {

// Monomial c*U^k; absent optional = zero.
struct Mono {
    Rat c;
    int k;
};
using Entry = std::optional<Mono>;
using MonoMat = std::vector<std::vector<Entry>>;

Entry add(const Entry& a, const Entry& b) {
    if (!a) return b;
    if (!b) return a;
    if (a->k != b->k) throw std::logic_error("graded SNF: mixed-degree entry sum");
    Rat c = a->c + b->c;
    if (c == 0) return std::nullopt;
    return Mono{c, a->k};
}
Entry mul(const Entry& a, const Entry& b) {
    if (!a || !b) return std::nullopt;
    return Mono{a->c * b->c, a->k + b->k};
}
Entry neg(const Entry& a) {
    if (!a) return a;
    return Mono{-a->c, a->k};
}

void row_op(MonoMat& m, size_t dst, size_t src, const Entry& f) {
    // row_dst += f * row_src
    for (size_t j = 0; j < m[dst].size(); j++) m[dst][j] = add(m[dst][j], mul(f, m[src][j]));
}
void col_op(MonoMat& m, size_t dst, size_t src, const Entry& f) {
    for (size_t i = 0; i < m.size(); i++) m[i][dst] = add(m[i][dst], mul(f, m[i][src]));
}
void swap_rows(MonoMat& m, size_t a, size_t b) { std::swap(m[a], m[b]); }
void swap_cols(MonoMat& m, size_t a, size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

// Diagonalize a monomial matrix in place; also applies the corresponding
// operations to the transform matrices when non-null:
//   E: accumulated column operations (A_new = A_old * E-part)
//   Einv: inverse column operations
//   Sinv: inverse row operations
// Degree labels move with swaps only.
size_t monomial_snf(MonoMat& a, MonoMat* E, MonoMat* Einv, MonoMat* Sinv,
                    std::vector<std::vector<Rat>>* row_degs, std::vector<std::vector<Rat>>* col_degs) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    size_t t = 0;
    for (; t < std::min(rows, cols); t++) {
        // minimal U-power pivot in the remaining submatrix
        size_t pi = SIZE_MAX, pj = SIZE_MAX;
        int best = -1;
        for (size_t i = t; i < rows; i++)
            for (size_t j = t; j < cols; j++)
                if (a[i][j] && (best < 0 || a[i][j]->k < best)) {
                    best = a[i][j]->k;
                    pi = i;
                    pj = j;
                }
        if (best < 0) break;
        if (pi != t) {
            swap_rows(a, pi, t);
            if (Sinv) swap_cols(*Sinv, pi, t);
            if (row_degs) std::swap((*row_degs)[pi], (*row_degs)[t]);
        }
        if (pj != t) {
            swap_cols(a, pj, t);
            if (E) swap_cols(*E, pj, t);
            if (Einv) swap_rows(*Einv, pj, t);
            if (col_degs) std::swap((*col_degs)[pj], (*col_degs)[t]);
        }
        Entry pivot = a[t][t];
        for (size_t i = t + 1; i < rows; i++) {
            if (!a[i][t]) continue;
            Entry f = neg(Mono{a[i][t]->c / pivot->c, a[i][t]->k - pivot->k});
            row_op(a, i, t, f);
            if (Sinv) col_op(*Sinv, t, i, neg(f));
        }
        for (size_t j = t + 1; j < cols; j++) {
            if (!a[t][j]) continue;
            Entry f = neg(Mono{a[t][j]->c / pivot->c, a[t][j]->k - pivot->k});
            col_op(a, j, t, f);
            if (E) col_op(*E, j, t, f);
            if (Einv) row_op(*Einv, t, j, neg(f));
        }
    }
    return t;
}

MonoMat identity(size_t n) {
    MonoMat m(n, std::vector<Entry>(n));
    for (size_t i = 0; i < n; i++) m[i][i] = Mono{Rat(1), 0};
    return m;
}

}  // namespace

ModuleDecomp snf_homology(const CurvedComplex& C) {
    if (C.ring.vars.size() != 1 || !C.ring.monomial_relations.empty())
        throw NotPID("snf_homology needs a free univariate ring");
    if (!C.ring.reduce(C.curvature).is_zero()) throw NotPID("snf_homology needs curvature zero");
    VarId u = C.ring.vars[0];

    size_t n = C.size();
    MonoMat a(n, std::vector<Entry>(n));
    for (auto& [st, p] : C.diff) {
        if (p.is_zero()) continue;
        if (p.term_count() != 1)
            throw NotPID("entry " + p.str() + " is not a monomial (differential not graded)");
        auto [m, c] = *p.terms().begin();
        a[static_cast<size_t>(st.second)][static_cast<size_t>(st.first)] = Mono{c, m.exponent(u)};
    }

    std::vector<std::vector<Rat>> col_degs, row_degs;
    for (auto& g : C.gens) col_degs.push_back(g.deg);
    for (auto& g : C.gens) row_degs.push_back(g.deg);

    MonoMat E = identity(n), Einv = identity(n), Sinv = identity(n);
    size_t r = monomial_snf(a, &E, &Einv, &Sinv, &row_degs, &col_degs);

    // Kernel basis: columns r..n-1 of E, degrees col_degs[r..].
    // Relations: y_k = Einv * (d_k * Sinv_col_k) restricted to kernel coords.
    MonoMat rel(n - r, std::vector<Entry>(r));
    for (size_t k = 0; k < r; k++) {
        std::vector<Entry> w(n);
        for (size_t i = 0; i < n; i++) w[i] = mul(a[k][k], Sinv[i][k]);
        std::vector<Entry> y(n);
        for (size_t i = 0; i < n; i++) {
            Entry acc;
            for (size_t j = 0; j < n; j++) acc = add(acc, mul(Einv[i][j], w[j]));
            y[i] = acc;
        }
        for (size_t i = 0; i < r; i++)
            if (y[i]) throw std::logic_error("graded SNF: image not contained in kernel");
        for (size_t i = r; i < n; i++) rel[i - r][k] = y[i];
    }

    std::vector<std::vector<Rat>> gen_degs(col_degs.begin() + static_cast<long>(r), col_degs.end());
    std::vector<std::vector<Rat>> rel_degs(r);  // unused labels for the columns
    size_t r2 = monomial_snf(rel, nullptr, nullptr, nullptr, &gen_degs, &rel_degs);

    ModuleDecomp out;
    for (size_t i = 0; i < n - r; i++) {
        if (i < r2 && rel[i][i]) {
            int k = rel[i][i]->k;
            if (k == 0) continue;  // unit relation: summand dies
            out.summands.push_back({false, k, gen_degs[i]});
        } else {
            out.summands.push_back({true, 0, gen_degs[i]});
        }
    }
    std::sort(out.summands.begin(), out.summands.end(), [](const auto& x, const auto& y) {
        if (x.free != y.free) return x.free;
        if (x.exp != y.exp) return x.exp > y.exp;
        return x.deg < y.deg;
    });
    return out;
}

std::string ModuleDecomp::str(const std::string& var_display) const {
    if (summands.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& s : summands) {
        if (!first) os << " (+) ";
        first = false;
        os << "Q[" << var_display << "]";
        if (!s.free) {
            os << "/(" << var_display;
            if (s.exp != 1) os << "^" << s.exp;
            os << ")";
        }
        os << "{";
        for (size_t i = 0; i < s.deg.size(); i++) os << (i ? "," : "") << s.deg[i].get_str();
        os << "}";
    }
    return os.str();
}

GradedDims decomp_to_dims(const ModuleDecomp& d, const std::vector<Rat>& u_degree,
                          const std::vector<std::string>& grading_names, size_t primary, const Rat& cutoff) {
    GradedDims out;
    out.grading_names = grading_names;
    out.cutoff = cutoff;
    for (auto& s : d.summands) {
        if (s.free) {
            out.truncated = true;
            if (u_degree[primary] <= 0) throw InfiniteDegreePiece("free tower with nonpositive primary weight");
        }
        std::vector<Rat> deg = s.deg;
        for (int j = 0; s.free || j < s.exp; j++) {
            if (s.free && deg[primary] > cutoff) break;
            out.add(deg, 1);
            for (size_t i = 0; i < deg.size() && i < u_degree.size(); i++) deg[i] += u_degree[i];
        }
    }
    return out;
}

}  // namespace knothom
