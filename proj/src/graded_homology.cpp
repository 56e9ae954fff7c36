#include "knothom/graded_homology.hpp"

#include <sstream>

#include "knothom/qlinalg.hpp"

namespace knothom {

std::string GradedDims::str() const {
    std::ostringstream os;
    for (auto& [k, d] : dims) {
        os << "(";
        for (size_t i = 0; i < k.size(); i++) os << (i ? "," : "") << k[i].get_str();
        os << "): " << d << "\n";
    }
    if (truncated) os << "[truncated at " << cutoff.get_str() << "]\n";
    return os.str();
}

std::optional<Rat> equal_up_to_shift(const Laurent1& a, const Laurent1& b) {
    if (a.is_zero() && b.is_zero()) return Rat(0);
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    Rat shift = a.min_exp() - b.min_exp();
    if (b.shifted(shift) == a) return shift;
    return std::nullopt;
}

namespace {

struct MappedComplex {
    const CurvedComplex& C;
    std::vector<std::vector<Rat>> map;  // rows: functionals
    std::vector<std::string> names;

    std::vector<Rat> apply(const std::vector<Rat>& deg) const {
        std::vector<Rat> out(map.size(), Rat(0));
        for (size_t i = 0; i < map.size(); i++)
            for (size_t j = 0; j < map[i].size() && j < deg.size(); j++) out[i] += map[i][j] * deg[j];
        return out;
    }
    std::vector<Rat> gen_deg(int g) const { return apply(C.gens[static_cast<size_t>(g)].deg); }
    std::vector<Rat> var_deg(VarId v) const { return apply(C.var_deg(v)); }
};

MappedComplex make_mapped(const CurvedComplex& C, const std::vector<std::vector<Rat>>& gmap,
                          const std::vector<std::string>& names) {
    MappedComplex m{C, gmap, names};
    if (m.map.empty()) {
        m.map.resize(C.grading_names.size());
        for (size_t i = 0; i < m.map.size(); i++) {
            m.map[i].assign(m.map.size(), Rat(0));
            m.map[i][i] = 1;
        }
        m.names = C.grading_names;
    }
    if (m.names.empty()) m.names.assign(m.map.size(), "");
    return m;
}

struct Basis {
    struct Elt {
        int gen;
        Monomial mon;
        std::vector<Rat> deg;  // mapped degree
    };
    std::vector<Elt> elems;
    std::map<std::vector<Rat>, std::vector<size_t>> pieces;
    std::map<std::pair<int, std::vector<std::pair<VarId, int>>>, size_t> lookup;

    size_t find(int gen, const Monomial& m) const {
        auto it = lookup.find({gen, m.factors()});
        return it == lookup.end() ? SIZE_MAX : it->second;
    }
};

// Enumerate (generator, monomial) pairs with primary mapped degree <= bound.
Basis enumerate_basis(const MappedComplex& M, size_t primary, const Rat& bound) {
    Basis b;
    const CurvedComplex& C = M.C;
    std::vector<VarId> vars = C.ring.vars;
    std::vector<std::vector<Rat>> vdeg;
    for (VarId v : vars) {
        auto d = M.var_deg(v);
        if (d[primary] <= 0) {
            // Termination needs positive weight unless the variable is nilpotent.
            bool capped = false;
            for (auto& r : C.ring.monomial_relations)
                if (r.factors().size() == 1 && r.factors()[0].first == v) capped = true;
            if (!capped)
                throw InfiniteDegreePiece("variable " + var_name(v) + " has nonpositive primary weight");
        }
        vdeg.push_back(d);
    }

    std::vector<std::pair<VarId, int>> current;
    std::function<void(size_t, int, const Rat&)> rec = [&](size_t vi, int gen, const Rat& used) {
        if (vi == vars.size()) {
            Monomial m(current);
            if (C.ring.monomial_is_zero(m)) return;
            Basis::Elt e{gen, m, M.apply(C.gens[static_cast<size_t>(gen)].deg)};
            auto md = M.apply(C.monomial_degree(m));
            for (size_t i = 0; i < e.deg.size(); i++) e.deg[i] += md[i];
            b.lookup[{gen, m.factors()}] = b.elems.size();
            b.elems.push_back(std::move(e));
            return;
        }
        VarId v = vars[vi];
        Rat w = vdeg[vi][primary];
        int cap = max_exponent_limit();
        for (auto& r : C.ring.monomial_relations)
            if (r.factors().size() == 1 && r.factors()[0].first == v)
                cap = std::min(cap, r.factors()[0].second - 1);
        for (int e = 0; e <= cap; e++) {
            Rat used2 = used + w * e;
            if (w > 0 && used2 > bound) break;
            if (e > 0) current.push_back({v, e});
            rec(vi + 1, gen, used2);
            if (e > 0) current.pop_back();
        }
    };
    for (int g = 0; g < static_cast<int>(C.size()); g++) {
        Rat base = M.gen_deg(g)[primary];
        rec(0, g, base);
    }
    // Deterministic piece ordering by full mapped degree.
    for (size_t i = 0; i < b.elems.size(); i++) b.pieces[b.elems[i].deg].push_back(i);
    return b;
}

// Sparse columns of a set of differential entries on the enumerated basis.
using SparseCol = std::vector<std::pair<size_t, Rat>>;

std::vector<SparseCol> apply_diff(const CurvedComplex& C, const Basis& b,
                                  const std::map<std::pair<int, int>, MultiPoly>& entries) {
    std::vector<SparseCol> cols(b.elems.size());
    std::map<int, std::vector<std::pair<int, const MultiPoly*>>> by_src;
    for (auto& [st, p] : entries) by_src[st.first].push_back({st.second, &p});
    for (size_t i = 0; i < b.elems.size(); i++) {
        auto& e = b.elems[i];
        auto it = by_src.find(e.gen);
        if (it == by_src.end()) continue;
        std::map<size_t, Rat> acc;
        for (auto& [tgt, p] : it->second) {
            for (auto& [m, c] : p->terms()) {
                Monomial prod = e.mon * m;
                if (C.ring.monomial_is_zero(prod)) continue;
                size_t j = b.find(tgt, prod);
                if (j == SIZE_MAX) continue;  // beyond the enumeration bound
                acc[j] += c;
            }
        }
        for (auto& [j, c] : acc)
            if (c != 0) cols[i].push_back({j, c});
    }
    return cols;
}

Rat max_primary_raise(const MappedComplex& M, size_t primary) {
    Rat r(0);
    for (auto& [st, p] : M.C.diff) {
        for (auto& [m, c] : p.terms()) {
            auto d = M.apply(M.C.monomial_degree(m));
            auto dd = d[primary] + M.gen_deg(st.second)[primary] - M.gen_deg(st.first)[primary];
            if (dd > r) r = dd;
        }
    }
    return r;
}

bool ring_nilpotent(const CurvedComplex& C) {
    for (VarId v : C.ring.vars) {
        bool capped = false;
        for (auto& r : C.ring.monomial_relations)
            if (r.factors().size() == 1 && r.factors()[0].first == v) capped = true;
        if (!capped) return false;
    }
    return true;
}

}  // namespace

GradedDims graded_homology(const CurvedComplex& C, const HomologyOptions& opt,
                           const std::vector<std::vector<Rat>>& gmap, const std::vector<std::string>& names) {
    MappedComplex M = make_mapped(C, gmap, names);
    // Degreewise rank counting needs a homogeneous differential in the
    // mapped grading: one degree delta across all components.
    std::optional<std::vector<Rat>> delta;
    for (auto& [st, p] : C.diff) {
        auto sd = M.gen_deg(st.first), td = M.gen_deg(st.second);
        for (auto& [m, c] : p.terms()) {
            auto md = M.apply(C.monomial_degree(m));
            std::vector<Rat> d(md.size());
            for (size_t i = 0; i < md.size(); i++) d[i] = md[i] + td[i] - sd[i];
            if (!delta)
                delta = d;
            else if (*delta != d)
                throw InfiniteDegreePiece("differential is not homogeneous in the mapped grading");
        }
    }
    bool finite_chain = ring_nilpotent(C);
    Rat slack = max_primary_raise(M, opt.primary);
    Rat bound = opt.cutoff + slack + 2;
    Basis b = enumerate_basis(M, opt.primary, finite_chain ? Rat(1000000) : bound);
    auto cols = apply_diff(C, b, C.diff);

    GradedDims out;
    out.grading_names = M.names;
    out.cutoff = opt.cutoff;
    out.truncated = !finite_chain;

    for (auto& [deg, idx] : b.pieces) {
        if (!finite_chain && deg[opt.primary] > opt.cutoff) continue;
        // rank of d restricted to this piece
        std::map<size_t, size_t> row_of;
        QMat outm;
        for (size_t c = 0; c < idx.size(); c++) {
            for (auto& [j, v] : cols[idx[c]]) {
                if (!row_of.count(j)) {
                    row_of[j] = outm.size();
                    outm.push_back(QVec(idx.size(), Rat(0)));
                }
                outm[row_of[j]][c] = v;
            }
        }
        size_t rank_out = rank(outm);
        // rank of d into this piece
        std::map<size_t, size_t> pos;
        for (size_t c = 0; c < idx.size(); c++) pos[idx[c]] = c;
        QMat inm;
        for (size_t src = 0; src < b.elems.size(); src++) {
            QVec contrib(idx.size(), Rat(0));
            bool nonzero = false;
            for (auto& [j, v] : cols[src]) {
                auto it = pos.find(j);
                if (it != pos.end()) {
                    contrib[it->second] = v;
                    nonzero = true;
                }
            }
            if (nonzero) inm.push_back(std::move(contrib));
        }
        size_t rank_in = rank(inm);
        long h = static_cast<long>(idx.size()) - static_cast<long>(rank_out) - static_cast<long>(rank_in);
        if (h < 0) throw std::logic_error("negative homology dimension (differential not graded?)");
        out.add(deg, h);
    }

    if (finite_chain) {
        out.truncated = false;
    } else if (opt.expect_finite) {
        // Stabilization: the top window below the cutoff must be empty.
        for (auto& [k, d] : out.dims)
            if (k[opt.primary] > opt.cutoff - slack - 2)
                throw InfiniteDegreePiece("homology does not stabilize below the cutoff");
        out.truncated = false;
    }
    return out;
}

GradedDims two_step_homology(const CurvedComplex& C, size_t v_coord, const HomologyOptions& opt,
                             const std::vector<std::vector<Rat>>& gmap, const std::vector<std::string>& names) {
    MappedComplex M = make_mapped(C, gmap, names);

    // Split homogeneous components of every entry into the two steps; all
    // d_second components must share one mapped degree delta2.
    std::map<std::pair<int, int>, MultiPoly> d1, d2;
    std::vector<Rat> delta1, delta2;
    for (auto& [st, p] : C.diff) {
        auto sd = M.gen_deg(st.first), td = M.gen_deg(st.second);
        for (auto& [m, c] : p.terms()) {
            auto md = M.apply(C.monomial_degree(m));
            std::vector<Rat> delta(md.size());
            for (size_t i = 0; i < md.size(); i++) delta[i] = md[i] + td[i] - sd[i];
            Rat dv = delta[v_coord];
            if (dv == 0) {
                if (delta1.empty())
                    delta1 = delta;
                else if (delta1 != delta)
                    throw SplitInvalid("d_first components have mixed degrees");
                d1[st] += MultiPoly::term(c, m);
            } else if (dv == 2) {
                if (delta2.empty())
                    delta2 = delta;
                else if (delta2 != delta)
                    throw SplitInvalid("d_second components have mixed degrees");
                d2[st] += MultiPoly::term(c, m);
            } else {
                throw SplitInvalid("differential component shifts the vertical grading by " + dv.get_str());
            }
        }
    }

    Rat slack = max_primary_raise(M, opt.primary);
    bool finite_chain = ring_nilpotent(C);
    Rat bound = opt.cutoff + slack + 2;
    Basis b = enumerate_basis(M, opt.primary, finite_chain ? Rat(1000000) : bound);
    auto cols1 = apply_diff(C, b, d1);
    auto cols2 = apply_diff(C, b, d2);

    // d1 must square to zero.
    // (checked numerically on the enumerated basis)
    for (size_t i = 0; i < b.elems.size(); i++) {
        std::map<size_t, Rat> acc;
        for (auto& [j, v] : cols1[i])
            for (auto& [k2, w] : cols1[j]) acc[k2] += v * w;
        for (auto& [k2, v] : acc)
            if (v != 0 && b.elems[k2].deg[opt.primary] <= opt.cutoff)
                throw SplitInvalid("d_first does not square to zero");
    }

    // Representatives of H(d1) per piece.
    struct PieceH1 {
        std::vector<size_t> idx;           // chain indices of the piece
        std::vector<QVec> reps;            // representative cycles (piece coordinates)
        QMat boundaries;                   // image rows (piece coordinates)
    };
    std::map<std::vector<Rat>, PieceH1> h1;

    for (auto& [deg, idx] : b.pieces) {
        PieceH1 ph;
        ph.idx = idx;
        std::map<size_t, size_t> pos;
        for (size_t c = 0; c < idx.size(); c++) pos[idx[c]] = c;
        // kernel of d1 out of the piece
        std::map<size_t, size_t> row_of;
        QMat outm;
        for (size_t c = 0; c < idx.size(); c++) {
            for (auto& [j, v] : cols1[idx[c]]) {
                if (!row_of.count(j)) {
                    row_of[j] = outm.size();
                    outm.push_back(QVec(idx.size(), Rat(0)));
                }
                outm[row_of[j]][c] = v;
            }
        }
        auto cycles = kernel_basis(outm, idx.size());
        // boundaries into the piece
        for (size_t src = 0; src < b.elems.size(); src++) {
            QVec contrib(idx.size(), Rat(0));
            bool nonzero = false;
            for (auto& [j, v] : cols1[src]) {
                auto it = pos.find(j);
                if (it != pos.end()) {
                    contrib[it->second] = v;
                    nonzero = true;
                }
            }
            if (nonzero) ph.boundaries.push_back(std::move(contrib));
        }
        auto accepted = extend_basis(ph.boundaries, cycles);
        for (size_t k2 : accepted) ph.reps.push_back(cycles[k2]);
        h1[deg] = std::move(ph);
    }

    // Induced d2 on representatives: each source piece maps to piece + delta2.
    std::map<std::vector<Rat>, QMat> d2star;  // source piece -> rows of target-rep coordinates
    for (auto& [deg, ph] : h1) {
        if (ph.reps.empty() || delta2.empty()) continue;
        std::vector<Rat> tdeg(deg);
        for (size_t i = 0; i < tdeg.size(); i++) tdeg[i] += delta2[i];
        auto it = h1.find(tdeg);
        size_t width = it == h1.end() ? 0 : it->second.reps.size();
        QMat mat;
        for (size_t r = 0; r < ph.reps.size(); r++) {
            std::map<size_t, Rat> img;
            for (size_t c = 0; c < ph.idx.size(); c++) {
                if (ph.reps[r][c] == 0) continue;
                for (auto& [j, v] : cols2[ph.idx[c]]) img[j] += ph.reps[r][c] * v;
            }
            bool nonzero = false;
            for (auto& [j, v] : img) nonzero = nonzero || v != 0;
            if (!nonzero) {
                mat.push_back(QVec(width, Rat(0)));
                continue;
            }
            if (it == h1.end()) {
                if (tdeg[opt.primary] <= opt.cutoff)
                    throw SplitInvalid("d_second image escapes the computed window");
                mat.push_back(QVec(width, Rat(0)));
                continue;
            }
            auto& tp = it->second;
            QVec bvec(tp.idx.size(), Rat(0));
            std::map<size_t, size_t> tpos;
            for (size_t c = 0; c < tp.idx.size(); c++) tpos[tp.idx[c]] = c;
            for (auto& [j, v] : img) {
                auto jt = tpos.find(j);
                if (jt == tpos.end()) {
                    if (v != 0) throw SplitInvalid("d_second image misses its graded piece");
                    continue;
                }
                bvec[jt->second] = v;
            }
            QVec coeffs;
            if (!coords_mod(tp.reps, tp.boundaries, bvec, coeffs))
                throw SplitInvalid("d_second does not descend to d_first homology");
            mat.push_back(coeffs);
        }
        d2star[deg] = std::move(mat);
    }

    // Homology of the induced map, per piece.
    GradedDims out;
    out.grading_names = M.names;
    out.cutoff = opt.cutoff;
    out.truncated = !finite_chain;
    for (auto& [deg, ph] : h1) {
        if (!finite_chain && deg[opt.primary] > opt.cutoff) continue;
        size_t n = ph.reps.size();
        if (n == 0) continue;
        size_t rout = 0;
        auto it = d2star.find(deg);
        if (it != d2star.end() && !it->second.empty() && !it->second[0].empty()) rout = rank(it->second);
        size_t rin = 0;
        if (!delta2.empty()) {
            std::vector<Rat> src_deg(deg);
            for (size_t i = 0; i < src_deg.size(); i++) src_deg[i] -= delta2[i];
            auto st = d2star.find(src_deg);
            if (st != d2star.end() && !st->second.empty() && st->second[0].size() == n) rin = rank(st->second);
        }
        long h = static_cast<long>(n) - static_cast<long>(rout) - static_cast<long>(rin);
        if (h < 0) throw std::logic_error("negative two-step homology dimension");
        out.add(deg, h);
    }
    if (finite_chain) out.truncated = false;
    return out;
}

Laurent1 chain_euler(const CurvedComplex& C, const std::vector<Rat>& functional) {
    if (!ring_nilpotent(C)) throw InfiniteDegreePiece("chain_euler needs a nilpotent ring");
    MappedComplex M = make_mapped(C, {}, {});
    Basis b = enumerate_basis(M, 0, Rat(1000000));
    Laurent1 chi("q");
    for (auto& e : b.elems) {
        Rat kp(0), f(0);
        auto full = C.gens[static_cast<size_t>(e.gen)].deg;
        auto md = C.monomial_degree(e.mon);
        for (size_t i = 0; i < full.size(); i++) full[i] += md[i];
        for (size_t i = 0; i < C.koszul.size() && i < full.size(); i++) kp += C.koszul[i] * full[i];
        for (size_t i = 0; i < functional.size() && i < full.size(); i++) f += functional[i] * full[i];
        long par = ((to_long(kp) % 2) + 2) % 2;
        chi.add(f, par == 0 ? Rat(1) : Rat(-1));
    }
    return chi;
}

}  // namespace knothom
