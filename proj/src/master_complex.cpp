#include "knothom/master_complex.hpp"

#include <json.hpp>

namespace knothom::hfk {

namespace {

bool is_permutation(const std::vector<int>& p, int k) {
    if (static_cast<int>(p.size()) != k) return false;
    std::vector<bool> seen(static_cast<size_t>(k) + 1, false);
    for (int v : p) {
        if (v < 1 || v > k || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }
    return true;
}

int lowest_basepoint_on(const MasterComplex& m, int comp) {
    for (int i = 1; i <= m.k; i++)
        if (m.component[static_cast<size_t>(i - 1)] == comp) return i;
    throw std::out_of_range("no basepoint on component " + std::to_string(comp));
}

MultiPoly v_substitution(int n, int ai, int bi) {
    MultiPoly Ua = MultiPoly::variable(var_U(ai));
    if (ai == bi) return Rat(n) * Ua.pow(n - 1);
    MultiPoly Ub = MultiPoly::variable(var_U(bi));
    return exact_div(Ua.pow(n) - Ub.pow(n), Ua - Ub);
}

}  // namespace

CurvedComplex master_shell(int k) {
    CurvedComplex c;
    c.grading_names = {"M", "A"};
    c.koszul = {Rat(1), Rat(0)};
    c.allowed_diff_degrees = {{Rat(-1), Rat(0)}};
    for (int i = 1; i <= k; i++) {
        c.ring.vars.push_back(var_U(i));
        c.var_degree[var_U(i)] = {Rat(-2), Rat(-1)};
    }
    for (int i = 1; i <= k; i++) {
        c.ring.vars.push_back(var_V(i));
        c.var_degree[var_V(i)] = {Rat(0), Rat(1)};
    }
    return c;
}

MultiPoly MasterComplex::matching_curvature() const {
    MultiPoly omega;
    for (int i = 1; i <= k; i++) {
        MultiPoly d = MultiPoly::variable(var_U(a[static_cast<size_t>(i - 1)])) -
                      MultiPoly::variable(var_U(b[static_cast<size_t>(i - 1)]));
        omega += d * MultiPoly::variable(var_V(i));
    }
    return omega;
}

std::optional<std::string> MasterComplex::validate() const {
    if (!is_permutation(a, k)) return "matching a is not a permutation of 1..k";
    if (!is_permutation(b, k)) return "matching b is not a permutation of 1..k";
    if (static_cast<int>(component.size()) != k) return "component assignment has wrong length";
    for (int i = 1; i <= k; i++) {
        int ca = component[static_cast<size_t>(a[static_cast<size_t>(i - 1)] - 1)];
        int cb = component[static_cast<size_t>(b[static_cast<size_t>(i - 1)] - 1)];
        if (ca != cb)
            return "basepoint pair " + std::to_string(i) + " joins different components";
    }
    if (C.ring.reduce(C.curvature - matching_curvature()) != MultiPoly())
        return "declared curvature differs from the matching formula";
    return C.validate();
}

void StaircaseSpec::check() const {
    size_t len = exponents.size();
    if (len == 0 || len % 2 == 0) throw SpecInvalid("exponent list must have odd length");
    for (size_t i = 0; i + 1 < len; i++)
        if (exponents[i] <= exponents[i + 1]) throw SpecInvalid("exponents must be strictly decreasing");
    for (size_t i = 0; i < len; i++)
        if (exponents[i] != -exponents[len - 1 - i]) throw SpecInvalid("exponents must be symmetric");
}

MasterComplex staircase(const StaircaseSpec& spec) {
    spec.check();
    const auto& e = spec.exponents;
    size_t n = e.size();

    MasterComplex m;
    m.k = 1;
    m.a = {1};
    m.b = {1};
    m.component = {1};
    m.C = master_shell(1);
    m.C.curvature = m.matching_curvature();  // (U1 - U1) V1 = 0

    // A(x_i) = a_i; M from the relative rules, M(x0) = 0.
    std::vector<Rat> maslov(n);
    maslov[0] = 0;
    for (size_t i = 1; i < n; i += 2) {
        long gap_left = e[i - 1] - e[i];
        maslov[i] = maslov[i - 1] + 1 - 2 * gap_left;  // M(x_odd) - M(U^g x_even) = 1
        if (i + 1 < n) maslov[i + 1] = maslov[i] - 1;  // M(x_odd) - M(V^g x_even) = 1
    }
    for (size_t i = 0; i < n; i++)
        m.C.gens.push_back({"x" + std::to_string(i), {maslov[i], Rat(e[i])}});
    for (size_t i = 1; i < n; i += 2) {
        int gl = static_cast<int>(e[i - 1] - e[i]);
        m.C.set_entry(static_cast<int>(i), static_cast<int>(i - 1),
                      MultiPoly::term(Rat(1), Monomial::var_pow(var_U(1), gl)));
        if (i + 1 < n) {
            int gr = static_cast<int>(e[i] - e[i + 1]);
            m.C.set_entry(static_cast<int>(i), static_cast<int>(i + 1),
                          MultiPoly::term(Rat(1), Monomial::var_pow(var_V(1), gr)));
        }
    }
    return m;
}

MasterComplex puncture_cone(const MasterComplex& m, int i) {
    if (m.punctured) throw std::invalid_argument("complex already punctured");
    CurvedComplex e;
    e.ring = m.C.ring;
    e.grading_names = m.C.grading_names;
    e.var_degree = m.C.var_degree;
    e.allowed_diff_degrees = m.C.allowed_diff_degrees;
    e.koszul = m.C.koszul;
    e.gens.push_back({"p", {Rat(-1), Rat(-1, 2)}});
    e.gens.push_back({"o", {Rat(0), Rat(-1, 2)}});
    e.set_entry(0, 1, MultiPoly::variable(var_U(i)) * MultiPoly::variable(var_V(i)));
    e.curvature = MultiPoly();

    MasterComplex out(m);
    out.C = CurvedComplex::tensor(m.C, e);
    out.punctured = true;
    return out;
}

MasterComplex stabilize(const MasterComplex& m, int i) {
    if (i < 1 || i > m.k) throw std::out_of_range("basepoint index out of range");
    int kn = m.k + 1;
    CurvedComplex base = m.C;
    base.ring.vars.push_back(var_U(kn));
    base.ring.vars.push_back(var_V(kn));
    base.var_degree[var_U(kn)] = {Rat(-2), Rat(-1)};
    base.var_degree[var_V(kn)] = {Rat(0), Rat(1)};

    CurvedComplex e;
    e.ring = base.ring;
    e.grading_names = base.grading_names;
    e.var_degree = base.var_degree;
    e.allowed_diff_degrees = base.allowed_diff_degrees;
    e.koszul = base.koszul;
    e.gens.push_back({"s", {Rat(-1), Rat(-1)}});
    e.gens.push_back({"t", {Rat(0), Rat(0)}});
    int ai = m.a[static_cast<size_t>(i - 1)];
    MultiPoly du = MultiPoly::variable(var_U(ai)) - MultiPoly::variable(var_U(kn));
    MultiPoly dv = MultiPoly::variable(var_V(kn)) - MultiPoly::variable(var_V(i));
    e.set_entry(0, 1, du);
    e.set_entry(1, 0, dv);
    e.curvature = du * dv;

    MasterComplex out;
    out.k = kn;
    out.a = m.a;
    out.b = m.b;
    out.a[static_cast<size_t>(i - 1)] = kn;
    out.a.push_back(ai);
    out.b.push_back(kn);
    out.component = m.component;
    out.component.push_back(m.component[static_cast<size_t>(i - 1)]);
    out.punctured = m.punctured;
    out.C = CurvedComplex::tensor(base, e);
    return out;
}

MasterComplex disjoint_union(const MasterComplex& m1, const MasterComplex& m2) {
    std::map<VarId, VarId> rename;
    for (int i = 1; i <= m2.k; i++) {
        rename[var_U(i)] = var_U(m1.k + i);
        rename[var_V(i)] = var_V(m1.k + i);
    }
    CurvedComplex c2 = m2.C.renamed_vars(rename);
    MasterComplex out;
    out.k = m1.k + m2.k;
    out.a = m1.a;
    out.b = m1.b;
    out.component = m1.component;
    int comp_offset = m1.components();
    for (int i = 0; i < m2.k; i++) {
        out.a.push_back(m2.a[static_cast<size_t>(i)] + m1.k);
        out.b.push_back(m2.b[static_cast<size_t>(i)] + m1.k);
        out.component.push_back(m2.component[static_cast<size_t>(i)] + comp_offset);
    }
    out.punctured = m1.punctured && m2.punctured;
    out.C = CurvedComplex::tensor(m1.C, c2);
    return out;
}

CurvedComplex cfk_n(const MasterComplex& m, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::map<VarId, MultiPoly> subs;
    for (int i = 1; i <= m.k; i++)
        subs[var_V(i)] = v_substitution(n, m.a[static_cast<size_t>(i - 1)], m.b[static_cast<size_t>(i - 1)]);

    CurvedComplex out;
    out.grading_names = {"grn", "M"};
    out.koszul = {Rat(0), Rat(1)};
    for (int i = 1; i <= m.k; i++) {
        out.ring.vars.push_back(var_U(i));
        out.var_degree[var_U(i)] = {Rat(2), Rat(-2)};
    }
    for (auto& g : m.C.gens) {
        Rat grn = Rat(-n) * g.deg[0] + Rat(2 * (n - 1)) * g.deg[1];
        out.gens.push_back({g.name, {grn, g.deg[0]}});
    }
    for (auto& [st, p] : m.C.diff) out.set_entry(st.first, st.second, p.substitute(subs));
    out.curvature = m.C.curvature.substitute(subs);
    if (!out.curvature.is_zero())
        throw NotCurved("cfk_n curvature did not collapse to zero: " + out.curvature.str());

    // The substituted differential must raise grn by exactly n.
    for (auto& [st, p] : out.diff) {
        auto grn_deg = p.homogeneous_degree([&](VarId v) { return out.var_deg(v)[0]; });
        Rat shift = out.gens[static_cast<size_t>(st.second)].deg[0] - out.gens[static_cast<size_t>(st.first)].deg[0];
        if (!grn_deg || *grn_deg + shift != Rat(n))
            throw NotCurved("cfk_n entry does not raise grn by n: " + p.str());
    }
    return out;
}

namespace {

Rat default_cutoff(const CurvedComplex& c, int n) {
    Rat top(0);
    for (auto& g : c.gens) top = std::max(top, g.deg[0]);
    return top + Rat(2 * n) * static_cast<long>(c.ring.vars.size()) + 6;
}

std::vector<std::vector<Rat>> grn_projection() { return {{Rat(1), Rat(0)}}; }

}  // namespace

HFKnResult hfk_n(const MasterComplex& m, int n, int marked_component, std::optional<Rat> cutoff) {
    MasterComplex work = m;
    if (!m.punctured) work = puncture_cone(m, lowest_basepoint_on(m, marked_component));
    CurvedComplex c = cfk_n(work, n);

    HFKnResult res;
    res.n = n;
    HomologyOptions opt;
    opt.cutoff = cutoff ? *cutoff : default_cutoff(c, n);
    opt.expect_finite = true;
    res.dims = graded_homology(c, opt, grn_projection(), {"grn"});
    if (c.ring.vars.size() == 1) {
        CurvedComplex uni = c;
        uni.grading_names = {"grn"};
        uni.koszul.clear();
        uni.allowed_diff_degrees.clear();
        for (auto& g : uni.gens) g.deg.resize(1);
        for (auto& [v, d] : uni.var_degree) d.resize(1);
        res.decomp = snf_homology(uni);
    }
    return res;
}

GradedDims hfk_n_quotient(const MasterComplex& m, int n) {
    if (m.punctured || m.k != 1)
        throw std::invalid_argument("quotient route needs a single-pair unpunctured complex");
    std::map<VarId, MultiPoly> subs;
    subs[var_V(1)] = Rat(n) * MultiPoly::variable(var_U(1)).pow(n - 1);

    CurvedComplex c;
    c.grading_names = {"grn"};
    c.ring.vars = {var_U(1)};
    c.ring.monomial_relations = {Monomial::var_pow(var_U(1), n)};
    c.var_degree[var_U(1)] = {Rat(2)};
    for (auto& g : m.C.gens) {
        Rat grn = Rat(-n) * g.deg[0] + Rat(2 * (n - 1)) * g.deg[1];
        c.gens.push_back({g.name, {grn}});
    }
    for (auto& [st, p] : m.C.diff) c.set_entry(st.first, st.second, p.substitute(subs));
    c.curvature = MultiPoly();

    HomologyOptions opt;
    opt.cutoff = Rat(1000000);
    return graded_homology(c, opt, {}, {"grn"});
}

GradedDims reduced_hfk_n(const MasterComplex& m, int n, int marked_component, std::optional<Rat> cutoff) {
    if (m.punctured) throw std::invalid_argument("reduced theory starts from an unpunctured complex");
    int i0 = lowest_basepoint_on(m, marked_component);
    CurvedComplex c = cfk_n(m, n);
    std::map<VarId, MultiPoly> kill;
    kill[var_U(i0)] = MultiPoly();

    CurvedComplex red;
    red.grading_names = {"grn"};
    for (VarId v : c.ring.vars)
        if (v != var_U(i0)) {
            red.ring.vars.push_back(v);
            red.var_degree[v] = {Rat(2)};
        }
    for (auto& g : c.gens) red.gens.push_back({g.name, {g.deg[0]}});
    for (auto& [st, p] : c.diff) red.set_entry(st.first, st.second, p.substitute(kill));
    red.curvature = MultiPoly();

    HomologyOptions opt;
    opt.cutoff = cutoff ? *cutoff : default_cutoff(c, n);
    opt.expect_finite = true;
    return graded_homology(red, opt, {}, {"grn"});
}

CurvedComplex z_free_complex(const MasterComplex& m) {
    CurvedComplex c;
    c.grading_names = m.C.grading_names;
    c.koszul = m.C.koszul;
    c.allowed_diff_degrees = m.C.allowed_diff_degrees;
    for (int i = 1; i <= m.k; i++) {
        c.ring.vars.push_back(var_U(i));
        c.var_degree[var_U(i)] = m.C.var_deg(var_U(i));
    }
    c.gens = m.C.gens;
    for (auto& [st, p] : m.C.diff) {
        MultiPoly keep;
        for (auto& [mon, coeff] : p.terms()) {
            bool vfree = true;
            for (auto& [v, e] : mon.factors())
                if (var_name(v)[0] == 'V') vfree = false;
            if (vfree) keep += MultiPoly::term(coeff, mon);
        }
        c.set_entry(st.first, st.second, keep);
    }
    c.curvature = MultiPoly();
    return c;
}

GradedDims e1_page(const MasterComplex& m, int n, std::optional<Rat> cutoff) {
    CurvedComplex z = z_free_complex(m);
    // Report in grn; the z-free differential preserves A, so grn is graded here.
    CurvedComplex c;
    c.grading_names = {"grn"};
    c.ring = z.ring;
    for (VarId v : c.ring.vars) c.var_degree[v] = {Rat(2)};
    for (auto& g : z.gens)
        c.gens.push_back({g.name, {Rat(-n) * g.deg[0] + Rat(2 * (n - 1)) * g.deg[1]}});
    c.diff = z.diff;
    c.curvature = MultiPoly();
    HomologyOptions opt;
    opt.cutoff = cutoff ? *cutoff : default_cutoff(c, n) + 2 * n;
    return graded_homology(c, opt, {}, {"grn"});
}

GradedDims w0_page(const MasterComplex& m, int n) {
    if (m.punctured || m.k != 1)
        throw std::invalid_argument("w0_page needs a single-pair unpunctured complex");
    std::map<VarId, MultiPoly> subs;
    subs[var_V(1)] = Rat(n) * MultiPoly::variable(var_U(1)).pow(n - 1);

    CurvedComplex c;
    c.grading_names = {"grn"};
    c.ring.vars = {var_U(1)};
    c.ring.monomial_relations = {Monomial::var_pow(var_U(1), n)};
    c.var_degree[var_U(1)] = {Rat(2)};
    for (auto& g : m.C.gens) {
        Rat grn = Rat(-n) * g.deg[0] + Rat(2 * (n - 1)) * g.deg[1];
        c.gens.push_back({g.name, {grn}});
    }
    for (auto& [st, p] : m.C.diff) {
        MultiPoly keep;
        for (auto& [mon, coeff] : p.terms()) {
            bool ufree = true;
            for (auto& [v, e] : mon.factors())
                if (var_name(v)[0] == 'U') ufree = false;
            if (ufree) keep += MultiPoly::term(coeff, mon);
        }
        c.set_entry(st.first, st.second, keep.substitute(subs));
    }
    c.curvature = MultiPoly();
    HomologyOptions opt;
    opt.cutoff = Rat(1000000);
    return graded_homology(c, opt, {}, {"grn"});
}

Laurent1 alexander_from_staircase(const StaircaseSpec& spec) {
    spec.check();
    Laurent1 out("q");
    Rat sign(1);
    for (long e : spec.exponents) {
        out.add(Rat(2 * e), sign);
        sign = -sign;
    }
    return out;
}

std::string MasterComplex::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(C.to_json());
    nlohmann::ordered_json mj;
    std::vector<std::string> maslov, alexander;
    for (auto& g : C.gens) {
        maslov.push_back(g.deg[0].get_str());
        alexander.push_back(g.deg[1].get_str());
    }
    j["maslov"] = maslov;
    j["alexander"] = alexander;
    j["a_match"] = a;
    j["b_match"] = b;
    j["components"] = component;
    j["punctured"] = punctured;
    return j.dump(2);
}

MasterComplex MasterComplex::from_json(const std::string& text) {
    MasterComplex m;
    m.C = CurvedComplex::from_json(text);
    nlohmann::json j = nlohmann::json::parse(text);
    m.a = j.at("a_match").get<std::vector<int>>();
    m.b = j.at("b_match").get<std::vector<int>>();
    m.component = j.at("components").get<std::vector<int>>();
    m.punctured = j.at("punctured").get<bool>();
    m.k = static_cast<int>(m.a.size());
    return m;
}

}  // namespace knothom::hfk
