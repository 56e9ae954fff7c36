#include "knothom/curved_complex.hpp"

#include <json.hpp>

namespace knothom {

int CurvedComplex::gen_index(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); i++)
        if (gens[i].name == name) return static_cast<int>(i);
    throw std::out_of_range("no generator named " + name);
}

std::vector<Rat> CurvedComplex::var_deg(VarId v) const {
    auto it = var_degree.find(v);
    if (it == var_degree.end()) throw std::out_of_range("no grading for variable " + var_name(v));
    return it->second;
}

std::vector<Rat> CurvedComplex::monomial_degree(const Monomial& m) const {
    std::vector<Rat> d(grading_names.size(), Rat(0));
    for (auto& [v, e] : m.factors()) {
        auto vd = var_deg(v);
        for (size_t i = 0; i < d.size(); i++) d[i] += vd[i] * e;
    }
    return d;
}

std::optional<std::vector<Rat>> CurvedComplex::entry_degree(int src, int tgt) const {
    MultiPoly p = entry(src, tgt);
    if (p.is_zero()) return std::nullopt;
    std::optional<std::vector<Rat>> deg;
    for (auto& [m, c] : p.terms()) {
        std::vector<Rat> d = monomial_degree(m);
        for (size_t i = 0; i < d.size(); i++)
            d[i] += gens[static_cast<size_t>(tgt)].deg[i] - gens[static_cast<size_t>(src)].deg[i];
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

long CurvedComplex::koszul_parity(int gi) const {
    Rat p(0);
    const auto& d = gens[static_cast<size_t>(gi)].deg;
    for (size_t i = 0; i < koszul.size() && i < d.size(); i++) p += koszul[i] * d[i];
    long v = to_long(p);
    return ((v % 2) + 2) % 2;
}

MultiPoly CurvedComplex::computed_curvature() const {
    // d^2 entry (s,u) = sum_t d(t,u) d(s,t); must be omega on the diagonal
    // and zero elsewhere.
    std::map<std::pair<int, int>, MultiPoly> sq;
    for (auto& [st, p1] : diff) {
        for (auto& [tu, p2] : diff) {
            if (st.second != tu.first) continue;
            auto key = std::make_pair(st.first, tu.second);
            auto it = sq.find(key);
            if (it == sq.end())
                sq[key] = ring.reduce(p1 * p2);
            else
                it->second = ring.reduce(it->second + p1 * p2);
        }
    }
    MultiPoly omega;
    bool seen = false;
    for (auto& [k, p] : sq) {
        if (p.is_zero()) continue;
        if (k.first != k.second)
            throw NotCurved("d^2 has off-diagonal entry " + gens[static_cast<size_t>(k.first)].name + " -> " +
                            gens[static_cast<size_t>(k.second)].name + ": " + p.str());
        if (!seen) {
            omega = p;
            seen = true;
        } else if (omega != p) {
            throw NotCurved("d^2 diagonal is not scalar: " + omega.str() + " vs " + p.str());
        }
    }
    if (seen) {
        // Every diagonal entry must equal omega, including the zero ones.
        for (size_t i = 0; i < gens.size(); i++) {
            auto it = sq.find({static_cast<int>(i), static_cast<int>(i)});
            if (it == sq.end() || it->second != omega)
                throw NotCurved("d^2 diagonal is not scalar at " + gens[i].name);
        }
    }
    return omega;
}

std::optional<std::string> CurvedComplex::validate() const {
    for (auto& [st, p] : diff) {
        auto deg = entry_degree(st.first, st.second);
        if (!deg)
            return "entry " + gens[static_cast<size_t>(st.first)].name + " -> " +
                   gens[static_cast<size_t>(st.second)].name + " is not homogeneous: " + p.str();
        if (!allowed_diff_degrees.empty()) {
            bool ok = false;
            for (auto& a : allowed_diff_degrees) ok = ok || a == *deg;
            if (!ok)
                return "entry " + gens[static_cast<size_t>(st.first)].name + " -> " +
                       gens[static_cast<size_t>(st.second)].name + " has disallowed degree (" + p.str() + ")";
        }
        if (!koszul.empty() && koszul_parity(st.first) == koszul_parity(st.second))
            return "entry " + gens[static_cast<size_t>(st.first)].name + " -> " +
                   gens[static_cast<size_t>(st.second)].name + " does not flip Koszul parity";
    }
    try {
        MultiPoly omega = computed_curvature();
        if (ring.reduce(curvature - omega) != MultiPoly())
            return "declared curvature " + curvature.str() + " != computed " + omega.str();
    } catch (const NotCurved& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

CurvedComplex CurvedComplex::tensor(const CurvedComplex& c1, const CurvedComplex& c2) {
    if (c1.grading_names != c2.grading_names) throw RingMismatch("grading schemes differ");
    if (c1.koszul != c2.koszul) throw RingMismatch("koszul functionals differ");

    CurvedComplex out;
    out.grading_names = c1.grading_names;
    out.koszul = c1.koszul;
    if (c1.ring == c2.ring) {
        out.ring = c1.ring;
        out.var_degree = c1.var_degree;
    } else {
        for (VarId v : c1.ring.vars)
            if (c2.ring.has_var(v)) throw RingMismatch("rings neither equal nor disjoint");
        out.ring = c1.ring;
        out.ring.vars.insert(out.ring.vars.end(), c2.ring.vars.begin(), c2.ring.vars.end());
        out.ring.monomial_relations.insert(out.ring.monomial_relations.end(),
                                           c2.ring.monomial_relations.begin(), c2.ring.monomial_relations.end());
        out.var_degree = c1.var_degree;
        for (auto& [v, d] : c2.var_degree) out.var_degree[v] = d;
    }
    for (auto& a : c1.allowed_diff_degrees) out.allowed_diff_degrees.push_back(a);
    for (auto& a : c2.allowed_diff_degrees)
        if (std::find(out.allowed_diff_degrees.begin(), out.allowed_diff_degrees.end(), a) ==
            out.allowed_diff_degrees.end())
            out.allowed_diff_degrees.push_back(a);

    size_t n1 = c1.size(), n2 = c2.size();
    auto index = [n2](size_t i, size_t j) { return static_cast<int>(i * n2 + j); };
    for (size_t i = 0; i < n1; i++) {
        for (size_t j = 0; j < n2; j++) {
            Gen g;
            g.name = c1.gens[i].name + "|" + c2.gens[j].name;
            g.deg.resize(c1.grading_names.size());
            for (size_t k = 0; k < g.deg.size(); k++) g.deg[k] = c1.gens[i].deg[k] + c2.gens[j].deg[k];
            out.gens.push_back(std::move(g));
        }
    }
    // d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy
    for (auto& [st, p] : c1.diff)
        for (size_t j = 0; j < n2; j++)
            out.set_entry(index(static_cast<size_t>(st.first), j), index(static_cast<size_t>(st.second), j), p);
    for (auto& [st, p] : c2.diff)
        for (size_t i = 0; i < n1; i++) {
            MultiPoly q = c1.koszul_parity(static_cast<int>(i)) == 0 ? p : -p;
            out.set_entry(index(i, static_cast<size_t>(st.first)), index(i, static_cast<size_t>(st.second)), q);
        }
    out.curvature = out.ring.reduce(c1.curvature + c2.curvature);
    return out;
}

CurvedComplex CurvedComplex::gaussian_cancelled() const {
    CurvedComplex c(*this);
    for (;;) {
        int cs = -1, ct = -1;
        Rat cval;
        for (auto& [st, p] : c.diff) {
            if (st.first != st.second && p.is_constant() && !p.is_zero()) {
                cs = st.first;
                ct = st.second;
                cval = p.constant_value();
                break;
            }
        }
        if (cs < 0) return c;

        CurvedComplex next;
        next.ring = c.ring;
        next.grading_names = c.grading_names;
        next.var_degree = c.var_degree;
        next.allowed_diff_degrees = c.allowed_diff_degrees;
        next.koszul = c.koszul;
        next.curvature = c.curvature;
        std::vector<int> keep, remap(c.size(), -1);
        for (int i = 0; i < static_cast<int>(c.size()); i++) {
            if (i == cs || i == ct) continue;
            remap[static_cast<size_t>(i)] = static_cast<int>(next.gens.size());
            next.gens.push_back(c.gens[static_cast<size_t>(i)]);
            keep.push_back(i);
        }
        // Zig-zag: d'(w,z) = d(w,z) - d(w,ct) * d(cs,z) / cval
        for (int w : keep) {
            for (int z : keep) {
                MultiPoly p = c.entry(w, z) - c.entry(w, ct) * c.entry(cs, z) * (Rat(1) / cval);
                next.set_entry(remap[static_cast<size_t>(w)], remap[static_cast<size_t>(z)], p);
            }
        }
        c = std::move(next);
    }
}

CurvedComplex CurvedComplex::shifted(const std::vector<Rat>& delta) const {
    CurvedComplex c(*this);
    for (auto& g : c.gens)
        for (size_t i = 0; i < delta.size(); i++) g.deg[i] += delta[i];
    return c;
}

CurvedComplex CurvedComplex::renamed_vars(const std::map<VarId, VarId>& mapping) const {
    CurvedComplex c(*this);
    auto rename_var = [&](VarId v) {
        auto it = mapping.find(v);
        return it == mapping.end() ? v : it->second;
    };
    for (auto& v : c.ring.vars) v = rename_var(v);
    std::map<VarId, MultiPoly> subst;
    for (auto& [v, w] : mapping) subst[v] = MultiPoly::variable(w);
    auto rename_poly = [&](const MultiPoly& p) { return p.substitute(subst); };
    for (auto& r : c.ring.monomial_relations) {
        std::vector<std::pair<VarId, int>> fs;
        for (auto& [v, e] : r.factors()) fs.push_back({rename_var(v), e});
        r = Monomial(std::move(fs));
    }
    std::map<VarId, std::vector<Rat>> vd;
    for (auto& [v, d] : c.var_degree) vd[rename_var(v)] = d;
    c.var_degree = std::move(vd);
    std::map<std::pair<int, int>, MultiPoly> nd;
    for (auto& [st, p] : c.diff) nd[st] = rename_poly(p);
    c.diff = std::move(nd);
    c.curvature = rename_poly(c.curvature);
    return c;
}

std::string CurvedComplex::to_json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json ring_j;
    for (VarId v : ring.vars) ring_j["variables"].push_back(var_name(v));
    ring_j["monomial_relations"] = nlohmann::ordered_json::array();
    for (auto& m : ring.monomial_relations) ring_j["monomial_relations"].push_back(MultiPoly::term(Rat(1), m).str());
    j["ring"] = ring_j;
    j["gradings"] = grading_names;
    nlohmann::ordered_json vdeg;
    for (VarId v : ring.vars) {
        std::vector<std::string> d;
        for (auto& x : var_deg(v)) d.push_back(x.get_str());
        vdeg[var_name(v)] = d;
    }
    j["variable_degrees"] = vdeg;
    j["generators"] = nlohmann::ordered_json::array();
    for (auto& g : gens) {
        nlohmann::ordered_json gj;
        gj["name"] = g.name;
        std::vector<std::string> d;
        for (auto& x : g.deg) d.push_back(x.get_str());
        gj["grading"] = d;
        j["generators"].push_back(gj);
    }
    j["differential"] = nlohmann::ordered_json::array();
    for (auto& [st, p] : diff)
        j["differential"].push_back({gens[static_cast<size_t>(st.first)].name,
                                     gens[static_cast<size_t>(st.second)].name, p.str()});
    j["curvature"] = curvature.str();
    return j.dump(2);
}

CurvedComplex CurvedComplex::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CurvedComplex c;
    for (auto& v : j.at("ring").at("variables")) c.ring.vars.push_back(var(v.get<std::string>()));
    for (auto& r : j.at("ring").at("monomial_relations")) {
        MultiPoly p = parse_multipoly(r.get<std::string>());
        c.ring.monomial_relations.push_back(p.leading().first);
    }
    c.grading_names = j.at("gradings").get<std::vector<std::string>>();
    for (auto& [name, degs] : j.at("variable_degrees").items()) {
        std::vector<Rat> d;
        for (auto& x : degs) d.push_back(rat_from_string(x.get<std::string>()));
        c.var_degree[var(name)] = d;
    }
    for (auto& gj : j.at("generators")) {
        Gen g;
        g.name = gj.at("name").get<std::string>();
        for (auto& x : gj.at("grading")) g.deg.push_back(rat_from_string(x.get<std::string>()));
        c.gens.push_back(std::move(g));
    }
    for (auto& dj : j.at("differential")) {
        int s = c.gen_index(dj.at(0).get<std::string>());
        int t = c.gen_index(dj.at(1).get<std::string>());
        c.set_entry(s, t, parse_multipoly(dj.at(2).get<std::string>()));
    }
    c.curvature = parse_multipoly(j.at("curvature").get<std::string>());
    return c;
}

}  // namespace knothom
