#include "knothom/builtins.hpp"

namespace knothom::hfk {

StaircaseSpec torus_t2_spec(int k) {
    if (k < 0) throw SpecInvalid("T(2,2k+1) needs k >= 0");
    StaircaseSpec s;
    for (long e = k; e >= -k; e--) s.exponents.push_back(e);
    return s;
}

namespace {

StaircaseSpec from_gaps(long top, const std::vector<long>& gaps) {
    StaircaseSpec s;
    long cur = top;
    s.exponents.push_back(cur);
    for (long g : gaps) {
        cur -= g;
        s.exponents.push_back(cur);
    }
    return s;
}

}  // namespace

StaircaseSpec torus_t3_3kp1_spec(int k) {
    if (k < 1) throw SpecInvalid("T(3,3k+1) needs k >= 1");
    // Genus 3k; gap pattern (1,2)^k (2,1)^k.
    std::vector<long> gaps;
    for (int i = 0; i < k; i++) {
        gaps.push_back(1);
        gaps.push_back(2);
    }
    for (int i = 0; i < k; i++) {
        gaps.push_back(2);
        gaps.push_back(1);
    }
    return from_gaps(3 * k, gaps);
}

StaircaseSpec torus_t3_3kp2_spec(int k) {
    if (k < 1) throw SpecInvalid("T(3,3k+2) needs k >= 1");
    // Genus 3k+1; gap pattern (1,2)^k 1 1 (2,1)^k.
    std::vector<long> gaps;
    for (int i = 0; i < k; i++) {
        gaps.push_back(1);
        gaps.push_back(2);
    }
    gaps.push_back(1);
    gaps.push_back(1);
    for (int i = 0; i < k; i++) {
        gaps.push_back(2);
        gaps.push_back(1);
    }
    return from_gaps(3 * k + 1, gaps);
}

StaircaseSpec torus_spec_from_name(const std::string& name) {
    if (name.size() < 4 || name[0] != 'T') throw std::invalid_argument("not a torus knot name: " + name);
    auto comma = name.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("not a torus knot name: " + name);
    int p = std::stoi(name.substr(1, comma - 1));
    int q = std::stoi(name.substr(comma + 1));
    if (p == 2 && q >= 1 && q % 2 == 1) return torus_t2_spec((q - 1) / 2);
    if (p == 3 && q % 3 == 1 && q > 3) return torus_t3_3kp1_spec((q - 1) / 3);
    if (p == 3 && q % 3 == 2 && q > 3) return torus_t3_3kp2_spec((q - 2) / 3);
    throw std::invalid_argument("unsupported torus knot: " + name);
}

namespace {

MasterComplex unknot_master() {
    MasterComplex m;
    m.k = 1;
    m.a = {1};
    m.b = {1};
    m.component = {1};
    m.C = master_shell(1);
    m.C.gens.push_back({"x", {Rat(0), Rat(0)}});
    m.C.curvature = MultiPoly();
    return m;
}

MasterComplex figure8_master() {
    // Single staircase generator plus one box summand; thin, delta = 0.
    MasterComplex m;
    m.k = 1;
    m.a = {1};
    m.b = {1};
    m.component = {1};
    m.C = master_shell(1);
    m.C.gens.push_back({"u", {Rat(0), Rat(0)}});
    m.C.gens.push_back({"b1", {Rat(0), Rat(0)}});
    m.C.gens.push_back({"b2", {Rat(1), Rat(1)}});
    m.C.gens.push_back({"b3", {Rat(-1), Rat(-1)}});
    m.C.gens.push_back({"b4", {Rat(0), Rat(0)}});
    MultiPoly U = MultiPoly::variable(var_U(1));
    MultiPoly V = MultiPoly::variable(var_V(1));
    m.C.set_entry(1, 2, U);
    m.C.set_entry(1, 3, V);
    m.C.set_entry(2, 4, V);
    m.C.set_entry(3, 4, -U);
    m.C.curvature = MultiPoly();
    return m;
}

}  // namespace

MasterComplex builtin_knot(const std::string& name) {
    if (name == "unknot") return unknot_master();
    if (name == "unknot-punctured") return puncture_cone(unknot_master(), 1);
    if (name == "trefoil") return staircase(torus_t2_spec(1));
    if (name == "T2,3-punctured" || name == "trefoil-punctured")
        return puncture_cone(staircase(torus_t2_spec(1)), 1);
    if (name == "figure8") return figure8_master();
    return staircase(torus_spec_from_name(name));
}

std::vector<std::string> builtin_names() {
    return {"unknot", "unknot-punctured", "trefoil",  "T2,3",  "T2,3-punctured", "T2,5",
            "T2,7",   "T2,9",             "T3,4",     "T3,5",  "T3,7",           "T3,10",
            "T3,13",  "figure8"};
}

}  // namespace knothom::hfk
