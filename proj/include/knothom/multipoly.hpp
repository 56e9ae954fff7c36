#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "knothom/rational.hpp"
#include "knothom/vars.hpp"

namespace knothom {

struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& m) : std::runtime_error(m) {}
};
struct InconsistentRelations : std::runtime_error {
    explicit InconsistentRelations(const std::string& m) : std::runtime_error(m) {}
};

// Guard against runaway symbolic computations.
inline int& max_exponent_limit() {
    static int limit = 512;
    return limit;
}

// Monomial: sorted (variable, exponent > 0) pairs, canonical order structural.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<VarId, int>> factors) : f_(std::move(factors)) {
        normalize();
    }
    static Monomial one() { return Monomial(); }
    static Monomial var_pow(VarId v, int e) {
        if (e == 0) return Monomial();
        return Monomial({{v, e}});
    }

    const std::vector<std::pair<VarId, int>>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    long total_degree() const {
        long d = 0;
        for (auto& [v, e] : f_) d += e;
        return d;
    }
    int exponent(VarId v) const {
        for (auto& [w, e] : f_)
            if (w == v) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        std::vector<std::pair<VarId, int>> out(f_);
        out.insert(out.end(), o.f_.begin(), o.f_.end());
        return Monomial(std::move(out));
    }

    // Exact divisibility of monomials.
    bool divisible_by(const Monomial& o) const {
        for (auto& [v, e] : o.f_)
            if (exponent(v) < e) return false;
        return true;
    }
    Monomial operator/(const Monomial& o) const {
        std::vector<std::pair<VarId, int>> out;
        for (auto& [v, e] : f_) {
            int r = e - o.exponent(v);
            if (r < 0) throw NotDivisible("monomial division");
            if (r > 0) out.push_back({v, r});
        }
        return Monomial(std::move(out));
    }

    bool operator==(const Monomial& o) const { return f_ == o.f_; }

    // Graded lexicographic: total degree, then earliest differing variable.
    bool less_than(const Monomial& o) const {
        long da = total_degree(), db = o.total_degree();
        if (da != db) return da < db;
        size_t i = 0, j = 0;
        while (i < f_.size() && j < o.f_.size()) {
            if (f_[i].first == o.f_[j].first) {
                if (f_[i].second != o.f_[j].second) return f_[i].second < o.f_[j].second;
                i++, j++;
            } else if (var_less(f_[i].first, o.f_[j].first)) {
                return false;  // we have a positive power of an earlier variable
            } else {
                return true;
            }
        }
        return i == f_.size() && j < o.f_.size() ? true : false;
    }

  private:
    void normalize() {
        std::map<VarId, int, decltype([](VarId a, VarId b) { return var_less(a, b); })> acc;
        for (auto& [v, e] : f_) {
            if (e == 0) continue;
            if (e < 0) throw std::invalid_argument("negative exponent in Monomial");
            acc[v] += e;
            if (acc[v] > max_exponent_limit()) throw std::overflow_error("exponent limit exceeded");
        }
        f_.assign(acc.begin(), acc.end());
    }

    std::vector<std::pair<VarId, int>> f_;  // sorted by var_less, exponents > 0
};

struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.less_than(b); }
};

// Exact multivariate polynomial over Q. Immutable value semantics; no zero
// coefficients stored; term map keyed by canonical graded-lex order.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Rat, MonoLess>;

    MultiPoly() = default;
    MultiPoly(const Rat& c) {  // NOLINT: implicit constant lift
        Rat cc = canon(c);
        if (cc != 0) terms_[Monomial::one()] = cc;
    }
    MultiPoly(long c) : MultiPoly(Rat(c)) {}  // NOLINT
    static MultiPoly variable(VarId v) { return term(Rat(1), Monomial::var_pow(v, 1)); }
    static MultiPoly variable(const std::string& n) { return variable(var(n)); }
    static MultiPoly term(const Rat& c, const Monomial& m) {
        MultiPoly p;
        Rat cc = canon(c);
        if (cc != 0) p.terms_[m] = cc;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::runtime_error("not a constant polynomial");
        return terms_.begin()->second;
    }
    size_t term_count() const { return terms_.size(); }

    // Leading term in graded-lex (largest monomial).
    std::pair<Monomial, Rat> leading() const {
        if (terms_.empty()) throw std::runtime_error("leading term of zero");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    long total_degree() const {
        long d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    // Weighted degree of a homogeneous polynomial; nullopt if inhomogeneous.
    std::optional<Rat> homogeneous_degree(const std::function<Rat(VarId)>& weight) const;

    std::vector<VarId> variables() const {
        std::vector<VarId> vs;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.factors())
                if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        std::sort(vs.begin(), vs.end(), [](VarId a, VarId b) { return var_less(a, b); });
        return vs;
    }

    MultiPoly operator-() const {
        MultiPoly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r(*this);
        for (auto& [m, c] : o.terms_) r.add_term(c, m);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly r(*this);
        for (auto& [m, c] : o.terms_) r.add_term(-c, m);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r;
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) r.add_term(c1 * c2, m1 * m2);
        return r;
    }
    MultiPoly operator*(const Rat& c) const {
        Rat cc = canon(c);
        if (cc == 0) return MultiPoly();
        MultiPoly r(*this);
        for (auto& [m, co] : r.terms_) co *= cc;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative power of MultiPoly");
        MultiPoly r(Rat(1));
        for (int i = 0; i < e; i++) r = r * (*this);
        return r;
    }

    // Exact substitution; assignments must cover every occurrence of their keys.
    MultiPoly substitute(const std::map<VarId, MultiPoly>& assignments) const;

    std::string str() const;

  private:
    void add_term(const Rat& c0, const Monomial& m) {
        Rat c = canon(c0);
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

// g*h = f exactly, or NotDivisible.
MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g);
bool divides(const MultiPoly& g, const MultiPoly& f);

// Triangularized system of linear substitutions v -> rhs (rhs free of all
// lead variables). Realizes quotient by an ideal of linear elements.
class Elimination {
  public:
    Elimination() = default;
    // Each relation is (lead variable, relation polynomial p); p must be
    // linear (degree <= 1) with a nonzero lead coefficient. The relation
    // imposes p = 0, i.e. lead -> lead - p/coeff(lead).
    explicit Elimination(const std::vector<std::pair<VarId, MultiPoly>>& relations);

    const std::map<VarId, MultiPoly>& substitutions() const { return subs_; }
    bool eliminates(VarId v) const { return subs_.count(v) > 0; }
    MultiPoly reduce(const MultiPoly& f) const;

  private:
    std::map<VarId, MultiPoly> subs_;
};

// Parse the canonical text syntax, e.g. "3*U1^2*V1 - 1/2*U2".
MultiPoly parse_multipoly(const std::string& text);

}  // namespace knothom
