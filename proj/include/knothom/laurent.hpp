#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knothom/rational.hpp"

namespace knothom {

struct PoleAtSpecialization : std::runtime_error {
    explicit PoleAtSpecialization(const std::string& m) : std::runtime_error(m) {}
};

// Laurent polynomial in one formal variable with rational exponents
// (gradings may be half-integers). Canonical sorted term map.
class Laurent1 {
  public:
    explicit Laurent1(std::string var = "q") : var_(std::move(var)) {}
    static Laurent1 monomial(const Rat& exp, const Rat& coeff, std::string var = "q") {
        Laurent1 p(std::move(var));
        p.add(exp, coeff);
        return p;
    }

    const std::string& variable() const { return var_; }
    const std::map<Rat, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const Rat& exp0, const Rat& coeff0) {
        Rat exp = canon(exp0), coeff = canon(coeff0);
        if (coeff == 0) return;
        auto it = t_.find(exp);
        if (it == t_.end()) {
            t_.emplace(exp, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) t_.erase(it);
        }
    }

    Laurent1 operator+(const Laurent1& o) const {
        Laurent1 r(*this);
        for (auto& [e, c] : o.t_) r.add(e, c);
        return r;
    }
    Laurent1 operator-(const Laurent1& o) const {
        Laurent1 r(*this);
        for (auto& [e, c] : o.t_) r.add(e, -c);
        return r;
    }
    Laurent1 operator*(const Laurent1& o) const {
        Laurent1 r(var_);
        for (auto& [e1, c1] : t_)
            for (auto& [e2, c2] : o.t_) r.add(e1 + e2, c1 * c2);
        return r;
    }
    Laurent1 operator*(const Rat& c) const {
        Laurent1 r(var_);
        for (auto& [e, co] : t_) r.add(e, co * c);
        return r;
    }
    bool operator==(const Laurent1& o) const { return t_ == o.t_; }
    bool operator!=(const Laurent1& o) const { return !(*this == o); }

    Laurent1 shifted(const Rat& d) const {
        Laurent1 r(var_);
        for (auto& [e, c] : t_) r.add(e + d, c);
        return r;
    }
    // q -> q^-1
    Laurent1 reversed() const {
        Laurent1 r(var_);
        for (auto& [e, c] : t_) r.add(-e, c);
        return r;
    }

    Rat min_exp() const { return t_.empty() ? Rat(0) : t_.begin()->first; }
    Rat max_exp() const { return t_.empty() ? Rat(0) : std::prev(t_.end())->first; }
    Rat span() const { return t_.empty() ? Rat(0) : max_exp() - min_exp(); }
    bool nonnegative() const {
        for (auto& [e, c] : t_)
            if (c < 0) return false;
        return true;
    }
    Rat eval_at_one() const {
        Rat s(0);
        for (auto& [e, c] : t_) s += c;
        return s;
    }
    // Requires integer exponents.
    Rat eval_at_minus_one() const {
        Rat s(0);
        for (auto& [e, c] : t_) s += (to_long(e) % 2 == 0 ? c : -c);
        return s;
    }
    bool integral_exponents() const {
        for (auto& [e, c] : t_)
            if (!is_integer(e)) return false;
        return true;
    }

    std::string str() const;  // ascending exponents

  private:
    std::string var_;
    std::map<Rat, Rat> t_;
};

inline Laurent1 operator*(const Rat& c, const Laurent1& p) { return p * c; }

// Quantum integer [n]_q = (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n).
Laurent1 quantum_int(int n);

// Divide f by (1 + var^step) exactly with a nonnegative quotient, if possible.
// Returns quotient; nullopt when no such decomposition exists.
std::optional<Laurent1> divide_one_plus_qstep(const Laurent1& f, const Rat& step);

Laurent1 parse_laurent1(const std::string& text, const std::string& var = "q");

// Laurent polynomial in two formal variables with integer exponents
// (HOMFLY-PT values in (a, q); Poincare polynomials in (q, t)).
class Laurent2 {
  public:
    Laurent2(std::string var1 = "a", std::string var2 = "q") : v1_(std::move(var1)), v2_(std::move(var2)) {}
    static Laurent2 monomial(long e1, long e2, const Rat& c, std::string var1 = "a", std::string var2 = "q") {
        Laurent2 p(std::move(var1), std::move(var2));
        p.add(e1, e2, c);
        return p;
    }

    const std::map<std::pair<long, long>, Rat>& terms() const { return t_; }
    const std::string& var1() const { return v1_; }
    const std::string& var2() const { return v2_; }
    bool is_zero() const { return t_.empty(); }

    void add(long e1, long e2, const Rat& c0) {
        Rat c = canon(c0);
        if (c == 0) return;
        auto key = std::make_pair(e1, e2);
        auto it = t_.find(key);
        if (it == t_.end()) {
            t_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    Laurent2 operator+(const Laurent2& o) const {
        Laurent2 r(*this);
        for (auto& [k, c] : o.t_) r.add(k.first, k.second, c);
        return r;
    }
    Laurent2 operator-(const Laurent2& o) const {
        Laurent2 r(*this);
        for (auto& [k, c] : o.t_) r.add(k.first, k.second, -c);
        return r;
    }
    Laurent2 operator*(const Laurent2& o) const {
        Laurent2 r(v1_, v2_);
        for (auto& [k1, c1] : t_)
            for (auto& [k2, c2] : o.t_) r.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        return r;
    }
    Laurent2 operator*(const Rat& c) const {
        Laurent2 r(v1_, v2_);
        for (auto& [k, co] : t_) r.add(k.first, k.second, co * c);
        return r;
    }
    bool operator==(const Laurent2& o) const { return t_ == o.t_; }
    bool operator!=(const Laurent2& o) const { return !(*this == o); }

    // var1 -> var2^n, collapsing to a Laurent polynomial in var2.
    Laurent1 substitute_var1_power(long n) const {
        Laurent1 r(v2_);
        for (auto& [k, c] : t_) r.add(Rat(k.first * n + k.second), c);
        return r;
    }

    std::string str() const;  // ascending (e1, e2)

  private:
    std::string v1_, v2_;
    std::map<std::pair<long, long>, Rat> t_;
};

// Exact division of a two-variable Laurent polynomial by (x - x^-1) in the
// chosen variable (1 or 2); throws NotDivisible if the quotient is not exact.
Laurent2 exact_div_diff(const Laurent2& f, int which_var);

// Exact division of a one-variable Laurent polynomial by (q - q^-1).
Laurent1 exact_div_diff(const Laurent1& f);

}  // namespace knothom
