#include "knothom/multipoly.hpp"

#include <cctype>
#include <sstream>

namespace knothom {

std::optional<Rat> MultiPoly::homogeneous_degree(const std::function<Rat(VarId)>& weight) const {
    std::optional<Rat> deg;
    for (auto& [m, c] : terms_) {
        Rat d(0);
        for (auto& [v, e] : m.factors()) d += weight(v) * e;
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return std::nullopt;
        }
    }
    return deg;
}

MultiPoly MultiPoly::substitute(const std::map<VarId, MultiPoly>& assignments) const {
    MultiPoly out;
    for (auto& [m, c] : terms_) {
        MultiPoly t(c);
        std::vector<std::pair<VarId, int>> rest;
        for (auto& [v, e] : m.factors()) {
            auto it = assignments.find(v);
            if (it == assignments.end())
                rest.push_back({v, e});
            else
                t = t * it->second.pow(e);
        }
        out += t * MultiPoly::term(Rat(1), Monomial(std::move(rest)));
    }
    return out;
}

MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (g.is_constant()) return f * (Rat(1) / g.constant_value());
    MultiPoly q, r(f);
    auto [gm, gc] = g.leading();
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading();
        if (!rm.divisible_by(gm))
            throw NotDivisible("no exact quotient: remainder " + r.str());
        MultiPoly t = MultiPoly::term(rc / gc, rm / gm);
        q += t;
        r -= t * g;
    }
    return q;
}

bool divides(const MultiPoly& g, const MultiPoly& f) {
    try {
        exact_div(f, g);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

Elimination::Elimination(const std::vector<std::pair<VarId, MultiPoly>>& relations) {
    // Solve each relation for its lead variable, then substitute until the
    // right-hand sides are free of every lead variable.
    for (auto& [lead, p] : relations) {
        if (subs_.count(lead)) throw InconsistentRelations("duplicate lead variable " + var_name(lead));
        MultiPoly coeff, rest;
        for (auto& [m, c] : p.terms()) {
            if (m.total_degree() > 1) throw InconsistentRelations("relation not linear: " + p.str());
            if (m.exponent(lead) == 1)
                coeff += MultiPoly(c);
            else
                rest += MultiPoly::term(c, m);
        }
        if (coeff.is_zero() || !coeff.is_constant())
            throw InconsistentRelations("lead variable absent in relation: " + p.str());
        subs_[lead] = rest * (Rat(-1) / coeff.constant_value());
    }
    for (size_t round = 0; round <= subs_.size(); round++) {
        bool changed = false;
        for (auto& [v, rhs] : subs_) {
            MultiPoly next = rhs.substitute(subs_);
            if (next != rhs) {
                rhs = next;
                changed = true;
            }
        }
        if (!changed) return;
        if (round == subs_.size()) throw InconsistentRelations("relations do not triangularize");
    }
}

MultiPoly Elimination::reduce(const MultiPoly& f) const { return f.substitute(subs_); }

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending canonical order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        bool neg = c < 0;
        Rat ac = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit = (ac == 1) && !it->first.is_one();
        if (!unit) os << ac.get_str();
        bool need_star = !unit;
        for (auto& [v, e] : it->first.factors()) {
            if (need_star) os << "*";
            os << var_name(v);
            if (e != 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) i++;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            i++;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + why);
    }

    Rat parse_rational() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) i++;
        if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i]))) fail("expected number");
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) i++;
        std::string num = s.substr(start, i - start);
        if (accept('/')) {
            skip_ws();
            size_t ds = i;
            while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) i++;
            if (i == ds) fail("expected denominator");
            num += "/" + s.substr(ds, i - ds);
        }
        return rat_from_string(num);
    }

    int parse_int_exponent() {
        skip_ws();
        bool paren = accept('(');
        Rat e = parse_rational();
        if (paren && !accept(')')) fail("expected ')'");
        if (!is_integer(e)) fail("exponent must be an integer here");
        return static_cast<int>(to_long(e));
    }

    std::string parse_varname() {
        skip_ws();
        size_t start = i;
        if (i >= s.size() || !isalpha(static_cast<unsigned char>(s[i]))) fail("expected variable");
        while (i < s.size() && isalpha(static_cast<unsigned char>(s[i]))) i++;
        while (i < s.size() && (isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_')) i++;
        return s.substr(start, i - start);
    }

    MultiPoly parse_term() {
        MultiPoly t(Rat(1));
        bool saw_factor = false;
        for (;;) {
            char c = peek();
            if (c == '\0' || c == '+' || c == '-') break;
            if (saw_factor) {
                if (!accept('*')) break;
            }
            c = peek();
            if (isdigit(static_cast<unsigned char>(c))) {
                t = t * MultiPoly(parse_rational());
            } else if (isalpha(static_cast<unsigned char>(c))) {
                VarId v = var(parse_varname());
                int e = accept('^') ? parse_int_exponent() : 1;
                if (e < 0) fail("negative exponents are Laurent-only");
                t = t * MultiPoly::term(Rat(1), Monomial::var_pow(v, e));
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            saw_factor = true;
        }
        if (!saw_factor) fail("empty term");
        return t;
    }

    MultiPoly parse_poly() {
        MultiPoly out;
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        for (;;) {
            MultiPoly t = parse_term();
            out += neg ? -t : t;
            if (eof()) break;
            if (accept('-'))
                neg = true;
            else if (accept('+'))
                neg = false;
            else
                fail("expected '+' or '-'");
        }
        return out;
    }
};

}  // namespace

MultiPoly parse_multipoly(const std::string& text) {
    Parser p(text);
    if (p.eof()) throw std::invalid_argument("empty polynomial text");
    if (p.peek() == '0') {
        size_t save = p.i;
        p.i++;
        if (p.eof()) return MultiPoly();
        p.i = save;
    }
    MultiPoly r = p.parse_poly();
    return r;
}

}  // namespace knothom
