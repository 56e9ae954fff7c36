#include "knothom/laurent.hpp"

#include <sstream>

#include "knothom/multipoly.hpp"

namespace knothom {

namespace {

std::string exp_str(const Rat& e) {
    if (is_integer(e)) return e.get_str();
    return "(" + e.get_str() + ")";
}

void print_coeff_factor(std::ostringstream& os, bool first, const Rat& c, const std::string& body) {
    bool neg = c < 0;
    Rat ac = neg ? Rat(-c) : c;
    if (first)
        os << (neg ? "-" : "");
    else
        os << (neg ? " - " : " + ");
    if (body.empty()) {
        os << ac.get_str();
    } else if (ac == 1) {
        os << body;
    } else {
        os << ac.get_str() << "*" << body;
    }
}

}  // namespace

std::string Laurent1::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : t_) {
        std::string body;
        if (e != 0) {
            body = var_;
            if (e != 1) body += "^" + exp_str(e);
        }
        print_coeff_factor(os, first, c, body);
        first = false;
    }
    return os.str();
}

std::string Laurent2::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : t_) {
        std::string body;
        if (k.first != 0) {
            body = v1_;
            if (k.first != 1) body += "^" + std::to_string(k.first);
        }
        if (k.second != 0) {
            if (!body.empty()) body += "*";
            body += v2_;
            if (k.second != 1) body += "^" + std::to_string(k.second);
        }
        print_coeff_factor(os, first, c, body);
        first = false;
    }
    return os.str();
}

Laurent1 quantum_int(int n) {
    if (n < 0) throw std::invalid_argument("quantum_int needs n >= 0");
    Laurent1 r("q");
    for (int i = 0; i < n; i++) r.add(Rat(n - 1 - 2 * i), Rat(1));
    return r;
}

std::optional<Laurent1> divide_one_plus_qstep(const Laurent1& f, const Rat& step) {
    if (step <= 0) throw std::invalid_argument("step must be positive");
    Laurent1 rem(f), quot(f.variable());
    while (!rem.is_zero()) {
        auto [e, c] = *rem.terms().begin();
        if (c < 0) return std::nullopt;
        quot.add(e, c);
        rem.add(e, -c);
        rem.add(e + step, -c);
        if (rem.max_exp() > f.max_exp()) return std::nullopt;
    }
    return quot;
}

Laurent1 parse_laurent1(const std::string& text, const std::string& var) {
    // Reuse the MultiPoly grammar after shifting exponents to be nonnegative:
    // scan for the most negative exponent first.
    Laurent1 out(var);
    // Tiny dedicated parser: signed sum of c*var^e with e a (possibly
    // parenthesized) rational, or bare constants.
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) i++; };
    auto parse_rat = [&]() -> Rat {
        skip();
        size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) i++;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) i++;
        if (i < text.size() && text[i] == '/') {
            i++;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) i++;
        }
        if (i == start) throw std::invalid_argument("laurent parse: expected number in '" + text + "'");
        return rat_from_string(text.substr(start, i - start));
    };
    skip();
    bool any = false;
    Rat sign(1);
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        sign = text[i] == '-' ? -1 : 1;
        i++;
    }
    for (;;) {
        skip();
        Rat coeff(1);
        bool saw_coeff = false, saw_var = false;
        if (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = parse_rat();
            saw_coeff = true;
            skip();
            if (i < text.size() && text[i] == '*') i++;
            skip();
        }
        Rat exp(0);
        if (i < text.size() && isalpha(static_cast<unsigned char>(text[i]))) {
            size_t vs = i;
            while (i < text.size() && isalpha(static_cast<unsigned char>(text[i]))) i++;
            if (text.substr(vs, i - vs) != var)
                throw std::invalid_argument("laurent parse: unexpected variable in '" + text + "'");
            exp = Rat(1);
            saw_var = true;
            skip();
            if (i < text.size() && text[i] == '^') {
                i++;
                skip();
                bool paren = i < text.size() && text[i] == '(';
                if (paren) i++;
                exp = parse_rat();
                skip();
                if (paren) {
                    if (i >= text.size() || text[i] != ')') throw std::invalid_argument("laurent parse: expected ')'");
                    i++;
                }
            }
        }
        if (!saw_coeff && !saw_var) throw std::invalid_argument("laurent parse: empty term in '" + text + "'");
        out.add(exp, sign * coeff);
        any = true;
        skip();
        if (i >= text.size()) break;
        if (text[i] == '+')
            sign = 1;
        else if (text[i] == '-')
            sign = -1;
        else
            throw std::invalid_argument("laurent parse: expected '+'/'-' in '" + text + "'");
        i++;
    }
    if (!any) throw std::invalid_argument("laurent parse: empty input");
    return out;
}

Laurent2 exact_div_diff(const Laurent2& f, int which_var) {
    // f / (x - x^-1), dividing as (f*x) / (x^2 - 1) groupwise in the other
    // variable with dense univariate long division.
    Laurent2 quot(f.var1(), f.var2());
    std::map<long, std::map<long, Rat>> groups;  // other-exp -> x-exp -> coeff
    for (auto& [k, c] : f.terms()) {
        long xe = which_var == 1 ? k.first : k.second;
        long oe = which_var == 1 ? k.second : k.first;
        groups[oe][xe + 1] = c;  // multiply through by x
    }
    for (auto& [oe, g] : groups) {
        std::map<long, Rat> rem(g);
        while (!rem.empty()) {
            auto it = std::prev(rem.end());
            long e = it->first;
            Rat c = it->second;
            long qe = e - 2;
            if (which_var == 1)
                quot.add(qe, oe, c);
            else
                quot.add(oe, qe, c);
            rem.erase(it);
            auto jt = rem.find(qe);
            if (jt == rem.end()) {
                rem.emplace(qe, c);
            } else {
                jt->second += c;
                if (jt->second == 0) rem.erase(jt);
            }
            if (!rem.empty() && std::prev(rem.end())->first < g.begin()->first - 1)
                throw NotDivisible("laurent not divisible by (" + std::string(which_var == 1 ? f.var1() : f.var2()) + " - inverse)");
        }
    }
    return quot;
}

Laurent1 exact_div_diff(const Laurent1& f) {
    if (!f.integral_exponents()) throw NotDivisible("non-integral exponents");
    Laurent1 quot(f.variable());
    std::map<long, Rat> rem;
    for (auto& [e, c] : f.terms()) rem[to_long(e) + 1] = c;
    long floor_exp = rem.empty() ? 0 : rem.begin()->first - 1;
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        long e = it->first;
        Rat c = it->second;
        quot.add(Rat(e - 2), c);
        rem.erase(it);
        rem[e - 2] += c;
        if (rem[e - 2] == 0) rem.erase(e - 2);
        if (!rem.empty() && std::prev(rem.end())->first < floor_exp)
            throw NotDivisible("laurent not divisible by (q - q^-1)");
    }
    return quot;
}

}  // namespace knothom
