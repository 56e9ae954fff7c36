#pragma once

#include <gmpxx.h>
#include <string>

namespace knothom {

// Exact rational arithmetic everywhere; no floating point in any computation.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

// mpq_class arithmetic keeps values canonical, but raw two-argument
// construction does not; normalize anything that crosses an API boundary.
inline Rat canon(Rat r) {
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
    if (!is_integer(r)) throw std::runtime_error("rational is not an integer: " + r.get_str());
    if (!r.get_num().fits_slong_p()) throw std::runtime_error("rational too large for long");
    return r.get_num().get_si();
}

// q-exponent style printing: "3", "-1/2"
inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace knothom
