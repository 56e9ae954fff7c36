#pragma once

#include <string>
#include <vector>

#include "knothom/master_complex.hpp"

namespace knothom::hfk {

// Alexander exponent lists for the torus-knot staircases.
StaircaseSpec torus_t2_spec(int twist);        // T(2, 2k+1), twist = k
StaircaseSpec torus_t3_3kp1_spec(int k);       // T(3, 3k+1)
StaircaseSpec torus_t3_3kp2_spec(int k);       // T(3, 3k+2)

// Built-in master complexes: unknot, unknot-punctured, T2,3 (zigzag),
// T2,3-punctured (the six-generator cone), T2,<odd>, T3,<m>, figure8.
// Torus knots are staircases; figure8 is literature-derived box data.
MasterComplex builtin_knot(const std::string& name);
std::vector<std::string> builtin_names();

// T<p>,<q> torus-knot name parsing ("T2,7" / "T3,10"); throws otherwise.
StaircaseSpec torus_spec_from_name(const std::string& name);

}  // namespace knothom::hfk
