#ifndef ALEXFOAM_ALEXANDER_HPP
#define ALEXFOAM_ALEXANDER_HPP

#include "alexfoam/braid.hpp"
#include "alexfoam/qalg.hpp"

namespace alexfoam {

// Alexander polynomial of the closure (which must be a knot), computed from
// the reduced Burau representation, normalized symmetric with value 1 at t=1.
// The variable of the returned polynomial is t.
LaurentPoly alexander(const BraidWord& w);

// same polynomial with t = q^2 substituted; this is the graded Euler
// characteristic the homology must reproduce
LaurentPoly alexander_q(const BraidWord& w);

}  // namespace alexfoam

#endif
