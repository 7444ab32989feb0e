#pragma once

#include "assoc2/algebra2.hpp"
#include "assoc2/xmod.hpp"

namespace assoc2 {

// Small named 2-algebras on basis e (degree 0) and f (degree 1).
TwoTermAlgebra fix_z();  // all structure zero
TwoTermAlgebra fix_u();  // e.e = e, e.f = f.e = f
TwoTermAlgebra fix_d();  // d f = e, products zero
TwoTermAlgebra fix_l();  // l3(e,e,e) = f, everything else zero


// p = Q{e}, e.e = e; h = Q{f} with e.f = f.e = f.
CrossedModule fix_x();     // f -> 0
CrossedModule fix_x_ff();  // f -> e

}  // namespace assoc2
