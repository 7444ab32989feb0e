#include "assoc2/fixtures.hpp"

namespace assoc2 {

TwoTermAlgebra fix_z() { return TwoTermAlgebra(1, 1); }

TwoTermAlgebra fix_u() {
  TwoTermAlgebra g(1, 1);
  g.l2_00(0, 0, 0) = 1;
  g.l2_01(0, 0, 0) = 1;
  g.l2_10(0, 0, 0) = 1;
  return g;
}

TwoTermAlgebra fix_d() {
  TwoTermAlgebra g(1, 1);
  g.d(0, 0) = 1;
  return g;
}

TwoTermAlgebra fix_l() {
  TwoTermAlgebra g(1, 1);
  g.l3(0, 0, 0, 0) = 1;
  return g;
}

CrossedModule fix_x() {
  CrossedModule x(1, 1);
  x.p.mul(0, 0, 0) = 1;
  x.h.left(0, 0, 0) = 1;
  x.h.right(0, 0, 0) = 1;
  return x;
}

CrossedModule fix_x_ff() {
  CrossedModule x = fix_x();
  x.f(0, 0) = 1;
  return x;
}

}  // namespace assoc2
