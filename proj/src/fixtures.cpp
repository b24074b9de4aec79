#include "qrealize/fixtures.hpp"

namespace qrealize::fixtures {

LtiSystem paper_example() {
  const RealMatrix i2 = RealMatrix::Identity(2, 2);
  const RealMatrix z2 = RealMatrix::Zero(2, 2);
  LtiSystem sys;
  sys.A.resize(4, 4);
  sys.A << -1.3894 * i2, -0.4472 * i2, -0.2 * i2, -0.25 * i2;
  sys.B.resize(4, 2);
  sys.B << -0.4472 * i2, z2;
  sys.C.resize(2, 4);
  sys.C << -0.4472 * i2, z2;
  return sys;
}

RealMatrix paper_example_S_tilde() {
  RealMatrix s(4, 4);
  s << 0, 2.3788, 0, 0.6472,
       -2.3788, 0, -0.6472, 0,
       0, 0.6472, 0, 0.5,
       -0.6472, 0, -0.5, 0;
  return s;
}

LtiSystem trivial_example() {
  LtiSystem sys;
  sys.A.resize(2, 2);
  sys.A << 0, 1, -1, 0;
  sys.B = RealMatrix::Zero(2, 2);
  sys.C = RealMatrix::Zero(2, 2);
  return sys;
}

LtiSystem small_example() {
  LtiSystem sys;
  sys.A = RealMatrix::Zero(2, 2);
  sys.B = RealMatrix::Identity(2, 2);
  sys.C = RealMatrix::Identity(2, 2);
  return sys;
}

}  // namespace qrealize::fixtures
