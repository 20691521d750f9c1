#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <vector>

namespace Eigen {

// Dense matrices over GMP integers: all we need from the scalar is exact
// ring arithmetic, so the traits are mostly bookkeeping.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace pptower {

using Int = mpz_class;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Diagonal of the Smith normal form, restricted to its nonzero part.
// invariants[0] | invariants[1] | ... and every entry is positive.
struct SmithForm {
  long rank = 0;
  std::vector<Int> invariants;
};

// Smith normal form by elementary row/column operations with smallest-pivot
// selection. Exact over arbitrary-precision integers; intermediate entry
// growth is why the scalar is mpz and not a machine word.
SmithForm smith_normal_form(IntMatrix a);

}  // namespace pptower
