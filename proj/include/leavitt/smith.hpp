#pragma once

#include <vector>

#include "leavitt/int_matrix.hpp"

namespace leavitt {

// Smith normal form with transformation certificates: u * a * v == d, where u
// and v are unimodular and d is diagonal with non-negative entries d1 | d2 |
// ... (zeros trailing).  factors holds the full diagonal of d, length
// min(rows, cols), including trailing zeros.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::vector<Int> factors;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Number of nonzero invariant factors.
int rank(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

}  // namespace leavitt
