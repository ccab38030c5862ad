#include "leavitt/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace leavitt {

namespace {

// g = x*a + y*b with g = gcd(a, b) >= 0.  Works for either sign.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = a < 0 ? -1 : 1;
    y = 0;
    return abs_int(a);
  }
  Int x1, y1;
  const Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Left-multiplies rows r0, r1 by [[x, y], [-bs, as]] (determinant 1, since
// x*as + y*bs = 1).  Replaces the remainder-swap Euclid cascade: repeatedly
// subtracting quotient multiples and swapping lets intermediate entries grow
// without bound on edge matrices around 40x40, while the single balanced
// combination keeps them near the size of the inputs.
void combine_rows(IntMatrix& mat, int r0, int r1, const Int& x, const Int& y,
                  const Int& as, const Int& bs) {
  for (int c = 0; c < mat.cols(); ++c) {
    const Int m0 = mat(r0, c), m1 = mat(r1, c);
    mat(r0, c) = x * m0 + y * m1;
    mat(r1, c) = as * m1 - bs * m0;
  }
}

void combine_cols(IntMatrix& mat, int c0, int c1, const Int& x, const Int& y,
                  const Int& as, const Int& bs) {
  for (int r = 0; r < mat.rows(); ++r) {
    const Int m0 = mat(r, c0), m1 = mat(r, c1);
    mat(r, c0) = x * m0 + y * m1;
    mat(r, c1) = as * m1 - bs * m0;
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const int m = a.rows(), n = a.cols();
  SmithForm sf{IntMatrix::identity(m), a, IntMatrix::identity(n), {}};
  IntMatrix& d = sf.d;
  const int steps = std::min(m, n);

  for (int t = 0; t < steps; ++t) {
    // Pivot: entry of minimal absolute value in the trailing block.
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (d(i, j) == 0) continue;
        if (pi < 0 || abs_int(d(i, j)) < abs_int(d(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero; remaining factors stay 0

    if (pi != t) {
      swap_rows(d, t, pi);
      swap_rows(sf.u, t, pi);
    }
    if (pj != t) {
      swap_cols(d, t, pj);
      swap_cols(sf.v, t, pj);
    }

    for (bool settled = false; !settled;) {
      settled = true;
      // Clear column t: exact quotients where the pivot divides, one gcd
      // combination otherwise (which installs the gcd as the new pivot).
      for (int i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Int a0 = d(t, t), b0 = d(i, t);
        if (b0 % a0 == 0) {
          const Int q = b0 / a0;
          row_axpy(d, i, t, -q);
          row_axpy(sf.u, i, t, -q);
        } else {
          Int x, y;
          const Int g = ext_gcd(a0, b0, x, y);
          combine_rows(d, t, i, x, y, a0 / g, b0 / g);
          combine_rows(sf.u, t, i, x, y, a0 / g, b0 / g);
        }
      }
      // Clear row t.  A gcd combination here mixes column t back in, but each
      // such event strictly shrinks the pivot, so re-running settles quickly.
      bool column_dirty = false;
      for (int j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Int a0 = d(t, t), b0 = d(t, j);
        if (b0 % a0 == 0) {
          const Int q = b0 / a0;
          col_axpy(d, j, t, -q);
          col_axpy(sf.v, j, t, -q);
        } else {
          Int x, y;
          const Int g = ext_gcd(a0, b0, x, y);
          combine_cols(d, t, j, x, y, a0 / g, b0 / g);
          combine_cols(sf.v, t, j, x, y, a0 / g, b0 / g);
          column_dirty = true;
        }
      }
      if (column_dirty) {
        for (int i = t + 1; i < m; ++i)
          if (d(i, t) != 0) {
            settled = false;
            break;
          }
      }
      if (!settled) continue;
      // Restore divisibility of the trailing block by folding an offending
      // row into row t; the next pass shrinks the pivot to a gcd.
      for (int i = t + 1; i < m && settled; ++i)
        for (int j = t + 1; j < n && settled; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_axpy(d, t, i, 1);
            row_axpy(sf.u, t, i, 1);
            settled = false;
          }
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(sf.u, t);
    }
  }

  sf.factors.reserve(steps);
  for (int t = 0; t < steps; ++t) sf.factors.push_back(d(t, t));
  return sf;
}

int rank(const IntMatrix& a) {
  auto sf = smith_normal_form(a);
  int r = 0;
  for (const Int& f : sf.factors)
    if (f != 0) ++r;
  return r;
}

bool is_unimodular(const IntMatrix& a) {
  return a.is_square() && abs_int(determinant(a)) == 1;
}

}  // namespace leavitt
