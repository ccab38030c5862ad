#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "leavitt/bigint.hpp"
#include "leavitt/parse_error.hpp"

namespace leavitt {

// Dense matrix over arbitrary-precision integers.  Row/column counts may be
// zero; a 0xN or Nx0 matrix is the legitimate empty map and shows up for
// quivers in which every vertex is a sink.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return data_.at(idx(i, j)); }
  const Int& operator()(int i, int j) const { return data_.at(idx(i, j)); }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix transposed() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

 private:
  size_t idx(int i, int j) const;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;  // row-major
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

// Elementary operations used by the normal-form routines.  axpy adds
// c * (row/column j) to row/column i in place.
void swap_rows(IntMatrix& m, int i, int j);
void swap_cols(IntMatrix& m, int i, int j);
void row_axpy(IntMatrix& m, int i, int j, const Int& c);
void col_axpy(IntMatrix& m, int i, int j, const Int& c);
void negate_row(IntMatrix& m, int i);
void negate_col(IntMatrix& m, int j);

// Exact determinant via fraction-free (Bareiss) elimination.  The empty 0x0
// matrix has determinant 1.  Throws std::invalid_argument when not square.
Int determinant(const IntMatrix& a);

// Whitespace-separated rows, one per line; '#' comments allowed.
IntMatrix parse_matrix_text(std::string_view text);

// Bracketed rows with aligned columns, e.g. "[  1 -2 ]".
std::string to_text(const IntMatrix& a);

}  // namespace leavitt
