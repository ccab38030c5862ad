#include "leavitt/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace leavitt {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  data_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

size_t IntMatrix::idx(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("matrix index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range for " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  return static_cast<size_t>(i) * cols_ + j;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product shape mismatch: " +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()));
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

void swap_rows(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

void row_axpy(IntMatrix& m, int i, int j, const Int& c) {
  for (int col = 0; col < m.cols(); ++col) m(i, col) += c * m(j, col);
}

void col_axpy(IntMatrix& m, int i, int j, const Int& c) {
  for (int row = 0; row < m.rows(); ++row) m(row, i) += c * m(row, j);
}

void negate_row(IntMatrix& m, int i) {
  for (int c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
}

void negate_col(IntMatrix& m, int j) {
  for (int r = 0; r < m.rows(); ++r) m(r, j) = -m(r, j);
}

Int determinant(const IntMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n && swap < 0; ++i)
        if (m(i, k) != 0) swap = i;
      if (swap < 0) return 0;
      swap_rows(m, k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;  // exact division
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

IntMatrix parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::vector<std::vector<Int>> rows;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<Int> row;
    std::string tok;
    while (ls >> tok) {
      try {
        row.emplace_back(tok);
      } catch (const std::exception&) {
        throw ParseError(lineno, 1, "invalid integer '" + tok + "'");
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(lineno, 1,
                       "ragged matrix: expected " +
                           std::to_string(rows.front().size()) + " entries, got " +
                           std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(lineno == 0 ? 1 : lineno, 1, "empty matrix");
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::string to_text(const IntMatrix& a) {
  std::vector<size_t> width(a.cols(), 1);
  std::vector<std::vector<std::string>> cells(a.rows(), std::vector<std::string>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      cells[i][j] = a(i, j).str();
      width[j] = std::max(width[j], cells[i][j].size());
    }
  std::ostringstream os;
  if (a.rows() == 0 || a.cols() == 0) {
    os << "[ ] (" << a.rows() << "x" << a.cols() << ")\n";
    return os.str();
  }
  for (int i = 0; i < a.rows(); ++i) {
    os << "[";
    for (int j = 0; j < a.cols(); ++j) {
      os << ' ';
      os << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
    }
    os << " ]\n";
  }
  return os.str();
}

}  // namespace leavitt
