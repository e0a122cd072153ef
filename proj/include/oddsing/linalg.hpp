#pragma once

#include <cstddef>
#include <vector>

#include "oddsing/rational.hpp"

namespace oddsing {

using RatVector = std::vector<Rat>;

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, RatVector(cols)) {}

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r][c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r][c]; }
  const RatVector& row(std::size_t r) const { return data_[r]; }

  void append_row(RatVector row);
  static Matrix from_rows(std::size_t cols, std::vector<RatVector> rows);
  /// Matrix whose columns are the given vectors (all of length `height`).
  static Matrix from_columns(std::size_t height, const std::vector<RatVector>& columns);

 private:
  std::size_t cols_ = 0;
  std::vector<RatVector> data_;
};

/// Row echelon form from fraction-free (Bareiss) elimination: integer rows,
/// leftmost pivots.
struct Echelon {
  std::vector<std::vector<mpz_class>> rows;  // only the nonzero rows
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
};

Echelon bareiss_echelon(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Kernel basis in reduced form: one vector per free column f, with entry 1
/// at f and 0 at every other free column.
std::vector<RatVector> nullspace(const Matrix& a);

/// Rank of a family of vectors of equal length.
std::size_t span_rank(const std::vector<RatVector>& vectors, std::size_t length);

}  // namespace oddsing
