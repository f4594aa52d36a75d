#pragma once

#include "eulersym/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace eulersym {

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Matrix transpose() const;
  Vector operator*(const Vector& x) const;
  Matrix operator*(const Matrix& other) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Rank over Q by Bareiss fraction-free elimination on the row-scaled
// integer matrix.
std::size_t rank(const Matrix& m);

// Bareiss determinant of a square matrix.
Rational determinant(const Matrix& m);

// Incremental fraction-free Gauss-Jordan reduction. Rows are kept as
// primitive integer vectors in reduced echelon form: every pivot is the
// first nonzero entry of its row, positive, and the only nonzero entry in
// its column. When `augmented` is set the last column is a right-hand side
// and never becomes a pivot.
class RowReducer {
 public:
  enum class Outcome { independent, dependent, inconsistent };

  explicit RowReducer(std::size_t cols, bool augmented = false);

  Outcome add_row(std::vector<Integer> row);
  Outcome add_row(const Vector& row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t unknowns() const { return augmented_ ? cols_ - 1 : cols_; }
  bool consistent() const { return consistent_; }

  // Rows sorted by pivot column.
  std::vector<std::vector<Integer>> sorted_rows() const;
  std::vector<std::size_t> sorted_pivots() const;

  // One particular solution with all free unknowns set to zero. Requires an
  // augmented, consistent system.
  Vector particular_solution() const;

 private:
  std::size_t cols_;
  bool augmented_;
  bool consistent_ = true;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

struct Echelon {
  std::vector<std::vector<Integer>> rows;  // primitive, positive pivots
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form of the row space, rows cleared to primitive
// integers. Unique for a given row space.
Echelon reduced_echelon(const Matrix& m);

// Canonical kernel basis: one vector per free column in ascending order,
// read off the reduced echelon form and scaled to a primitive integer vector
// whose free-column entry is positive.
std::vector<Vector> nullspace(const Matrix& m);

struct Solution {
  Vector x;
  std::size_t nullity = 0;  // dimension of the solution space
};

// Exact solution of m x = b with free unknowns set to zero, or nullopt if
// the system is inconsistent.
std::optional<Solution> solve(const Matrix& m, const Vector& b);

}  // namespace eulersym
