#include "eulersym/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eulersym {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: data size does not match dimensions");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::operator*(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("Matrix * vector: dimension mismatch");
  Vector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = (*this)(i, j);
      if (a != 0 && x[j] != 0) acc += a * x[j];
    }
    y[i] = acc;
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("Matrix * Matrix: dimension mismatch");
  Matrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        if (other(k, j) != 0) p(i, j) += a * other(k, j);
    }
  return p;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

namespace {

// Clears denominators row by row. Returns the per-row multipliers.
std::vector<std::vector<Integer>> integer_rows(const Matrix& m, std::vector<Integer>* multipliers = nullptr) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  if (multipliers) multipliers->assign(m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    if (multipliers) (*multipliers)[i] = l;
  }
  return a;
}

struct BareissResult {
  std::size_t rank = 0;
  bool swapped_odd = false;
  Integer last_pivot = 1;
};

// In-place Bareiss forward elimination. Entries below and right of each
// pivot stay integral because every division is exact.
BareissResult bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols) {
  BareissResult res;
  Integer prev = 1;
  const std::size_t rows = a.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      res.swapped_odd = !res.swapped_odd;
    }
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (lead == 0 || a[r][j] == 0) {
          if (a[i][j] == 0) continue;
          Integer v = piv * a[i][j];
          mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
          continue;
        }
        Integer v = piv * a[i][j] - lead * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = content(v);
  if (g > 1) {
    for (auto& x : v)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

// row := a*row - b*other, with a = other[p]/g, b = row[p]/g.
void eliminate(std::vector<Integer>& row, const std::vector<Integer>& other, std::size_t p) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), row[p].get_mpz_t(), other[p].get_mpz_t());
  Integer a = other[p] / g;
  Integer b = row[p] / g;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (other[j] == 0) {
      if (a != 1 && row[j] != 0) row[j] *= a;
    } else {
      row[j] = a * row[j] - b * other[j];
    }
  }
  make_primitive(row);
}

}  // namespace

std::size_t rank(const Matrix& m) {
  auto a = integer_rows(m);
  return bareiss(a, m.cols()).rank;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  if (m.rows() == 0) return 1;
  std::vector<Integer> mult;
  auto a = integer_rows(m, &mult);
  auto res = bareiss(a, m.cols());
  if (res.rank < m.rows()) return 0;
  Rational d(res.last_pivot);
  for (const auto& l : mult) d /= l;
  return res.swapped_odd ? Rational(-d) : d;
}

RowReducer::RowReducer(std::size_t cols, bool augmented) : cols_(cols), augmented_(augmented) {
  if (augmented && cols == 0) throw std::invalid_argument("RowReducer: augmented system needs a column");
}

RowReducer::Outcome RowReducer::add_row(const Vector& row) { return add_row(primitive_integer(row)); }

RowReducer::Outcome RowReducer::add_row(std::vector<Integer> x) {
  if (x.size() != cols_) throw std::invalid_argument("RowReducer: row length mismatch");
  make_primitive(x);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (x[pivots_[k]] != 0) eliminate(x, rows_[k], pivots_[k]);
  }
  const std::size_t n = unknowns();
  std::size_t q = 0;
  while (q < n && x[q] == 0) ++q;
  if (q == n) {
    if (augmented_ && x[n] != 0) {
      consistent_ = false;
      return Outcome::inconsistent;
    }
    return Outcome::dependent;
  }
  if (x[q] < 0)
    for (auto& e : x) e = -e;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k][q] != 0) eliminate(rows_[k], x, q);
  }
  rows_.push_back(std::move(x));
  pivots_.push_back(q);
  return Outcome::independent;
}

std::vector<std::vector<Integer>> RowReducer::sorted_rows() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<std::vector<Integer>> out;
  out.reserve(order.size());
  for (auto k : order) out.push_back(rows_[k]);
  return out;
}

std::vector<std::size_t> RowReducer::sorted_pivots() const {
  auto p = pivots_;
  std::sort(p.begin(), p.end());
  return p;
}

Vector RowReducer::particular_solution() const {
  if (!augmented_) throw std::logic_error("particular_solution: system is not augmented");
  if (!consistent_) throw std::logic_error("particular_solution: system is inconsistent");
  const std::size_t n = unknowns();
  Vector x(n);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    x[pivots_[k]] = Rational(rows_[k][n], rows_[k][pivots_[k]]);
    x[pivots_[k]].canonicalize();
  }
  return x;
}

Echelon reduced_echelon(const Matrix& m) {
  RowReducer red(m.cols());
  for (auto& row : integer_rows(m)) red.add_row(std::move(row));
  return {red.sorted_rows(), red.sorted_pivots()};
}

std::vector<Vector> nullspace(const Matrix& m) {
  Echelon e = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      if (e.rows[k][f] == 0) continue;
      v[e.pivots[k]] = Rational(-e.rows[k][f], e.rows[k][e.pivots[k]]);
      v[e.pivots[k]].canonicalize();
    }
    auto prim = primitive_integer(v);
    basis.emplace_back(prim.begin(), prim.end());
  }
  return basis;
}

std::optional<Solution> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  RowReducer red(m.cols() + 1, true);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector row = m.row(i);
    row.push_back(b[i]);
    if (red.add_row(row) == RowReducer::Outcome::inconsistent) return std::nullopt;
  }
  return Solution{red.particular_solution(), m.cols() - red.rank()};
}

}  // namespace eulersym
