#pragma once

#include "eulersym/linalg.hpp"
#include "eulersym/poly.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulersym {

// A subspace of degree-k forms held by its canonical basis: the reduced
// echelon form of the span (columns in descending graded-lex order), each
// row cleared to a primitive integer polynomial with positive leading
// coefficient.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  GradedSubspace(std::size_t num_vars, unsigned degree) : num_vars_(num_vars), degree_(degree) {}

  static GradedSubspace span(std::size_t num_vars, unsigned degree, const std::vector<Polynomial>& generators);
  static GradedSubspace full(std::size_t num_vars, unsigned degree);

  std::size_t num_vars() const { return num_vars_; }
  unsigned degree() const { return degree_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Polynomial>& basis() const { return basis_; }

  // Coordinates in the canonical basis, or nullopt when phi is not in the span.
  std::optional<Vector> coordinates(const Polynomial& phi) const;
  bool contains(const Polynomial& phi) const { return coordinates(phi).has_value(); }
  bool contains(const GradedSubspace& other) const;

  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t num_vars_ = 0;
  unsigned degree_ = 0;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> pivots_;  // leading monomial of each basis element
};

struct SymbolSystem {
  unsigned rank = 0;
  std::size_t num_vars = 0;
  std::vector<GradedSubspace> components;  // F^0 .. F^rank

  // Span dimension of the order-(r-1) partials of the generating
  // polynomial; may be below num_vars even though F^1 is always the full
  // space of linear forms.
  std::optional<std::size_t> raw_linear_rank;
  bool degenerate_in_linear_degree() const { return raw_linear_rank && *raw_linear_rank < num_vars; }

  const GradedSubspace& operator[](unsigned k) const { return components.at(k); }
  std::vector<std::size_t> profile() const;
  std::size_t ambient_dimension() const;  // 1 + m + sum_{k>=2} dim F^k
};

// F^k = span of the order-(r-k) partials for k >= 2, F^1 = all linear forms,
// F^0 = constants. Throws for zero or non-homogeneous input.
SymbolSystem symbol_system_of(const Polynomial& p);

// Assembles a system from explicit components (no normalization).
SymbolSystem make_symbol_system(std::size_t num_vars, std::vector<GradedSubspace> components);

struct CatalecticantMap {
  unsigned order = 0;                    // j
  std::vector<Monomial> row_monomials;   // degree r - j
  std::vector<Monomial> column_monomials;  // differential monomials of order j
  Matrix matrix;                         // column alpha = coefficients of d^alpha P
};

CatalecticantMap catalecticant(const Polynomial& p, unsigned order);

struct RankSymmetryReport {
  std::vector<std::size_t> ranks;  // rank of the order-j catalecticant, j = 0..r
  std::vector<bool> symmetric;     // ranks[j] == ranks[r - j]
  bool holds = true;
};

RankSymmetryReport rank_symmetry_check(const Polynomial& p);

// Largest space of degree-(k+1) forms whose contraction by every vector
// lands in f.
GradedSubspace prolong(const GradedSubspace& f);

struct SymbolVerdict {
  bool passed = true;
  std::string failure;                 // empty on pass
  std::optional<unsigned> degree;      // k of the failing inclusion F^{k+1} in prolong(F^k)
  std::optional<Polynomial> witness;   // basis element of F^{k+1} leaving F^k
  std::optional<std::size_t> direction;  // e_i with iota_{e_i} witness not in F^k
};

SymbolVerdict verify_symbol_system(const SymbolSystem& s);

// Matrix of iota_v^{from-to}: F^from -> F^to in the canonical bases;
// column j holds the coordinates of the image of the j-th basis element.
// Throws ContractionError when an image leaves F^to.
Matrix contraction_matrix(const SymbolSystem& s, std::span<const Rational> v, unsigned from, unsigned to);

class ContractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eulersym
