#pragma once

#include "eulersym/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eulersym {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<unsigned> exps);

  static Monomial unit(std::size_t num_vars, std::size_t var, unsigned power = 1);

  std::size_t num_vars() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  // Product of factorials of the exponents.
  Integer factorial_weight() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

// Graded lexicographic order with x1 > x2 > ... > xm.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

// All monomials of total degree d in num_vars variables, in descending
// graded-lex order (x1^d first).
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);

// Sparse multivariate polynomial over Q. Terms iterate in descending
// graded-lex order; zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t var);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  // Degree when homogeneous and nonzero.
  std::optional<unsigned> homogeneous_degree() const;
  // Smallest and largest total degree present (zero polynomial: nullopt).
  std::optional<std::pair<unsigned, unsigned>> degree_range() const;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(std::size_t var) const;
  Polynomial differentiate(const Monomial& alpha) const;  // d^alpha
  Rational evaluate(std::span<const Rational> point) const;
  // P(images_1, ..., images_m); all images share one variable count.
  Polynomial substitute(std::span<const Polynomial> images) const;

  // Canonical text: descending graded-lex terms, coefficients as p/q,
  // variables x1..xm (or the given names).
  std::string to_string() const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void require_same_vars(const Polynomial& other) const;

  std::size_t num_vars_ = 0;
  Terms terms_;
};

std::vector<Polynomial> gradient(const Polynomial& p);

// All order-j partial derivatives d^alpha P, |alpha| = j, alpha in the
// order of monomials_of_degree.
std::vector<Polynomial> partials(const Polynomial& p, unsigned order);

Polynomial directional_derivative(const Polynomial& p, std::span<const Rational> v);

// iota_v phi = (1/k) D_v phi for phi homogeneous of degree k >= 1, so that
// contracting k times gives phi(v).
Polynomial contract(const Polynomial& phi, std::span<const Rational> v);
Polynomial contract_power(const Polynomial& phi, std::span<const Rational> v, unsigned times);

// B(s, u) = P(s a + u b) as a polynomial in two variables (s, u).
Polynomial restrict_to_plane(const Polynomial& p, std::span<const Rational> a, std::span<const Rational> b);

// Renames variable i to target_index[i] inside a polynomial ring of
// target_vars variables.
Polynomial relabel(const Polynomial& p, std::size_t target_vars, std::span<const std::size_t> target_index);

struct SquarefreeTrial {
  Vector a;
  Vector b;
  unsigned gcd_degree = 0;  // degree of gcd(B(s,1), dB/ds)
  bool passed = false;
};

struct SquarefreeVerdict {
  bool squarefree = false;
  // True when every trial detected a repeated factor.
  bool all_trials_failed = false;
  std::optional<std::size_t> witness_trial;
  std::vector<SquarefreeTrial> trials;
};

// Probabilistic reducedness test along random lines. A failing trial shows a
// repeated factor of the restriction; "squarefree" holds with high
// probability only.
SquarefreeVerdict squarefree_probe(const Polynomial& p, std::size_t trials = 8, std::uint64_t seed = 0);

// Univariate helpers on dense coefficient vectors (index = power).
namespace univariate {
using Coeffs = std::vector<Rational>;
void trim(Coeffs& c);
Coeffs derivative(const Coeffs& c);
Coeffs remainder(Coeffs a, const Coeffs& b);
Coeffs gcd(Coeffs a, Coeffs b);  // monic, empty for gcd(0,0)
}  // namespace univariate

}  // namespace eulersym
