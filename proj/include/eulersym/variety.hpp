#pragma once

#include "eulersym/legendre.hpp"
#include "eulersym/symbol.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eulersym {

// Point of P(V_P) stored by weight: block 0 is t, block 1 is the W-block,
// block k >= 2 holds the values of f^k on the canonical basis of F^k.
class AmbientPoint {
 public:
  AmbientPoint() = default;
  explicit AmbientPoint(std::vector<Vector> blocks) : blocks_(std::move(blocks)) {}

  static AmbientPoint zeros(const std::vector<std::size_t>& layout);

  std::size_t block_count() const { return blocks_.size(); }
  const Vector& block(unsigned weight) const { return blocks_.at(weight); }
  Vector& block(unsigned weight) { return blocks_.at(weight); }
  const std::vector<Vector>& blocks() const { return blocks_; }
  const Rational& t() const { return blocks_.at(0).at(0); }
  const Vector& w() const { return blocks_.at(1); }

  std::vector<std::size_t> layout() const;
  Vector flat() const;
  bool is_zero() const;
  std::optional<unsigned> lowest_weight() const;   // lowest nonzero block
  std::optional<unsigned> highest_weight() const;  // highest nonzero block

  // Scaled to a primitive integer vector whose first nonzero coordinate (in
  // block order t, w, f^2, ..., f^r) is positive.
  AmbientPoint canonical() const;
  bool projectively_equal(const AmbientPoint& other) const;

  friend bool operator==(const AmbientPoint&, const AmbientPoint&) = default;

 private:
  std::vector<Vector> blocks_;
};

// V_P = C + W + (F^2)^* + ... + (F^r)^* for the symbol system of P.
class AmbientSpace {
 public:
  explicit AmbientSpace(Polynomial p);

  const Polynomial& polynomial() const { return p_; }
  const SymbolSystem& system() const { return system_; }
  unsigned rank() const { return system_.rank; }
  std::size_t num_vars() const { return system_.num_vars; }
  std::vector<std::size_t> layout() const;
  std::size_t dimension() const { return system_.ambient_dimension(); }

  AmbientPoint origin() const;          // [1:0:...:0]
  AmbientPoint terminal_point() const;  // [0:...:0:1], requires dim F^r = 1
  void require_compatible(const AmbientPoint& x) const;

 private:
  Polynomial p_;
  SymbolSystem system_;
};

AmbientPoint embed(const AmbientSpace& a, const Rational& t, std::span<const Rational> w);

// Action of g_v: t' = t, w' = w + t v, and for k >= 2
// f'^k = sum_{l=2}^k C(k,l) f^l o iota_v^{k-l} + k iota_w o iota_v^{k-1} + t iota_v^k.
AmbientPoint translate(const AmbientSpace& a, std::span<const Rational> v, const AmbientPoint& x);

// lambda . x = [t : lambda w : lambda^2 f^2 : ... : lambda^r f^r].
AmbientPoint torus_act(const Rational& lambda, const AmbientPoint& x);

enum class LimitDirection { to_zero, to_infinity };

struct BBLimit {
  AmbientPoint point;
  unsigned weight = 0;
};

BBLimit bb_limit(const AmbientPoint& x, LimitDirection direction);

// lim_{s -> infinity} translate(s v, p): coordinates are polynomials in s and
// the limit keeps the coefficients of the top s-degree.
AmbientPoint curve_limit_at_infinity(const AmbientSpace& a, const AmbientPoint& p, std::span<const Rational> v);

// t^{k-1} f^k_j - Q^{(k)}_j(w). Only k = 2 comes with the quadric relations
// of the embedding; k >= 3 relations are additional necessary conditions.
struct Relation {
  unsigned weight = 2;
  std::size_t index = 0;
  Polynomial form;
  bool quadric() const { return weight == 2; }
  Rational evaluate(const AmbientPoint& x) const;
  std::string label() const;
};

std::vector<Relation> quadric_relations(const AmbientSpace& a);

// True iff every generated relation vanishes at x. Necessary for x in M_P,
// not sufficient.
bool relation_membership(const AmbientSpace& a, const AmbientPoint& x);

// Coordinates of embed(t, w) as polynomials in (t, w_1, ..., w_m).
std::vector<std::vector<Polynomial>> embed_symbolic(const AmbientSpace& a);

// Substitutes embed_symbolic into every relation; returns the labels of
// relations that do not vanish identically.
std::vector<std::string> relations_failing_symbolically(const AmbientSpace& a);

struct NecessaryCondition {
  enum class Outcome { pass, fail, flag, skipped };
  std::string id;           // "a".."e"
  std::string description;
  Outcome outcome = Outcome::skipped;
  std::string detail;
};

std::string to_string(NecessaryCondition::Outcome o);

struct SmoothnessReport {
  std::vector<NecessaryCondition> items;
  std::string verdict;  // never claims smoothness
  bool passes_all = false;
  std::optional<Polynomial> p_star;
  std::optional<SquarefreeVerdict> squarefree;
};

// Necessary conditions for smoothness of M_P: (a) EKP-homaloidal,
// (b) order-(r-1) partials span W*, (c) dim F^j = dim F^{r-j},
// (d) reducedness probe (flag only: outside the classification otherwise),
// (e) dim F^k_{P_*} = dim F^k_P.
SmoothnessReport smoothness_report(const Polynomial& p, const LegendreConfig& config = {},
                                   std::size_t squarefree_trials = 8);

}  // namespace eulersym
