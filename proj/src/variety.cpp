#include "eulersym/variety.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eulersym {

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Rational power(const Rational& x, unsigned e) {
  Rational p = 1;
  for (unsigned i = 0; i < e; ++i) p *= x;
  return p;
}

// M[k][l] is the matrix of iota_v^{k-l}: F^k -> F^l for 0 <= l <= k <= r,
// with F^0 = C and F^1 = W^* in the monomial basis. Full contraction is
// evaluation, so M[k][0] is the row of values Q^{(k)}_j(v).
std::vector<std::vector<Matrix>> contraction_tower(const AmbientSpace& a, std::span<const Rational> v) {
  const auto& s = a.system();
  const unsigned r = s.rank;
  std::vector<std::vector<Matrix>> tower(r + 1);
  for (unsigned k = 0; k <= r; ++k) {
    const auto& basis = s[k].basis();
    Matrix to_scalar(1, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) to_scalar(0, j) = basis[j].evaluate(v);
    tower[k].push_back(std::move(to_scalar));
    for (unsigned l = 1; l <= k; ++l) {
      tower[k].push_back(l == k ? Matrix::identity(basis.size()) : contraction_matrix(s, v, k, l));
    }
  }
  return tower;
}

// Adds factor * M^T f into out.
void accumulate_transposed(Vector& out, const Matrix& m, const Vector& f, const Integer& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0 && f[i] != 0) acc += m(i, j) * f[i];
    if (acc != 0) out[j] += acc * factor;
  }
}

}  // namespace

AmbientPoint AmbientPoint::zeros(const std::vector<std::size_t>& layout) {
  std::vector<Vector> blocks;
  for (auto n : layout) blocks.emplace_back(n);
  return AmbientPoint(std::move(blocks));
}

std::vector<std::size_t> AmbientPoint::layout() const {
  std::vector<std::size_t> l;
  for (const auto& b : blocks_) l.push_back(b.size());
  return l;
}

Vector AmbientPoint::flat() const {
  Vector out;
  for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool AmbientPoint::is_zero() const {
  for (const auto& b : blocks_)
    for (const auto& x : b)
      if (x != 0) return false;
  return true;
}

std::optional<unsigned> AmbientPoint::lowest_weight() const {
  for (unsigned k = 0; k < blocks_.size(); ++k)
    for (const auto& x : blocks_[k])
      if (x != 0) return k;
  return std::nullopt;
}

std::optional<unsigned> AmbientPoint::highest_weight() const {
  for (unsigned k = static_cast<unsigned>(blocks_.size()); k-- > 0;)
    for (const auto& x : blocks_[k])
      if (x != 0) return k;
  return std::nullopt;
}

AmbientPoint AmbientPoint::canonical() const {
  if (is_zero()) throw std::invalid_argument("AmbientPoint: the zero vector is not a projective point");
  auto prim = primitive_integer(flat());
  auto first = std::find_if(prim.begin(), prim.end(), [](const Integer& z) { return z != 0; });
  const bool flip = *first < 0;
  AmbientPoint out = *this;
  std::size_t pos = 0;
  for (auto& b : out.blocks_)
    for (auto& x : b) x = flip ? Rational(-prim[pos++]) : Rational(prim[pos++]);
  return out;
}

bool AmbientPoint::projectively_equal(const AmbientPoint& other) const {
  if (layout() != other.layout()) return false;
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  return canonical() == other.canonical();
}

AmbientSpace::AmbientSpace(Polynomial p) : p_(std::move(p)), system_(symbol_system_of(p_)) {}

std::vector<std::size_t> AmbientSpace::layout() const {
  std::vector<std::size_t> l{1, num_vars()};
  for (unsigned k = 2; k <= rank(); ++k) l.push_back(system_[k].dimension());
  return l;
}

AmbientPoint AmbientSpace::origin() const {
  auto x = AmbientPoint::zeros(layout());
  x.block(0)[0] = 1;
  return x;
}

AmbientPoint AmbientSpace::terminal_point() const {
  auto l = layout();
  if (l.back() != 1) throw std::logic_error("terminal_point: top block is not one-dimensional");
  auto x = AmbientPoint::zeros(l);
  x.block(rank())[0] = 1;
  return x;
}

void AmbientSpace::require_compatible(const AmbientPoint& x) const {
  if (x.layout() != layout()) throw std::invalid_argument("AmbientPoint: block layout does not match the ambient space");
}

AmbientPoint embed(const AmbientSpace& a, const Rational& t, std::span<const Rational> w) {
  if (w.size() != a.num_vars()) throw std::invalid_argument("embed: vector length mismatch");
  if (t == 0 && std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; }))
    throw std::invalid_argument("embed: (t, w) must not be zero");
  const unsigned r = a.rank();
  auto x = AmbientPoint::zeros(a.layout());
  x.block(0)[0] = power(t, r);
  const Rational tw = power(t, r - 1);
  for (std::size_t i = 0; i < w.size(); ++i) x.block(1)[i] = tw * w[i];
  for (unsigned k = 2; k <= r; ++k) {
    const Rational scale = power(t, r - k);
    const auto& basis = a.system()[k].basis();
    for (std::size_t j = 0; j < basis.size(); ++j) x.block(k)[j] = scale * basis[j].evaluate(w);
  }
  return x;
}

AmbientPoint translate(const AmbientSpace& a, std::span<const Rational> v, const AmbientPoint& x) {
  a.require_compatible(x);
  if (v.size() != a.num_vars()) throw std::invalid_argument("translate: vector length mismatch");
  if (x.is_zero()) throw std::invalid_argument("translate: zero vector is not a point");
  const auto tower = contraction_tower(a, v);
  auto y = AmbientPoint::zeros(a.layout());
  for (unsigned k = 0; k <= a.rank(); ++k)
    for (unsigned l = 0; l <= k; ++l) accumulate_transposed(y.block(k), tower[k][l], x.block(l), binomial(k, l));
  return y;
}

AmbientPoint torus_act(const Rational& lambda, const AmbientPoint& x) {
  if (lambda == 0) throw std::invalid_argument("torus_act: lambda must be nonzero");
  AmbientPoint y = x;
  Rational scale = 1;
  for (unsigned k = 0; k < y.block_count(); ++k) {
    for (auto& c : y.block(k)) c *= scale;
    scale *= lambda;
  }
  return y;
}

BBLimit bb_limit(const AmbientPoint& x, LimitDirection direction) {
  auto weight = direction == LimitDirection::to_zero ? x.lowest_weight() : x.highest_weight();
  if (!weight) throw std::invalid_argument("bb_limit: zero vector is not a point");
  auto y = AmbientPoint::zeros(x.layout());
  y.block(*weight) = x.block(*weight);
  return {std::move(y), *weight};
}

AmbientPoint curve_limit_at_infinity(const AmbientSpace& a, const AmbientPoint& p, std::span<const Rational> v) {
  a.require_compatible(p);
  if (p.is_zero()) throw std::invalid_argument("curve_limit_at_infinity: zero vector is not a point");
  if (v.size() != a.num_vars()) throw std::invalid_argument("curve_limit_at_infinity: vector length mismatch");
  const auto tower = contraction_tower(a, v);
  // Since iota_{sv}^{k-l} = s^{k-l} iota_v^{k-l}, block k of g_{sv} p has
  // s^d coefficient C(k, k-d) M[k][k-d]^T f^{k-d}.
  for (unsigned d = a.rank() + 1; d-- > 0;) {
    auto y = AmbientPoint::zeros(a.layout());
    for (unsigned k = d; k <= a.rank(); ++k)
      accumulate_transposed(y.block(k), tower[k][k - d], p.block(k - d), binomial(k, k - d));
    if (!y.is_zero()) return y;
  }
  throw std::logic_error("curve_limit_at_infinity: constant term vanished for a nonzero point");
}

Rational Relation::evaluate(const AmbientPoint& x) const {
  return power(x.t(), weight - 1) * x.block(weight).at(index) - form.evaluate(x.w());
}

std::string Relation::label() const {
  return "k=" + std::to_string(weight) + ",j=" + std::to_string(index + 1);
}

std::vector<Relation> quadric_relations(const AmbientSpace& a) {
  std::vector<Relation> out;
  for (unsigned k = 2; k <= a.rank(); ++k) {
    const auto& basis = a.system()[k].basis();
    for (std::size_t j = 0; j < basis.size(); ++j) out.push_back(Relation{k, j, basis[j]});
  }
  return out;
}

bool relation_membership(const AmbientSpace& a, const AmbientPoint& x) {
  a.require_compatible(x);
  for (const auto& rel : quadric_relations(a))
    if (rel.evaluate(x) != 0) return false;
  return true;
}

std::vector<std::vector<Polynomial>> embed_symbolic(const AmbientSpace& a) {
  const std::size_t m = a.num_vars();
  const unsigned r = a.rank();
  const std::size_t n = m + 1;
  std::vector<std::size_t> shift(m);
  std::iota(shift.begin(), shift.end(), 1);
  const Polynomial t = Polynomial::variable(n, 0);
  std::vector<std::vector<Polynomial>> blocks(r + 1);
  blocks[0].push_back(t.pow(r));
  for (std::size_t i = 0; i < m; ++i) blocks[1].push_back(t.pow(r - 1) * Polynomial::variable(n, i + 1));
  for (unsigned k = 2; k <= r; ++k)
    for (const auto& q : a.system()[k].basis()) blocks[k].push_back(t.pow(r - k) * relabel(q, n, shift));
  return blocks;
}

std::vector<std::string> relations_failing_symbolically(const AmbientSpace& a) {
  auto blocks = embed_symbolic(a);
  std::vector<std::string> failing;
  for (const auto& rel : quadric_relations(a)) {
    Polynomial lhs = blocks[0][0].pow(rel.weight - 1) * blocks[rel.weight][rel.index];
    Polynomial rhs = rel.form.substitute(blocks[1]);
    if (lhs != rhs) failing.push_back(rel.label());
  }
  return failing;
}

}  // namespace eulersym
