#include "eulersym/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eulersym {

Monomial::Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::unit(std::size_t num_vars, std::size_t var, unsigned power) {
  std::vector<unsigned> e(num_vars, 0);
  e.at(var) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.num_vars() != num_vars()) throw std::invalid_argument("Monomial: variable-count mismatch");
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<unsigned> e(other.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exps_[i];
  return Monomial(std::move(e));
}

Integer Monomial::factorial_weight() const {
  Integer w = 1;
  for (unsigned e : exps_) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), e);
    w *= f;
  }
  return w;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& x = a.exponents();
  const auto& y = b.exponents();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return x.size() < y.size();
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back(std::vector<unsigned>{});
    return out;
  }
  std::vector<unsigned> e(num_vars, 0);
  // Lexicographically descending compositions of `degree`.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == num_vars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(num_vars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t var) {
  Polynomial p(num_vars);
  p.add_term(Monomial::unit(num_vars, var), 1);
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.num_vars());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.degree();
}

std::optional<std::pair<unsigned, unsigned>> Polynomial::degree_range() const {
  if (terms_.empty()) return std::nullopt;
  return std::make_pair(terms_.rbegin()->first.degree(), terms_.begin()->first.degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.num_vars() != num_vars_) throw std::invalid_argument("Polynomial: variable-count mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_vars(const Polynomial& other) const {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("Polynomial: variable-count mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_vars(b);
  Polynomial p(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& [m, v] : p.terms_) v = -v;
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(num_vars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= num_vars_) throw std::out_of_range("derivative: variable index out of range");
  Polynomial d(num_vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    std::vector<unsigned> e = m.exponents();
    --e[var];
    d.add_term(Monomial(std::move(e)), c * m[var]);
  }
  return d;
}

Polynomial Polynomial::differentiate(const Monomial& alpha) const {
  if (alpha.num_vars() != num_vars_) throw std::invalid_argument("differentiate: variable-count mismatch");
  Polynomial d(num_vars_);
  for (const auto& [m, c] : terms_) {
    if (!alpha.divides(m)) continue;
    // d^alpha x^m = m!/(m-alpha)! x^(m-alpha)
    Integer factor = 1;
    for (std::size_t i = 0; i < num_vars_; ++i)
      for (unsigned k = 0; k < alpha[i]; ++k) factor *= (m[i] - k);
    d.add_term(alpha.quotient_of(m), c * factor);
  }
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw std::invalid_argument("evaluate: point length does not match variable count");
  // Powers are cached per variable to keep repeated exponents cheap.
  std::vector<std::vector<Rational>> powers(num_vars_);
  auto power = [&](std::size_t i, unsigned e) -> const Rational& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(1);
    while (p.size() <= e) p.push_back(p.back() * point[i]);
    return p[e];
  };
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < num_vars_ && t != 0; ++i)
      if (m[i]) t *= power(i, m[i]);
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != num_vars_) throw std::invalid_argument("substitute: need one image per variable");
  std::size_t target = images.empty() ? 0 : images[0].num_vars();
  for (const auto& q : images)
    if (q.num_vars() != target) throw std::invalid_argument("substitute: images disagree on variable count");
  std::vector<std::vector<Polynomial>> powers(num_vars_);
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(constant(target, 1));
    while (p.size() <= e) p.push_back(p.back() * images[i]);
    return p[e];
  };
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t i = 0; i < num_vars_ && !t.is_zero(); ++i)
      if (m[i]) t = t * power(i, m[i]);
    out += t;
  }
  return out;
}

std::string Polynomial::to_string() const {
  std::vector<std::string> names(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) names[i] = "x" + std::to_string(i + 1);
  return to_string(names);
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() != num_vars_) throw std::invalid_argument("to_string: need one name per variable");
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    bool unit = a == 1 && m.degree() > 0;
    if (!unit) s += eulersym::to_string(a);
    bool need_star = !unit;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (m[i] == 0) continue;
      if (need_star) s += "*";
      s += names[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
      need_star = true;
    }
  }
  return s;
}

std::vector<Polynomial> gradient(const Polynomial& p) {
  std::vector<Polynomial> g;
  g.reserve(p.num_vars());
  for (std::size_t i = 0; i < p.num_vars(); ++i) g.push_back(p.derivative(i));
  return g;
}

std::vector<Polynomial> partials(const Polynomial& p, unsigned order) {
  std::vector<Polynomial> out;
  for (const auto& alpha : monomials_of_degree(p.num_vars(), order)) out.push_back(p.differentiate(alpha));
  return out;
}

Polynomial directional_derivative(const Polynomial& p, std::span<const Rational> v) {
  if (v.size() != p.num_vars()) throw std::invalid_argument("directional_derivative: vector length mismatch");
  Polynomial d(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < p.num_vars(); ++i) {
      if (m[i] == 0 || v[i] == 0) continue;
      std::vector<unsigned> e = m.exponents();
      --e[i];
      d.add_term(Monomial(std::move(e)), c * v[i] * m[i]);
    }
  }
  return d;
}

Polynomial contract(const Polynomial& phi, std::span<const Rational> v) {
  auto deg = phi.homogeneous_degree();
  if (phi.is_zero()) return phi;
  if (!deg) throw std::invalid_argument("contract: form is not homogeneous");
  if (*deg == 0) throw std::invalid_argument("contract: cannot contract a degree-0 form");
  return directional_derivative(phi, v) * Rational(1, *deg);
}

Polynomial contract_power(const Polynomial& phi, std::span<const Rational> v, unsigned times) {
  Polynomial out = phi;
  for (unsigned i = 0; i < times && !out.is_zero(); ++i) out = contract(out, v);
  return out;
}

Polynomial restrict_to_plane(const Polynomial& p, std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != p.num_vars() || b.size() != p.num_vars())
    throw std::invalid_argument("restrict_to_plane: vector length mismatch");
  std::vector<Polynomial> images;
  images.reserve(p.num_vars());
  for (std::size_t i = 0; i < p.num_vars(); ++i) {
    Polynomial line(2);
    line.add_term(Monomial::unit(2, 0), a[i]);
    line.add_term(Monomial::unit(2, 1), b[i]);
    images.push_back(std::move(line));
  }
  return p.substitute(images);
}

Polynomial relabel(const Polynomial& p, std::size_t target_vars, std::span<const std::size_t> target_index) {
  if (target_index.size() != p.num_vars()) throw std::invalid_argument("relabel: need one index per variable");
  Polynomial out(target_vars);
  for (const auto& [m, c] : p.terms()) {
    std::vector<unsigned> e(target_vars, 0);
    for (std::size_t i = 0; i < p.num_vars(); ++i) e.at(target_index[i]) += m[i];
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

}  // namespace eulersym
