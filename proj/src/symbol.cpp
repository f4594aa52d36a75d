#include "eulersym/symbol.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace eulersym {

namespace {

std::vector<Rational> unit_vector(std::size_t m, std::size_t i) {
  std::vector<Rational> e(m);
  e[i] = 1;
  return e;
}

}  // namespace

GradedSubspace GradedSubspace::span(std::size_t num_vars, unsigned degree, const std::vector<Polynomial>& generators) {
  GradedSubspace s(num_vars, degree);
  std::set<Monomial, GrlexGreater> support;
  for (const auto& g : generators) {
    if (g.num_vars() != num_vars) throw std::invalid_argument("GradedSubspace: variable-count mismatch");
    for (const auto& [m, c] : g.terms()) {
      if (m.degree() != degree) throw std::invalid_argument("GradedSubspace: generator of the wrong degree");
      support.insert(m);
    }
  }
  if (support.empty()) return s;
  std::vector<Monomial> columns(support.begin(), support.end());
  std::map<Monomial, std::size_t, GrlexGreater> index;
  for (std::size_t j = 0; j < columns.size(); ++j) index.emplace(columns[j], j);

  RowReducer red(columns.size());
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    Vector row(columns.size());
    for (const auto& [m, c] : g.terms()) row[index.at(m)] = c;
    red.add_row(row);
  }
  auto rows = red.sorted_rows();
  auto pivots = red.sorted_pivots();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    Polynomial q(num_vars);
    for (std::size_t j = 0; j < columns.size(); ++j)
      if (rows[k][j] != 0) q.add_term(columns[j], Rational(rows[k][j]));
    s.basis_.push_back(std::move(q));
    s.pivots_.push_back(columns[pivots[k]]);
  }
  return s;
}

GradedSubspace GradedSubspace::full(std::size_t num_vars, unsigned degree) {
  GradedSubspace s(num_vars, degree);
  for (auto& m : monomials_of_degree(num_vars, degree)) {
    s.basis_.push_back(Polynomial::monomial(m));
    s.pivots_.push_back(std::move(m));
  }
  return s;
}

std::optional<Vector> GradedSubspace::coordinates(const Polynomial& phi) const {
  if (phi.num_vars() != num_vars_) throw std::invalid_argument("GradedSubspace: variable-count mismatch");
  Vector coords(basis_.size());
  if (phi.is_zero()) return coords;
  if (phi.homogeneous_degree() != degree_) return std::nullopt;
  Polynomial residual = phi;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    Rational c = phi.coefficient(pivots_[k]);
    if (c == 0) continue;
    coords[k] = c / basis_[k].coefficient(pivots_[k]);
    residual -= basis_[k] * coords[k];
  }
  if (!residual.is_zero()) return std::nullopt;
  return coords;
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  for (const auto& q : other.basis())
    if (!contains(q)) return false;
  return true;
}

std::vector<std::size_t> SymbolSystem::profile() const {
  std::vector<std::size_t> p;
  for (const auto& f : components) p.push_back(f.dimension());
  return p;
}

std::size_t SymbolSystem::ambient_dimension() const {
  std::size_t d = 1 + num_vars;
  for (std::size_t k = 2; k < components.size(); ++k) d += components[k].dimension();
  return d;
}

SymbolSystem symbol_system_of(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("symbol_system_of: zero polynomial");
  auto r = p.homogeneous_degree();
  if (!r) throw std::invalid_argument("symbol_system_of: polynomial is not homogeneous");
  if (*r < 1) throw std::invalid_argument("symbol_system_of: degree must be at least 1");
  const std::size_t m = p.num_vars();
  SymbolSystem s;
  s.rank = *r;
  s.num_vars = m;
  s.components.push_back(GradedSubspace::full(m, 0));
  s.components.push_back(GradedSubspace::full(m, 1));
  for (unsigned k = 2; k <= *r; ++k) s.components.push_back(GradedSubspace::span(m, k, partials(p, *r - k)));
  s.raw_linear_rank = GradedSubspace::span(m, 1, partials(p, *r - 1)).dimension();
  return s;
}

SymbolSystem make_symbol_system(std::size_t num_vars, std::vector<GradedSubspace> components) {
  if (components.empty()) throw std::invalid_argument("make_symbol_system: no components");
  SymbolSystem s;
  s.num_vars = num_vars;
  s.rank = static_cast<unsigned>(components.size() - 1);
  s.components = std::move(components);
  return s;
}

CatalecticantMap catalecticant(const Polynomial& p, unsigned order) {
  auto r = p.homogeneous_degree();
  if (!r) throw std::invalid_argument("catalecticant: polynomial must be nonzero and homogeneous");
  if (order > *r) throw std::invalid_argument("catalecticant: order exceeds degree");
  CatalecticantMap c;
  c.order = order;
  c.row_monomials = monomials_of_degree(p.num_vars(), *r - order);
  c.column_monomials = monomials_of_degree(p.num_vars(), order);
  std::map<Monomial, std::size_t, GrlexGreater> row_index;
  for (std::size_t i = 0; i < c.row_monomials.size(); ++i) row_index.emplace(c.row_monomials[i], i);
  c.matrix = Matrix(c.row_monomials.size(), c.column_monomials.size());
  for (std::size_t j = 0; j < c.column_monomials.size(); ++j) {
    const Polynomial d = p.differentiate(c.column_monomials[j]);
    for (const auto& [m, coef] : d.terms()) c.matrix(row_index.at(m), j) = coef;
  }
  return c;
}

RankSymmetryReport rank_symmetry_check(const Polynomial& p) {
  auto r = p.homogeneous_degree();
  if (!r) throw std::invalid_argument("rank_symmetry_check: polynomial must be nonzero and homogeneous");
  RankSymmetryReport rep;
  for (unsigned j = 0; j <= *r; ++j) rep.ranks.push_back(rank(catalecticant(p, j).matrix));
  for (unsigned j = 0; j <= *r; ++j) {
    bool ok = rep.ranks[j] == rep.ranks[*r - j];
    rep.symmetric.push_back(ok);
    rep.holds = rep.holds && ok;
  }
  return rep;
}

GradedSubspace prolong(const GradedSubspace& f) {
  const std::size_t m = f.num_vars();
  const unsigned k = f.degree();
  if (k < 1) throw std::invalid_argument("prolong: subspace degree must be at least 1");
  auto upper = monomials_of_degree(m, k + 1);
  std::map<Monomial, std::size_t, GrlexGreater> upper_index;
  for (std::size_t j = 0; j < upper.size(); ++j) upper_index.emplace(upper[j], j);

  auto lower = monomials_of_degree(m, k);
  if (f.dimension() == lower.size()) return GradedSubspace::full(m, k + 1);

  // Residual of y after reduction by the canonical basis is linear in y:
  // res_mu(y) = y_mu - sum_p (y_{pivot_p} / lead_p) Q_p[mu]. For each
  // direction e_i, y = d_i phi (the 1/(k+1) factor is irrelevant for
  // membership) and every residual coordinate must vanish.
  std::vector<Monomial> pivots;
  std::vector<Rational> leads;
  for (const auto& q : f.basis()) {
    pivots.push_back(q.terms().begin()->first);
    leads.push_back(q.terms().begin()->second);
  }
  std::set<Monomial, GrlexGreater> pivot_set(pivots.begin(), pivots.end());

  std::vector<Rational> rows;
  std::size_t row_count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& mu : lower) {
      if (pivot_set.count(mu)) continue;
      Vector row(upper.size());
      // Coefficient of x^mu in d_i phi is (mu_i + 1) c_{mu + e_i}.
      Monomial up = mu * Monomial::unit(m, i);
      row[upper_index.at(up)] += mu[i] + 1;
      for (std::size_t p = 0; p < pivots.size(); ++p) {
        Rational q_mu = f.basis()[p].coefficient(mu);
        if (q_mu == 0) continue;
        Monomial pu = pivots[p] * Monomial::unit(m, i);
        row[upper_index.at(pu)] -= q_mu / leads[p] * (pivots[p][i] + 1);
      }
      rows.insert(rows.end(), row.begin(), row.end());
      ++row_count;
    }
  }
  auto kernel = nullspace(Matrix(row_count, upper.size(), std::move(rows)));
  std::vector<Polynomial> gens;
  for (const auto& v : kernel) {
    Polynomial phi(m);
    for (std::size_t j = 0; j < upper.size(); ++j) phi.add_term(upper[j], v[j]);
    gens.push_back(std::move(phi));
  }
  return GradedSubspace::span(m, k + 1, gens);
}

SymbolVerdict verify_symbol_system(const SymbolSystem& s) {
  SymbolVerdict v;
  auto fail = [&](std::string msg) {
    v.passed = false;
    v.failure = std::move(msg);
    return v;
  };
  if (s.components.size() != s.rank + 1) return fail("component count does not match rank");
  for (unsigned k = 0; k <= s.rank; ++k) {
    if (s.components[k].degree() != k) return fail("F^" + std::to_string(k) + " has the wrong degree");
    if (s.components[k].num_vars() != s.num_vars) return fail("F^" + std::to_string(k) + " has the wrong variable count");
  }
  if (s.components[0].dimension() != 1) return fail("F^0 is not the constants");
  if (s.rank >= 1 && s.components[1].dimension() != s.num_vars) return fail("F^1 is not the full space of linear forms");
  if (s.components[s.rank].dimension() == 0) return fail("F^r is zero");
  for (unsigned k = 1; k < s.rank; ++k) {
    const auto& lower = s.components[k];
    for (const auto& phi : s.components[k + 1].basis()) {
      for (std::size_t i = 0; i < s.num_vars; ++i) {
        auto e = unit_vector(s.num_vars, i);
        if (!lower.contains(contract(phi, e))) {
          v.degree = k;
          v.witness = phi;
          v.direction = i;
          return fail("F^" + std::to_string(k + 1) + " is not contained in prolong(F^" + std::to_string(k) + ")");
        }
      }
    }
  }
  return v;
}

Matrix contraction_matrix(const SymbolSystem& s, std::span<const Rational> v, unsigned from, unsigned to) {
  if (to < 1 || to > from || from > s.rank) throw std::invalid_argument("contraction_matrix: need 1 <= to <= from <= rank");
  if (v.size() != s.num_vars) throw std::invalid_argument("contraction_matrix: vector length mismatch");
  const auto& src = s.components[from];
  const auto& dst = s.components[to];
  Matrix out(dst.dimension(), src.dimension());
  for (std::size_t j = 0; j < src.dimension(); ++j) {
    auto coords = dst.coordinates(contract_power(src.basis()[j], v, from - to));
    if (!coords) {
      throw ContractionError("contraction leaves the system: iota_v^" + std::to_string(from - to) + " maps F^" +
                             std::to_string(from) + " outside F^" + std::to_string(to));
    }
    for (std::size_t i = 0; i < dst.dimension(); ++i) out(i, j) = (*coords)[i];
  }
  return out;
}

}  // namespace eulersym
