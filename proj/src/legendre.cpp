#include "eulersym/legendre.hpp"

#include "eulersym/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace eulersym {

std::string to_string(LegendreStatus s) {
  switch (s) {
    case LegendreStatus::ekp:
      return "ekp";
    case LegendreStatus::inconsistent:
      return "inconsistent";
    case LegendreStatus::degenerate_gradient_image:
      return "degenerate_gradient_image";
  }
  return "unknown";
}

namespace {

unsigned require_transformable(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("legendre_transform: zero polynomial");
  auto r = p.homogeneous_degree();
  if (!r) throw std::invalid_argument("legendre_transform: polynomial is not homogeneous");
  if (*r < 2) throw std::invalid_argument("legendre_transform: degree must be at least 2");
  return *r;
}

std::vector<Integer> character_of(const WeightClasses& wc, const Monomial& m) {
  std::vector<Integer> key;
  key.reserve(wc.characters.size());
  for (const auto& a : wc.characters) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (m[i]) s += a[i] * m[i];
    key.push_back(s);
  }
  return key;
}

// Per-variable power table for one gradient value.
class PowerTable {
 public:
  PowerTable(const Vector& g, unsigned max_power) : table_(g.size()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      table_[i].reserve(max_power + 1);
      table_[i].push_back(1);
      for (unsigned e = 1; e <= max_power; ++e) table_[i].push_back(table_[i].back() * g[i]);
    }
  }
  Rational monomial(const Monomial& m) const {
    Rational v = 1;
    for (std::size_t i = 0; i < table_.size() && v != 0; ++i)
      if (m[i]) v *= table_[i][m[i]];
    return v;
  }

 private:
  std::vector<std::vector<Rational>> table_;
};

}  // namespace

WeightClasses symmetry_weight_classes(const Polynomial& p) {
  unsigned r = require_transformable(p);
  const std::size_t m = p.num_vars();
  WeightClasses wc;
  const Monomial& base = p.terms().begin()->first;
  std::vector<Rational> diffs;
  std::size_t rows = 0;
  for (const auto& [mono, c] : p.terms()) {
    if (mono == base) continue;
    for (std::size_t i = 0; i < m; ++i) diffs.emplace_back(static_cast<long>(mono[i]) - static_cast<long>(base[i]));
    ++rows;
  }
  std::vector<Vector> lattice;
  if (rows == 0) {
    for (std::size_t i = 0; i < m; ++i) {
      Vector e(m);
      e[i] = 1;
      lattice.push_back(std::move(e));
    }
  } else {
    lattice = nullspace(Matrix(rows, m, std::move(diffs)));
  }
  for (const auto& v : lattice) {
    std::vector<Integer> a;
    for (const auto& x : v) a.push_back(x.get_num());
    wc.characters.push_back(std::move(a));
  }
  std::map<std::vector<Integer>, std::size_t> index;
  for (auto& mono : monomials_of_degree(m, r)) {
    auto key = character_of(wc, mono);
    auto [it, inserted] = index.try_emplace(std::move(key), wc.classes.size());
    if (inserted) wc.classes.emplace_back();
    wc.classes[it->second].push_back(std::move(mono));
  }
  wc.target = index.at(character_of(wc, base));
  return wc;
}

Polynomial legendre_defect(const Polynomial& p, const Polynomial& p_star) {
  unsigned r = require_transformable(p);
  auto grad = gradient(p);
  return p_star.substitute(grad) - p.pow(r - 1);
}

LegendreResult legendre_transform(const Polynomial& p, const LegendreConfig& config) {
  const unsigned r = require_transformable(p);
  const std::size_t m = p.num_vars();
  const WeightClasses wc = symmetry_weight_classes(p);
  const auto grad = gradient(p);

  LegendreResult res;
  res.weight_classes = wc.classes.size();
  res.unknowns = wc.classes[wc.target].size();

  std::vector<RowReducer> systems;
  std::size_t largest = 0;
  for (std::size_t c = 0; c < wc.classes.size(); ++c) {
    const bool target = c == wc.target;
    systems.emplace_back(wc.classes[c].size() + (target ? 1 : 0), target);
    largest = std::max(largest, wc.classes[c].size());
  }
  auto full_rank = [&](std::size_t c) { return systems[c].rank() == wc.classes[c].size(); };

  Sampler rng(config.seed);
  long box = std::max(1L, config.initial_box);
  std::vector<std::size_t> history;
  const std::size_t batch = largest + 2;

  auto draw_point = [&](Vector& w, Rational& pw) {
    // P vanishes on a proper hypersurface; a bounded number of redraws
    // always suffices in practice, the cap only guards degenerate inputs.
    for (int attempt = 0; attempt < 1000; ++attempt) {
      w = rng.box_vector(m, box);
      pw = p.evaluate(w);
      if (pw != 0) return true;
    }
    return false;
  };

  for (std::size_t round = 0; round < config.max_rounds; ++round) {
    ++res.rounds;
    for (std::size_t s = 0; s < batch; ++s) {
      Vector w;
      Rational pw;
      if (!draw_point(w, pw)) break;
      ++res.samples_used;
      Vector g(m);
      for (std::size_t i = 0; i < m; ++i) g[i] = grad[i].evaluate(w);
      PowerTable powers(g, r);
      for (std::size_t c = 0; c < wc.classes.size(); ++c) {
        const bool target = c == wc.target;
        if (!target && full_rank(c)) continue;
        const auto& cls = wc.classes[c];
        Vector row(cls.size() + (target ? 1 : 0));
        for (std::size_t j = 0; j < cls.size(); ++j) row[j] = powers.monomial(cls[j]);
        if (target) {
          Rational rhs = 1;
          for (unsigned e = 0; e + 1 < r; ++e) rhs *= pw;
          row.back() = rhs;
        }
        if (systems[c].add_row(row) == RowReducer::Outcome::inconsistent) {
          res.status = LegendreStatus::inconsistent;
          return res;
        }
      }
    }
    std::size_t total = 0;
    bool all_full = true;
    for (std::size_t c = 0; c < systems.size(); ++c) {
      total += systems[c].rank();
      all_full = all_full && full_rank(c);
    }
    history.push_back(total);
    if (all_full) break;
    if (history.size() >= 4 && history[history.size() - 4] == total) break;
    box *= 2;
  }

  std::size_t kernel = 0;
  for (std::size_t c = 0; c < systems.size(); ++c) kernel += wc.classes[c].size() - systems[c].rank();
  if (kernel > 0) {
    res.status = LegendreStatus::degenerate_gradient_image;
    res.solution_dimension = kernel;
    return res;
  }

  Vector coeffs = systems[wc.target].particular_solution();
  Polynomial p_star(m);
  for (std::size_t j = 0; j < coeffs.size(); ++j) p_star.add_term(wc.classes[wc.target][j], coeffs[j]);

  // Fresh points from the continuing stream, in a box past the last one used.
  box *= 2;
  res.verification_passed = true;
  for (std::size_t k = 0; k < config.verify_points; ++k) {
    Vector w;
    Rational pw;
    if (!draw_point(w, pw)) break;
    Vector g(m);
    for (std::size_t i = 0; i < m; ++i) g[i] = grad[i].evaluate(w);
    Rational rhs = 1;
    for (unsigned e = 0; e + 1 < r; ++e) rhs *= pw;
    ++res.verified_points;
    if (p_star.evaluate(g) != rhs) {
      res.verification_passed = false;
      break;
    }
  }
  if (!res.verification_passed) {
    res.status = LegendreStatus::inconsistent;
    return res;
  }
  if (config.certify) {
    res.certified = legendre_defect(p, p_star).is_zero();
    if (!res.certified) {
      res.status = LegendreStatus::inconsistent;
      return res;
    }
  }
  res.status = LegendreStatus::ekp;
  res.transform = std::move(p_star);
  return res;
}

EkpVerdict is_ekp_homaloidal(const Polynomial& p, const LegendreConfig& config) {
  EkpVerdict v;
  v.result = legendre_transform(p, config);
  v.ekp = v.result.status == LegendreStatus::ekp && v.result.verification_passed &&
          (!config.certify || v.result.certified);
  return v;
}

GradientIdentityReport verify_gradient_identities(const Polynomial& p, const Polynomial& p_star, CheckMode mode,
                                                  std::size_t points, std::uint64_t seed) {
  auto r = p.homogeneous_degree();
  auto rs = p_star.homogeneous_degree();
  if (!r || !rs || *r != *rs || p.num_vars() != p_star.num_vars())
    throw std::invalid_argument("verify_gradient_identities: need homogeneous polynomials of equal degree and variable count");
  if (*r < 2) throw std::invalid_argument("verify_gradient_identities: degree must be at least 2");
  const std::size_t m = p.num_vars();
  const auto grad = gradient(p);
  const auto grad_star = gradient(p_star);
  GradientIdentityReport rep;
  rep.mode = mode;

  if (mode == CheckMode::symbolic) {
    auto one_way = [&](const Polynomial& f, const std::vector<Polynomial>& df, const std::vector<Polynomial>& dg) {
      Polynomial scale = f.pow(*r - 2);
      for (std::size_t i = 0; i < m; ++i) {
        if (dg[i].substitute(df) != scale * Polynomial::variable(m, i)) return false;
      }
      return true;
    };
    rep.forward = one_way(p, grad, grad_star);
    rep.backward = one_way(p_star, grad_star, grad);
    return rep;
  }

  Sampler rng(seed);
  auto one_point = [&](const Polynomial& f, const std::vector<Polynomial>& df, const std::vector<Polynomial>& dg,
                       const Vector& w) {
    Vector image(m);
    for (std::size_t i = 0; i < m; ++i) image[i] = df[i].evaluate(w);
    Rational scale = 1;
    Rational fw = f.evaluate(w);
    for (unsigned e = 0; e + 2 < *r; ++e) scale *= fw;
    for (std::size_t i = 0; i < m; ++i)
      if (dg[i].evaluate(image) != scale * w[i]) return false;
    return true;
  };
  rep.forward = rep.backward = true;
  long box = 4;
  for (std::size_t k = 0; k < points; ++k) {
    if (k && k % 16 == 0) box *= 2;
    Vector w = rng.box_vector(m, box);
    Vector u = rng.box_vector(m, box);
    rep.forward = rep.forward && one_point(p, grad, grad_star, w);
    rep.backward = rep.backward && one_point(p_star, grad_star, grad, u);
    ++rep.points;
  }
  return rep;
}

DoubleTransformVerdict double_transform_check(const Polynomial& p, const LegendreConfig& config) {
  DoubleTransformVerdict v;
  v.forward = legendre_transform(p, config);
  if (v.forward.status != LegendreStatus::ekp) return v;
  v.backward = legendre_transform(*v.forward.transform, config);
  v.holds = v.backward->status == LegendreStatus::ekp && *v.backward->transform == p;
  return v;
}

}  // namespace eulersym
