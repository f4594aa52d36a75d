#include "eulersym/variety.hpp"

#include <sstream>
#include <stdexcept>

namespace eulersym {

std::string to_string(NecessaryCondition::Outcome o) {
  switch (o) {
    case NecessaryCondition::Outcome::pass:
      return "pass";
    case NecessaryCondition::Outcome::fail:
      return "fail";
    case NecessaryCondition::Outcome::flag:
      return "flag";
    case NecessaryCondition::Outcome::skipped:
      return "skipped";
  }
  return "unknown";
}

namespace {

std::string profile_text(const std::vector<std::size_t>& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

}  // namespace

SmoothnessReport smoothness_report(const Polynomial& p, const LegendreConfig& config, std::size_t squarefree_trials) {
  auto r = p.homogeneous_degree();
  if (p.is_zero() || !r) throw std::invalid_argument("smoothness_report: polynomial must be nonzero and homogeneous");
  if (*r < 2) throw std::invalid_argument("smoothness_report: degree must be at least 2");
  using Outcome = NecessaryCondition::Outcome;
  SmoothnessReport rep;
  const SymbolSystem sys = symbol_system_of(p);
  const auto profile = sys.profile();

  NecessaryCondition a{"a", "EKP-homaloidal (P_* is a polynomial)", Outcome::fail, {}};
  auto legendre = legendre_transform(p, config);
  a.detail = "status " + to_string(legendre.status);
  if (legendre.status == LegendreStatus::ekp) {
    a.outcome = Outcome::pass;
    rep.p_star = legendre.transform;
  }

  NecessaryCondition b{"b", "order-(r-1) partials span all linear forms", Outcome::pass, {}};
  const std::size_t raw = sys.raw_linear_rank.value_or(sys.num_vars);
  b.detail = "rank " + std::to_string(raw) + " of " + std::to_string(sys.num_vars);
  if (raw != sys.num_vars) b.outcome = Outcome::fail;

  NecessaryCondition c{"c", "dim F^j = dim F^(r-j) for all j", Outcome::pass, "profile " + profile_text(profile)};
  for (std::size_t j = 0; j < profile.size(); ++j)
    if (profile[j] != profile[profile.size() - 1 - j]) c.outcome = Outcome::fail;

  NecessaryCondition d{"d", "reduced (squarefree probe)", Outcome::pass, {}};
  rep.squarefree = squarefree_probe(p, squarefree_trials, config.seed);
  if (!rep.squarefree->squarefree) {
    d.outcome = Outcome::flag;
    d.detail = "repeated factor detected; outside the classification scope";
  } else {
    d.detail = "no repeated factor detected in " + std::to_string(rep.squarefree->trials.size()) + " trials";
  }

  NecessaryCondition e{"e", "dim F^k of P_* equals dim F^k of P", Outcome::skipped, "requires (a)"};
  if (rep.p_star) {
    const auto dual = symbol_system_of(*rep.p_star).profile();
    e.outcome = dual == profile ? Outcome::pass : Outcome::fail;
    e.detail = "dual profile " + profile_text(dual);
  }

  rep.items = {a, b, c, d, e};
  for (const auto& item : rep.items) {
    if (item.outcome == Outcome::fail) {
      rep.verdict = "fails necessary condition (" + item.id + ")";
      rep.passes_all = false;
      return rep;
    }
  }
  rep.passes_all = true;
  rep.verdict = "passes all implemented necessary conditions";
  return rep;
}

}  // namespace eulersym
