#include "eulersym/poly.hpp"

#include <stdexcept>

namespace eulersym {

namespace univariate {

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs derivative(const Coeffs& c) {
  Coeffs d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

Coeffs remainder(Coeffs a, const Coeffs& b) {
  trim(a);
  if (b.empty()) throw std::domain_error("univariate remainder by zero");
  while (a.size() >= b.size()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

Coeffs gcd(Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

}  // namespace univariate

SquarefreeVerdict squarefree_probe(const Polynomial& p, std::size_t trials, std::uint64_t seed) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_probe: zero polynomial");
  auto r = p.homogeneous_degree();
  if (!r) throw std::invalid_argument("squarefree_probe: polynomial is not homogeneous");
  Sampler rng(seed);
  SquarefreeVerdict verdict;
  const std::size_t m = p.num_vars();
  for (std::size_t t = 0; t < trials; ++t) {
    const long bound = 4L << std::min<std::size_t>(t, 20);
    SquarefreeTrial trial;
    // The line direction a must avoid V(P) so that B(s,1) keeps degree r.
    do {
      trial.a = rng.box_vector(m, bound);
    } while (p.evaluate(trial.a) == 0);
    trial.b = rng.box_vector(m, bound);
    Polynomial plane = restrict_to_plane(p, trial.a, trial.b);
    univariate::Coeffs coeffs(*r + 1);
    for (const auto& [mono, c] : plane.terms()) coeffs[mono[0]] = c;
    univariate::trim(coeffs);
    auto g = univariate::gcd(coeffs, univariate::derivative(coeffs));
    trial.gcd_degree = g.empty() ? 0 : static_cast<unsigned>(g.size() - 1);
    trial.passed = trial.gcd_degree == 0;
    if (!trial.passed && !verdict.witness_trial) verdict.witness_trial = t;
    verdict.trials.push_back(std::move(trial));
  }
  verdict.squarefree = !verdict.witness_trial.has_value();
  verdict.all_trials_failed = !verdict.trials.empty();
  for (const auto& t : verdict.trials) verdict.all_trials_failed = verdict.all_trials_failed && !t.passed;
  return verdict;
}

}  // namespace eulersym
