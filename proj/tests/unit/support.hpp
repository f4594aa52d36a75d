#pragma once

#include "eulersym/poly.hpp"

#include <doctest.h>

#include <string>

namespace eulersym::testing {

inline Polynomial x(std::size_t m, std::size_t i) { return Polynomial::variable(m, i); }

inline Rational q(const char* s) { return parse_rational(s); }

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long a : xs) v.emplace_back(a);
  return v;
}

// Random homogeneous polynomial with small integer coefficients; never zero.
inline Polynomial random_homogeneous(Sampler& rng, std::size_t m, unsigned r, std::size_t max_terms) {
  auto monos = monomials_of_degree(m, r);
  for (;;) {
    Polynomial p(m);
    const std::size_t terms = 1 + static_cast<std::size_t>(std::abs(rng.uniform(static_cast<long>(max_terms))));
    for (std::size_t k = 0; k < terms; ++k) {
      const auto idx = static_cast<std::size_t>(std::abs(rng.uniform(static_cast<long>(monos.size()) - 1)));
      p.add_term(monos[idx], rng.uniform(5));
    }
    if (!p.is_zero()) return p;
  }
}

inline Vector random_rational_vector(Sampler& rng, std::size_t m, long bound) {
  Vector v(m);
  for (auto& c : v) {
    c = Rational(rng.uniform(bound), 1 + std::abs(rng.uniform(bound)));
    c.canonicalize();
  }
  return v;
}

}  // namespace eulersym::testing
