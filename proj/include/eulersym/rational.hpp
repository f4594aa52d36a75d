#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace eulersym {

// GMP keeps mpq_class values canonical (lowest terms, positive denominator)
// after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

Vector parse_vector_csv(std::string_view csv);
std::string vector_to_csv(const Vector& v);

Integer content(const std::vector<Integer>& v);  // gcd of entries, >= 0

// Scales a rational vector to a primitive integer vector with the same
// direction (sign preserved).
std::vector<Integer> primitive_integer(const Vector& v);

// Deterministic integer sampling. std::uniform_int_distribution is
// implementation-defined, which would make seeded results differ across
// standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [-bound, bound].
  long uniform(long bound);
  Vector box_vector(std::size_t length, long bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace eulersym
