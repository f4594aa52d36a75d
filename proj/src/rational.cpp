#include "eulersym/rational.hpp"

#include <limits>
#include <stdexcept>

namespace eulersym {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::string strip(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  std::size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_integer_text(num) || !valid_integer_text(den)) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Vector parse_vector_csv(std::string_view csv) {
  Vector out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string_view item = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string vector_to_csv(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += to_string(v[i]);
  }
  return s;
}

Integer content(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::vector<Integer> primitive_integer(const Vector& v) {
  Integer l = 1;
  for (const auto& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
  }
  Integer g = content(out);
  if (g > 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

long Sampler::uniform(long bound) {
  if (bound <= 0) return 0;
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  // Rejection sampling keeps the distribution exact and portable.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<long>(x % span) - bound;
}

Vector Sampler::box_vector(std::size_t length, long bound) {
  Vector v(length);
  for (auto& x : v) x = uniform(bound);
  return v;
}

}  // namespace eulersym
