#include "eulersym/catalog.hpp"

#include "eulersym/linalg.hpp"
#include "eulersym/variety.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace eulersym {

namespace {

using Grid = std::vector<std::vector<Polynomial>>;

std::size_t binom(unsigned n, int k) {
  if (k < 0 || static_cast<unsigned>(k) > n) return 0;
  std::size_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

Polynomial var(std::size_t m, std::size_t i) { return Polynomial::variable(m, i); }

std::vector<std::string> numbered_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string entry_name(char prefix, std::size_t i, std::size_t j) {
  return std::string(1, prefix) + "_" + std::to_string(i + 1) + std::to_string(j + 1);
}

Polynomial leibniz_determinant(const Grid& a, std::size_t m) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(m);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial term = Polynomial::constant(m, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = term * a[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// First-row expansion: pf(A) = sum_{j>1} (-1)^j a_{1j} pf(A without rows/cols 1, j),
// with 1-based j.
Polynomial pfaffian(const Grid& a, const std::vector<std::size_t>& idx, std::size_t m) {
  if (idx.empty()) return Polynomial::constant(m, 1);
  Polynomial pf(m);
  for (std::size_t j = 1; j < idx.size(); ++j) {
    std::vector<std::size_t> rest;
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    Polynomial term = a[idx[0]][idx[j]] * pfaffian(a, rest, m);
    if (j % 2 == 0) term = -term;
    pf += term;
  }
  return pf;
}

std::vector<std::size_t> iota_block(std::size_t from, std::size_t count) {
  std::vector<std::size_t> b(count);
  std::iota(b.begin(), b.end(), from);
  return b;
}

void fill_profile(ExpectedInvariants& e, unsigned r, const std::function<std::size_t(unsigned)>& dim) {
  e.degree = r;
  e.profile.clear();
  for (unsigned k = 0; k <= r; ++k) e.profile.push_back(dim(k));
  e.ambient_dimension = std::accumulate(e.profile.begin(), e.profile.end(), std::size_t{0});
}

void require_param(const std::string& name, const std::vector<unsigned>& params, std::size_t count) {
  if (params.size() != count)
    throw CatalogError("catalog entry " + name + " takes " + std::to_string(count) + " parameter(s), got " +
                       std::to_string(params.size()));
}

void require_in(const FamilyInfo& f, unsigned value) {
  if (std::find(f.allowed.begin(), f.allowed.end(), value) == f.allowed.end()) {
    std::ostringstream os;
    os << "parameter " << value << " out of range for " << f.name << " (allowed:";
    for (auto a : f.allowed) os << ' ' << a;
    os << ')';
    throw CatalogError(os.str());
  }
}

const FamilyInfo& family(const std::string& name) {
  for (const auto& f : catalog_families())
    if (f.name == name) return f;
  throw CatalogError("unknown catalog entry: " + name);
}

std::vector<unsigned> range(unsigned lo, unsigned hi) {
  std::vector<unsigned> v;
  for (unsigned i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::string quadric_label(unsigned n) { return "Q^" + std::to_string(n); }
const char* kLineLabel = "P^1 (convention unresolved)";
const char* kNonReduced = "non-reduced (outside the classification)";

CatalogEntry build_quad(unsigned n) {
  CatalogEntry e;
  Polynomial p(n);
  for (unsigned i = 0; i < n; ++i) p += var(n, i).pow(2);
  e.polynomial = p;
  e.variable_names = numbered_names(n);
  e.factor_blocks = {iota_block(0, n)};
  e.reduced = n >= 2;
  fill_profile(e.expected, 2, [n](unsigned k) { return k == 1 ? std::size_t{n} : std::size_t{1}; });
  e.expected.label = quadric_label(n);
  e.expected.description = "hyperquadric " + quadric_label(n);
  // x1^2 + x2^2 = (x1 + i x2)(x1 - i x2) over C.
  e.expected.factor_count = n == 2 ? 2 : 1;
  return e;
}

}  // namespace

std::string CatalogEntry::display_name() const {
  if (params.empty()) return name;
  return name + "[" + std::to_string(params.front()) + "]";
}

const std::vector<FamilyInfo>& catalog_families() {
  static const std::vector<FamilyInfo> families = {
      {"x_cubed", "", {}, "x^3 (non-reduced control)"},
      {"quad", "n", range(1, 8), "sum of squares x1^2 + ... + xn^2"},
      {"quadline", "m", range(1, 8), "(x1^2 + ... + xm^2) * x(m+1)"},
      {"monprod", "m", range(1, 8), "x1 * ... * xm"},
      {"det", "n", range(1, 4), "determinant of a generic n x n matrix"},
      {"symdet", "n", range(1, 4), "determinant of a generic symmetric n x n matrix"},
      {"pfaff", "2n", {2, 4, 6, 8}, "Pfaffian of a generic skew 2n x 2n matrix"},
      {"cartan", "", {}, "|A| + |B| + |C| - Tr(ABC) on three 3 x 3 matrices"},
  };
  return families;
}

CatalogEntry build(const std::string& name, const std::vector<unsigned>& params) {
  const FamilyInfo& f = family(name);
  require_param(name, params, f.parameter.empty() ? 0 : 1);
  if (!params.empty()) require_in(f, params[0]);
  CatalogEntry e;
  const unsigned n = params.empty() ? 0 : params[0];

  if (name == "x_cubed") {
    e.polynomial = var(1, 0).pow(3);
    e.variable_names = numbered_names(1);
    e.factor_blocks = {{0}};
    e.reduced = false;
    fill_profile(e.expected, 3, [](unsigned) { return std::size_t{1}; });
    e.expected.label = kNonReduced;
    e.expected.description = "x^3, non-reduced";
  } else if (name == "quad") {
    e = build_quad(n);
  } else if (name == "quadline") {
    const std::size_t m = n + 1;
    Polynomial q(m);
    for (unsigned i = 0; i < n; ++i) q += var(m, i).pow(2);
    e.polynomial = q * var(m, n);
    e.variable_names = numbered_names(m);
    e.factor_blocks = {iota_block(0, n), {n}};
    e.reduced = n >= 2;
    fill_profile(e.expected, 3, [m](unsigned k) { return k == 0 || k == 3 ? std::size_t{1} : m; });
    e.expected.label = quadric_label(n) + " x P^1";
    e.expected.description = "hyperquadric " + quadric_label(n) + " times a line";
    e.expected.factor_count = build_quad(n).expected.factor_count + 1;
  } else if (name == "monprod") {
    Polynomial p = Polynomial::constant(n, 1);
    for (unsigned i = 0; i < n; ++i) p = p * var(n, i);
    e.polynomial = p;
    e.variable_names = numbered_names(n);
    for (unsigned i = 0; i < n; ++i) e.factor_blocks.push_back({i});
    fill_profile(e.expected, n, [n](unsigned k) { return binom(n, static_cast<int>(k)); });
    e.expected.label = n == 1 ? std::string("P^1") : "(P^1)^" + std::to_string(n);
    e.expected.description = std::to_string(n) + " copies of P^1";
    e.expected.factor_count = n;
  } else if (name == "det") {
    const std::size_t m = n * n;
    Grid a(n, std::vector<Polynomial>(n));
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        a[i][j] = var(m, i * n + j);
        e.variable_names.push_back(entry_name('x', i, j));
      }
    e.polynomial = leibniz_determinant(a, m);
    e.factor_blocks = {iota_block(0, m)};
    fill_profile(e.expected, n, [n](unsigned k) {
      auto b = binom(n, static_cast<int>(k));
      return b * b;
    });
    e.expected.label = "Gr(" + std::to_string(n) + "," + std::to_string(2 * n) + ")";
    e.expected.description = "Grassmannian variety " + e.expected.label;
  } else if (name == "symdet") {
    const std::size_t m = n * (n + 1) / 2;
    Grid a(n, std::vector<Polynomial>(n));
    std::size_t next = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i; j < n; ++j) {
        a[i][j] = a[j][i] = var(m, next++);
        e.variable_names.push_back(entry_name('x', i, j));
      }
    e.polynomial = leibniz_determinant(a, m);
    e.factor_blocks = {iota_block(0, m)};
    fill_profile(e.expected, n, [n](unsigned k) {
      const int kk = static_cast<int>(k);
      auto b = binom(n, kk);
      return b * b - binom(n, kk - 1) * binom(n, kk + 1);
    });
    e.expected.label = "LG(" + std::to_string(n) + "," + std::to_string(2 * n) + ")";
    e.expected.description = "Lagrangian Grassmannian " + e.expected.label;
  } else if (name == "pfaff") {
    const unsigned size = n;  // the parameter is the matrix size 2n
    const unsigned half = size / 2;
    const std::size_t m = size * (size - 1) / 2;
    Grid a(size, std::vector<Polynomial>(size, Polynomial(m)));
    std::size_t next = 0;
    for (unsigned i = 0; i < size; ++i)
      for (unsigned j = i + 1; j < size; ++j) {
        a[i][j] = var(m, next);
        a[j][i] = -var(m, next);
        ++next;
        e.variable_names.push_back(entry_name('x', i, j));
      }
    e.polynomial = pfaffian(a, iota_block(0, size), m);
    e.factor_blocks = {iota_block(0, m)};
    fill_profile(e.expected, half, [size](unsigned k) { return binom(size, static_cast<int>(2 * k)); });
    e.expected.label = "Spinor S_" + std::to_string(size);
    e.expected.description = "Spinor variety S_" + std::to_string(size);
  } else {  // cartan
    const std::size_t m = 27;
    Grid mats[3];
    const char prefix[3] = {'a', 'b', 'c'};
    for (std::size_t t = 0; t < 3; ++t) {
      mats[t].assign(3, std::vector<Polynomial>(3));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          mats[t][i][j] = var(m, 9 * t + 3 * i + j);
          e.variable_names.push_back(entry_name(prefix[t], i, j));
        }
    }
    Polynomial p(m);
    for (const auto& g : mats) p += leibniz_determinant(g, m);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) p -= mats[0][i][j] * mats[1][j][k] * mats[2][k][i];
    e.polynomial = p;
    e.factor_blocks = {iota_block(0, m)};
    fill_profile(e.expected, 3, [](unsigned k) { return k == 0 || k == 3 ? std::size_t{1} : std::size_t{27}; });
    e.expected.label = "E7/P7";
    e.expected.description = "27-dimensional E_7/P_7";
  }
  e.name = name;
  e.params = params;
  e.expected.num_vars = e.polynomial.num_vars();
  return e;
}

CatalogEntry build(std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw CatalogError("empty catalog name");
  for (const auto& f : catalog_families()) {
    if (s == f.name) return build(f.name, {});
    if (f.parameter.empty() || s.rfind(f.name, 0) != 0) continue;
    std::string rest = s.substr(f.name.size());
    if (rest.size() >= 2 && rest.front() == '[' && rest.back() == ']') rest = rest.substr(1, rest.size() - 2);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      continue;
    if (rest.size() > 3) throw CatalogError("parameter out of range in " + s);
    return build(f.name, {static_cast<unsigned>(std::stoul(rest))});
  }
  throw CatalogError("unknown catalog entry: " + s);
}

ProductSpec product(const std::vector<CatalogEntry>& factors) {
  if (factors.empty()) throw CatalogError("product needs at least one factor");
  ProductSpec spec;
  spec.factors = factors;
  std::size_t m = 0;
  for (const auto& f : factors) m += f.polynomial.num_vars();
  spec.polynomial = Polynomial::constant(m, 1);
  std::size_t offset = 0;
  for (const auto& f : factors) {
    const std::size_t mf = f.polynomial.num_vars();
    auto target = iota_block(offset, mf);
    spec.polynomial = spec.polynomial * relabel(f.polynomial, m, target);
    for (const auto& block : f.factor_blocks) {
      std::vector<std::size_t> shifted;
      for (auto i : block) shifted.push_back(i + offset);
      spec.factor_blocks.push_back(std::move(shifted));
    }
    offset += mf;
    spec.degree += f.expected.degree;
    spec.expected_ambient_dimension *= f.expected.ambient_dimension;
    spec.expected_factor_count += f.expected.factor_count;
  }
  if (factors.size() == 1) {
    spec.variable_names = factors[0].variable_names;
  } else {
    // Names stay unique by tagging each factor's variables with its position.
    for (std::size_t k = 0; k < factors.size(); ++k)
      for (const auto& nm : factors[k].variable_names) spec.variable_names.push_back(nm + "_" + std::to_string(k + 1));
  }
  return spec;
}

ProductSpec parse_product(std::string_view list) {
  std::vector<CatalogEntry> factors;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    auto piece = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    factors.push_back(build(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return product(factors);
}

std::vector<std::string> classify(const CatalogEntry& e) {
  if (e.name == "x_cubed") return {kNonReduced};
  if (e.name == "quad") return {e.reduced ? quadric_label(e.params[0]) : kNonReduced};
  if (e.name == "quadline") {
    return {e.reduced ? quadric_label(e.params[0]) : std::string(kNonReduced), kLineLabel};
  }
  if (e.name == "monprod") return std::vector<std::string>(e.params[0], kLineLabel);
  // Degree-one members of the families are linear factors as well.
  if (e.expected.degree == 1) return {kLineLabel};
  return {e.expected.label};
}

std::vector<std::string> classify(const ProductSpec& spec) {
  std::vector<std::string> labels;
  for (const auto& f : spec.factors) {
    auto l = classify(f);
    labels.insert(labels.end(), l.begin(), l.end());
  }
  return labels;
}

bool splits_over(const Polynomial& p, const std::vector<std::size_t>& block) {
  const std::size_t m = p.num_vars();
  std::vector<bool> in(m, false);
  for (auto i : block) in.at(i) = true;
  using Key = std::vector<unsigned>;
  std::map<Key, std::size_t> xs, ys;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries;
  for (const auto& [mono, c] : p.terms()) {
    Key x(m, 0), y(m, 0);
    for (std::size_t i = 0; i < m; ++i) (in[i] ? x : y)[i] = mono[i];
    auto xi = xs.try_emplace(x, xs.size()).first->second;
    auto yi = ys.try_emplace(y, ys.size()).first->second;
    entries[{xi, yi}] = c;
  }
  if (entries.empty()) return true;
  // Rank one: every entry M[x][y] equals M[x][y0] M[x0][y] / M[x0][y0].
  const auto& [ref, c0] = *entries.begin();
  auto at = [&](std::size_t x, std::size_t y) {
    auto it = entries.find({x, y});
    return it == entries.end() ? Rational(0) : it->second;
  };
  for (std::size_t x = 0; x < xs.size(); ++x)
    for (std::size_t y = 0; y < ys.size(); ++y)
      if (at(x, y) * c0 != at(x, ref.second) * at(ref.first, y)) return false;
  return true;
}

std::vector<std::vector<std::size_t>> variable_blocks(const Polynomial& p) {
  const std::size_t m = p.num_vars();
  if (p.is_zero()) throw std::invalid_argument("variable_blocks: zero polynomial");
  // A splitting block X has constant X-degree on the support, so its
  // indicator lies in the nullspace of the exponent differences.
  const Monomial& base = p.terms().begin()->first;
  std::vector<Rational> diffs;
  std::size_t rows = 0;
  for (const auto& [mono, c] : p.terms()) {
    if (mono == base) continue;
    for (std::size_t i = 0; i < m; ++i) diffs.emplace_back(static_cast<long>(mono[i]) - static_cast<long>(base[i]));
    ++rows;
  }
  std::vector<std::vector<std::size_t>> split_sets;
  std::vector<std::size_t> all = iota_block(0, m);
  split_sets.push_back(all);
  if (rows == 0) {
    for (std::size_t i = 0; i < m; ++i) split_sets.push_back({i});
  } else {
    Matrix d(rows, m, std::move(diffs));
    Echelon ech = reduced_echelon(d);
    std::vector<bool> is_pivot(m, false);
    for (auto q : ech.pivots) is_pivot[q] = true;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < m; ++i)
      if (!is_pivot[i]) free.push_back(i);
    if (free.size() > 24) throw std::length_error("variable_blocks: character lattice too large to enumerate");
    // Values on the free coordinates determine the vector; pivots follow from
    // the reduced rows.
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << free.size()); ++mask) {
      std::vector<Rational> y(m);
      for (std::size_t f = 0; f < free.size(); ++f) y[free[f]] = (mask >> f) & 1;
      bool binary = true;
      for (std::size_t k = 0; k < ech.rows.size() && binary; ++k) {
        Rational acc = 0;
        for (auto f : free) acc -= Rational(ech.rows[k][f]) * y[f];
        y[ech.pivots[k]] = acc / Rational(ech.rows[k][ech.pivots[k]]);
        binary = y[ech.pivots[k]] == 0 || y[ech.pivots[k]] == 1;
      }
      if (!binary) continue;
      std::vector<std::size_t> block;
      for (std::size_t i = 0; i < m; ++i)
        if (y[i] == 1) block.push_back(i);
      if (block.empty() || block.size() == m) continue;
      if (splits_over(p, block)) split_sets.push_back(std::move(block));
    }
  }
  // Splitting sets are closed under intersection; atoms are the blocks.
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<bool> placed(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (placed[i]) continue;
    std::vector<bool> atom(m, true);
    for (const auto& s : split_sets) {
      if (!std::binary_search(s.begin(), s.end(), i)) continue;
      std::vector<bool> member(m, false);
      for (auto j : s) member[j] = true;
      for (std::size_t j = 0; j < m; ++j) atom[j] = atom[j] && member[j];
    }
    std::vector<std::size_t> block;
    for (std::size_t j = 0; j < m; ++j)
      if (atom[j]) {
        block.push_back(j);
        placed[j] = true;
      }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

ComponentCountVerdict component_count_check(const ProductSpec& spec, const LegendreConfig& config) {
  ComponentCountVerdict v;
  v.constructed_blocks = spec.factor_blocks;
  std::sort(v.constructed_blocks.begin(), v.constructed_blocks.end());
  v.expected_factor_count = spec.expected_factor_count;
  if (spec.degree < 2) {
    v.detail = "degree below 2: no Legendre transform";
    return v;
  }
  auto res = legendre_transform(spec.polynomial, config);
  v.status = res.status;
  if (res.status != LegendreStatus::ekp) {
    v.detail = "P is not EKP-homaloidal: " + to_string(res.status);
    return v;
  }
  v.p_star = res.transform;
  v.polynomial_blocks = variable_blocks(spec.polynomial);
  v.dual_blocks = variable_blocks(*v.p_star);
  v.holds = v.polynomial_blocks == v.constructed_blocks && v.dual_blocks == v.constructed_blocks;
  std::ostringstream os;
  os << v.constructed_blocks.size() << " constructed blocks, P splits into " << v.polynomial_blocks.size()
     << ", P_* splits into " << v.dual_blocks.size() << "; irreducible components by construction "
     << v.expected_factor_count;
  v.detail = os.str();
  return v;
}

bool EntryVerification::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const EntryCheck& c) { return c.passed; });
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

EntryVerification verify_entry(const CatalogEntry& e, const VerifyOptions& options) {
  EntryVerification out;
  const Polynomial& p = e.polynomial;
  const SymbolSystem sys = symbol_system_of(p);
  out.profile = sys.profile();
  out.ambient_dimension = sys.ambient_dimension();

  out.checks.push_back({"profile", out.profile == e.expected.profile,
                        "computed " + join(out.profile) + ", expected " + join(e.expected.profile)});
  out.checks.push_back({"ambient_dimension", out.ambient_dimension == e.expected.ambient_dimension,
                        "computed " + std::to_string(out.ambient_dimension) + ", expected " +
                            std::to_string(e.expected.ambient_dimension)});

  auto symbol = verify_symbol_system(sys);
  out.checks.push_back({"symbol_system", symbol.passed, symbol.passed ? "all inclusions hold" : symbol.failure});

  auto symmetry = rank_symmetry_check(p);
  out.checks.push_back({"rank_symmetry", symmetry.holds, "catalecticant ranks " + join(symmetry.ranks)});

  if (e.expected.degree >= 2) {
    LegendreConfig lc = options.legendre;
    lc.seed = options.seed;
    auto smooth = smoothness_report(p, lc);
    out.checks.push_back({"smoothness_conditions", smooth.passes_all, smooth.verdict});
    auto dbl = double_transform_check(p, lc);
    std::string detail = "forward " + to_string(dbl.forward.status);
    if (dbl.backward) detail += ", backward " + to_string(dbl.backward->status);
    if (dbl.forward.transform) detail += "; P_* = " + dbl.forward.transform->to_string();
    out.checks.push_back({"legendre_round_trip", dbl.holds, detail});
  }

  AmbientSpace a(p);
  Sampler rng(options.seed);
  bool consistent = true;
  std::size_t done = 0;
  for (; done < options.action_samples && consistent; ++done) {
    Rational t(rng.uniform(6), 1 + std::abs(rng.uniform(3)));
    t.canonicalize();
    if (t == 0) t = 1;
    Vector w = rng.box_vector(p.num_vars(), 5);
    Vector v = rng.box_vector(p.num_vars(), 5);
    Vector shifted(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) shifted[i] = w[i] + t * v[i];
    consistent = translate(a, v, embed(a, t, w)) == embed(a, t, shifted);
  }
  out.checks.push_back({"action_consistency", consistent, std::to_string(done) + " samples"});
  return out;
}

}  // namespace eulersym
