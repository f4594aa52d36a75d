#pragma once

#include "eulersym/legendre.hpp"
#include "eulersym/poly.hpp"
#include "eulersym/symbol.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eulersym {

struct ExpectedInvariants {
  unsigned degree = 0;
  std::size_t num_vars = 0;
  std::vector<std::size_t> profile;
  std::size_t ambient_dimension = 0;
  std::string label;        // short form, e.g. "Gr(3,6)"
  std::string description;  // e.g. "Grassmannian variety Gr(3,6)"
  // Irreducible components of V(P) over C, known by construction.
  std::size_t factor_count = 1;
};

struct CatalogEntry {
  std::string name;  // family: x_cubed, quad, quadline, monprod, det, symdet, pfaff, cartan
  std::vector<unsigned> params;
  Polynomial polynomial;
  std::vector<std::string> variable_names;
  // Variable-disjoint factors of P by construction (indices into the variables).
  std::vector<std::vector<std::size_t>> factor_blocks;
  bool reduced = true;
  ExpectedInvariants expected;

  std::string display_name() const;  // "det[3]", "cartan"
};

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FamilyInfo {
  std::string name;
  std::string parameter;  // "" when the family takes no parameter
  std::vector<unsigned> allowed;
  std::string summary;
};

const std::vector<FamilyInfo>& catalog_families();

// Throws CatalogError for unknown names and out-of-range parameters.
CatalogEntry build(const std::string& name, const std::vector<unsigned>& params);
// Accepts "det3", "det[3]", "pfaff[6]", "cartan", "x_cubed".
CatalogEntry build(std::string_view spec);

struct ProductSpec {
  std::vector<CatalogEntry> factors;
  Polynomial polynomial;
  std::vector<std::string> variable_names;
  std::vector<std::vector<std::size_t>> factor_blocks;  // concatenated, shifted
  unsigned degree = 0;
  std::size_t expected_ambient_dimension = 1;
  std::size_t expected_factor_count = 0;
};

ProductSpec product(const std::vector<CatalogEntry>& factors);
// Comma-separated list of catalog names.
ProductSpec parse_product(std::string_view list);

std::vector<std::string> classify(const CatalogEntry& e);
std::vector<std::string> classify(const ProductSpec& spec);

// True iff P = A(X) * B(complement of X) for polynomials A, B.
bool splits_over(const Polynomial& p, const std::vector<std::size_t>& block);

// Finest partition of the variables into blocks over which P factors.
// Candidates are 0/1 vectors of the diagonal-torus character lattice, so the
// search is exponential only in that lattice's rank.
std::vector<std::vector<std::size_t>> variable_blocks(const Polynomial& p);

struct ComponentCountVerdict {
  bool holds = false;
  LegendreStatus status = LegendreStatus::inconsistent;
  std::optional<Polynomial> p_star;
  std::vector<std::vector<std::size_t>> constructed_blocks;
  std::vector<std::vector<std::size_t>> polynomial_blocks;  // of P
  std::vector<std::vector<std::size_t>> dual_blocks;        // of P_*
  std::size_t expected_factor_count = 0;
  std::string detail;
};

// P_* must split over exactly the constructed variable blocks of P.
ComponentCountVerdict component_count_check(const ProductSpec& spec, const LegendreConfig& config = {});

struct EntryCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t action_samples = 20;
  LegendreConfig legendre;
};

struct EntryVerification {
  std::vector<EntryCheck> checks;
  std::vector<std::size_t> profile;
  std::size_t ambient_dimension = 0;
  bool passed() const;
};

EntryVerification verify_entry(const CatalogEntry& e, const VerifyOptions& options = {});

}  // namespace eulersym
