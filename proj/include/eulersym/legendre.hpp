#pragma once

#include "eulersym/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eulersym {

struct LegendreConfig {
  std::uint64_t seed = 0;
  std::size_t verify_points = 64;
  bool certify = false;
  std::size_t max_rounds = 32;
  long initial_box = 2;  // sampling box [-B, B]^m, B doubles every round
};

enum class LegendreStatus { ekp, inconsistent, degenerate_gradient_image };

std::string to_string(LegendreStatus s);

struct LegendreResult {
  LegendreStatus status = LegendreStatus::inconsistent;
  // P_* on the dual variables (same count as P), present when status == ekp.
  std::optional<Polynomial> transform;
  std::size_t samples_used = 0;
  std::size_t verified_points = 0;
  bool verification_passed = false;
  bool certified = false;
  std::size_t rounds = 0;
  std::size_t unknowns = 0;        // candidate monomials for P_* (target weight class)
  std::size_t weight_classes = 0;  // classes the degree-r monomials split into
  std::size_t solution_dimension = 0;  // kernel dimension found when degenerate
};

// Degree-r monomials grouped by their character under the diagonal torus
// preserving P up to scalars. Any polynomial vanishing on the gradient image
// splits into such classes, and P_* (if it exists) lies in the class of the
// monomials of P, so each class can be solved on its own.
struct WeightClasses {
  std::vector<std::vector<Integer>> characters;  // basis of the torus weight lattice
  std::vector<std::vector<Monomial>> classes;
  std::size_t target = 0;  // index of the class containing supp(P)
};

WeightClasses symmetry_weight_classes(const Polynomial& p);

// Seeks P_* with P_*(dP(w)) = P(w)^{r-1}. Equations come from seeded
// integer samples in doubling boxes; sampling stops once the rank has not
// grown for three consecutive rounds (or every class has full rank). A
// unique solution is then checked at fresh points and, with certify, by
// symbolic expansion. Non-ekp verdicts are probabilistic.
LegendreResult legendre_transform(const Polynomial& p, const LegendreConfig& config = {});

struct EkpVerdict {
  bool ekp = false;
  LegendreResult result;
};

EkpVerdict is_ekp_homaloidal(const Polynomial& p, const LegendreConfig& config = {});

enum class CheckMode { symbolic, sampled };

struct GradientIdentityReport {
  CheckMode mode = CheckMode::symbolic;
  bool forward = false;   // dP_*(dP(w)) = P(w)^{r-2} w
  bool backward = false;  // dP(dP_*(u)) = P_*(u)^{r-2} u
  std::size_t points = 0;
  bool holds() const { return forward && backward; }
};

GradientIdentityReport verify_gradient_identities(const Polynomial& p, const Polynomial& p_star, CheckMode mode,
                                                  std::size_t points = 64, std::uint64_t seed = 0);

struct DoubleTransformVerdict {
  bool holds = false;
  LegendreResult forward;
  std::optional<LegendreResult> backward;
};

DoubleTransformVerdict double_transform_check(const Polynomial& p, const LegendreConfig& config = {});

// P_*(dP(w)) - P(w)^{r-1} expanded symbolically.
Polynomial legendre_defect(const Polynomial& p, const Polynomial& p_star);

}  // namespace eulersym
