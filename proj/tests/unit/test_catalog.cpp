#include "eulersym/catalog.hpp"
#include "support.hpp"

#include <gmpxx.h>

using namespace eulersym;
using namespace eulersym::testing;

namespace {

std::size_t choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out.get_ui();
}

using Blocks = std::vector<std::vector<std::size_t>>;

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("dimension profiles match closed forms") {
    for (unsigned n = 1; n <= 8; ++n) {
      auto e = build("quad", {n});
      CHECK(symbol_system_of(e.polynomial).profile() == std::vector<std::size_t>{1, n, 1});
      CHECK(e.expected.ambient_dimension == n + 2);
    }
    for (unsigned m = 1; m <= 4; ++m) {
      auto e = build("quadline", {m});
      CHECK(symbol_system_of(e.polynomial).profile() == std::vector<std::size_t>{1, m + 1, m + 1, 1});
      CHECK(e.expected.ambient_dimension == 2 * (m + 2));
    }
    for (unsigned m = 1; m <= 6; ++m) {
      auto s = symbol_system_of(build("monprod", {m}).polynomial);
      for (unsigned k = 0; k <= m; ++k) CHECK(s.profile()[k] == choose(m, k));
      CHECK(s.ambient_dimension() == std::size_t{1} << m);
    }
    for (unsigned n = 1; n <= 3; ++n) {
      auto det = symbol_system_of(build("det", {n}).polynomial).profile();
      auto sym = symbol_system_of(build("symdet", {n}).polynomial).profile();
      for (unsigned k = 0; k <= n; ++k) {
        CHECK(det[k] == choose(n, k) * choose(n, k));
        CHECK(sym[k] == choose(n, k) * choose(n, k) - choose(n, k - 1) * choose(n, k + 1));
      }
    }
    for (unsigned size : {2u, 4u, 6u}) {
      auto p = symbol_system_of(build("pfaff", {size}).polynomial).profile();
      for (unsigned k = 0; k <= size / 2; ++k) CHECK(p[k] == choose(size, 2 * k));
    }
    CHECK(symbol_system_of(build("cartan", {}).polynomial).profile() == std::vector<std::size_t>{1, 27, 27, 1});
    CHECK(symbol_system_of(build("x_cubed", {}).polynomial).profile() == std::vector<std::size_t>{1, 1, 1, 1});
  }

  TEST_CASE("expected invariants agree with the computed ones") {
    for (const char* name : {"x_cubed", "quad3", "quadline2", "monprod3", "det2", "det3", "symdet3", "pfaff6"}) {
      auto e = build(name);
      auto s = symbol_system_of(e.polynomial);
      CHECK(s.profile() == e.expected.profile);
      CHECK(s.ambient_dimension() == e.expected.ambient_dimension);
      CHECK(e.polynomial.num_vars() == e.expected.num_vars);
      CHECK(e.polynomial.homogeneous_degree() == e.expected.degree);
      CHECK(e.variable_names.size() == e.expected.num_vars);
    }
  }

  TEST_CASE("literal polynomials") {
    auto det2 = build("det2");
    CHECK(det2.polynomial.to_string(det2.variable_names) == "x_11*x_22 - x_12*x_21");
    auto pf = build("pfaff4");
    CHECK(pf.polynomial.to_string(pf.variable_names) == "x_12*x_34 - x_13*x_24 + x_14*x_23");
    auto cartan = build("cartan");
    CHECK(cartan.polynomial.size() == 45);
    CHECK(cartan.polynomial.num_vars() == 27);
    CHECK(build("quadline1").polynomial == x(2, 0).pow(2) * x(2, 1));
    CHECK(build("x_cubed").polynomial == x(1, 0).pow(3));
    auto sym2 = build("symdet2");
    CHECK(sym2.polynomial.to_string(sym2.variable_names) == "x_11*x_22 - x_12^2");
  }

  TEST_CASE("labels") {
    CHECK(build("det3").expected.label == "Gr(3,6)");
    CHECK(build("det3").expected.description == "Grassmannian variety Gr(3,6)");
    CHECK(build("symdet3").expected.label == "LG(3,6)");
    CHECK(build("pfaff6").expected.label == "Spinor S_6");
    CHECK(build("quad5").expected.description == "hyperquadric Q^5");
    CHECK(build("cartan").expected.description == "27-dimensional E_7/P_7");
    CHECK_FALSE(build("x_cubed").reduced);
    CHECK_FALSE(build("quad1").reduced);
    CHECK(build("quad2").reduced);
    CHECK(build("quad2").expected.factor_count == 2);
  }

  TEST_CASE("name parsing and errors") {
    CHECK(build("det3").display_name() == "det[3]");
    CHECK(build("det[3]").polynomial == build("det", {3}).polynomial);
    CHECK(build("cartan").display_name() == "cartan");
    CHECK_THROWS_AS(build("det9"), CatalogError);
    CHECK_THROWS_AS(build("nosuch"), CatalogError);
    CHECK_THROWS_AS(build("quad"), CatalogError);
    CHECK_THROWS_AS(build("cartan[2]"), CatalogError);
    CHECK_THROWS_AS(build("pfaff5"), CatalogError);
    CHECK(catalog_families().size() == 8);
  }

  TEST_CASE("products") {
    auto xy = parse_product("monprod1,monprod1");
    CHECK(xy.polynomial == x(2, 0) * x(2, 1));
    CHECK(xy.expected_ambient_dimension == 4);
    CHECK(symbol_system_of(xy.polynomial).ambient_dimension() == 4);
    CHECK(xy.variable_names == std::vector<std::string>{"x1_1", "x1_2"});

    auto ql = parse_product("quad2,monprod1");
    CHECK(ql.polynomial == build("quadline2").polynomial);
    CHECK(ql.expected_ambient_dimension == 8);
    CHECK(ql.factor_blocks == Blocks{{0, 1}, {2}});
    CHECK(ql.degree == 3);
    CHECK_THROWS_AS(parse_product(""), CatalogError);
  }

  TEST_CASE("ambient dimension is multiplicative over products") {
    const std::vector<std::string> names{"quad2", "quad3", "monprod2", "det2", "x_cubed", "quadline1"};
    for (const auto& a : names)
      for (const auto& b : names) {
        auto spec = parse_product(a + "," + b);
        CHECK(symbol_system_of(spec.polynomial).ambient_dimension() == spec.expected_ambient_dimension);
      }
  }

  TEST_CASE("classification") {
    CHECK(classify(build("det3")) == std::vector<std::string>{"Gr(3,6)"});
    CHECK(classify(build("x_cubed")) == std::vector<std::string>{"non-reduced (outside the classification)"});
    CHECK(classify(build("quadline2")) == std::vector<std::string>{"Q^2", "P^1 (convention unresolved)"});
    CHECK(classify(build("monprod2")).size() == 2);
    CHECK(classify(build("det1")) == std::vector<std::string>{"P^1 (convention unresolved)"});
    CHECK(classify(parse_product("quad3,det2")) == std::vector<std::string>{"Q^3", "Gr(2,4)"});
  }

  TEST_CASE("variable blocks") {
    CHECK(splits_over(x(2, 0) * x(2, 1), {0}));
    CHECK_FALSE(splits_over(x(2, 0).pow(2) + x(2, 1).pow(2), {0}));
    CHECK(variable_blocks(x(3, 0) * x(3, 1) * x(3, 2)) == Blocks{{0}, {1}, {2}});
    CHECK(variable_blocks(build("quadline3").polynomial) == Blocks{{0, 1, 2}, {3}});
    CHECK(variable_blocks(build("det3").polynomial) == Blocks{{0, 1, 2, 3, 4, 5, 6, 7, 8}});
    CHECK(variable_blocks(parse_product("det2,quad2").polynomial) == Blocks{{0, 1, 2, 3}, {4, 5}});
  }

  TEST_CASE("component counts") {
    for (const char* list : {"monprod3", "monprod1,monprod1", "quadline2", "quad2,monprod1", "det2,quad3"}) {
      auto v = component_count_check(parse_product(list));
      CHECK_MESSAGE(v.holds, list);
      CHECK(v.status == LegendreStatus::ekp);
      CHECK(v.polynomial_blocks == v.constructed_blocks);
      CHECK(v.dual_blocks == v.constructed_blocks);
    }
    CHECK(component_count_check(parse_product("monprod3")).constructed_blocks.size() == 3);
  }

  TEST_CASE("entry verification") {
    for (const char* name : {"quad3", "monprod3", "det2", "quadline1", "x_cubed"}) {
      VerifyOptions o;
      o.action_samples = 5;
      auto v = verify_entry(build(name), o);
      CHECK_MESSAGE(v.passed(), name);
      CHECK(v.profile == build(name).expected.profile);
    }
  }
}
