#include "eulersym/variety.hpp"
#include "support.hpp"

#include <gmpxx.h>

using namespace eulersym;
using namespace eulersym::testing;

namespace {

AmbientPoint point(std::vector<Vector> blocks) { return AmbientPoint(std::move(blocks)); }

Rational binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

// The translation formula evaluated functional by functional, reading each
// f^l through coordinates in the block basis rather than through the
// contraction matrices used by the implementation.
AmbientPoint translate_oracle(const AmbientSpace& a, const Vector& v, const AmbientPoint& x) {
  const auto& s = a.system();
  AmbientPoint out = x;
  const Rational& t = x.t();
  for (std::size_t i = 0; i < v.size(); ++i) out.block(1)[i] = x.w()[i] + t * v[i];
  for (unsigned k = 2; k <= s.rank; ++k) {
    for (std::size_t j = 0; j < s[k].dimension(); ++j) {
      const Polynomial& phi = s[k].basis()[j];
      Rational value = t * phi.evaluate(v);
      value += Rational(k) * contract_power(phi, v, k - 1).evaluate(x.w());
      for (unsigned l = 2; l <= k; ++l) {
        auto coords = s[l].coordinates(contract_power(phi, v, k - l));
        REQUIRE(coords);
        Rational f = 0;
        for (std::size_t i = 0; i < coords->size(); ++i) f += (*coords)[i] * x.block(l)[i];
        value += binomial(k, l) * f;
      }
      out.block(k)[j] = value;
    }
  }
  return out;
}

AmbientPoint random_point(Sampler& rng, const AmbientSpace& a) {
  std::vector<Vector> blocks;
  for (std::size_t d : a.layout()) blocks.push_back(random_rational_vector(rng, d, 6));
  blocks[0][0] = 1 + std::abs(rng.uniform(3));
  return point(std::move(blocks));
}

const Polynomial& prod3() {
  static const Polynomial p = x(3, 0) * x(3, 1) * x(3, 2);
  return p;
}

}  // namespace

TEST_SUITE("variety") {
  TEST_CASE("embedding examples") {
    AmbientSpace xy(x(2, 0) * x(2, 1));
    CHECK(xy.layout() == std::vector<std::size_t>{1, 2, 1});
    CHECK(xy.dimension() == 4);
    CHECK(embed(xy, 1, vec({3, 5})) == point({vec({1}), vec({3, 5}), vec({15})}));
    CHECK(embed(xy, 2, vec({3, 5})) == point({vec({4}), vec({6, 10}), vec({15})}));
    CHECK(embed(xy, 1, vec({0, 0})) == xy.origin());
    CHECK_THROWS(embed(xy, 0, vec({0, 0})));
    AmbientSpace a(prod3());
    CHECK(embed(a, 1, vec({1, 1, 1})).flat() == Vector(8, Rational(1)));
  }

  TEST_CASE("projective equality and canonical form") {
    auto p = point({vec({0}), vec({2, 4}), vec({6})});
    auto q2 = point({vec({0}), vec({-1, -2}), vec({-3})});
    CHECK(p.projectively_equal(q2));
    CHECK(p.canonical() == q2.canonical());
    CHECK_FALSE(p.projectively_equal(point({vec({0}), vec({1, 2}), vec({4})})));
    CHECK(p.lowest_weight() == 1u);
    CHECK(p.highest_weight() == 2u);
  }

  TEST_CASE("translation examples") {
    AmbientSpace xy(x(2, 0) * x(2, 1));
    auto e = embed(xy, 1, vec({3, 5}));
    CHECK(translate(xy, vec({0, 0}), e) == e);
    CHECK(translate(xy, vec({1, 0}), e) == embed(xy, 1, vec({4, 5})));
    auto boundary = point({vec({0}), vec({1, 0}), vec({0})});
    CHECK(translate(xy, vec({0, 7}), boundary) == point({vec({0}), vec({1, 0}), vec({7})}));
  }

  TEST_CASE("torus action examples") {
    AmbientSpace xy(x(2, 0) * x(2, 1));
    auto e = embed(xy, 1, vec({3, 5}));
    CHECK(torus_act(1, e) == e);
    CHECK(torus_act(5, xy.origin()).projectively_equal(xy.origin()));
    CHECK(torus_act(2, e).projectively_equal(embed(xy, 1, vec({6, 10}))));
    CHECK_THROWS(torus_act(0, e));
  }

  TEST_CASE("Bialynicki-Birula limits") {
    AmbientSpace xy(x(2, 0) * x(2, 1));
    auto e = embed(xy, 1, vec({3, 5}));
    auto zero = bb_limit(e, LimitDirection::to_zero);
    CHECK(zero.weight == 0);
    CHECK(zero.point.projectively_equal(xy.origin()));
    auto inf = bb_limit(e, LimitDirection::to_infinity);
    CHECK(inf.weight == 2);
    CHECK(inf.point.projectively_equal(xy.terminal_point()));
    auto fixed = point({vec({0}), vec({1, 2}), vec({0})});
    CHECK(bb_limit(fixed, LimitDirection::to_zero).point == fixed);
    CHECK(bb_limit(fixed, LimitDirection::to_infinity).weight == 1);
  }

  TEST_CASE("curve limits at infinity") {
    AmbientSpace xy(x(2, 0) * x(2, 1));
    CHECK(curve_limit_at_infinity(xy, xy.origin(), vec({1, 1})).projectively_equal(xy.terminal_point()));
    auto boundary = point({vec({0}), vec({1, 0}), vec({0})});
    CHECK(curve_limit_at_infinity(xy, boundary, vec({0, 1})).projectively_equal(xy.terminal_point()));
    CHECK(curve_limit_at_infinity(xy, boundary, vec({0, 0})).projectively_equal(boundary));
    // Along a null direction of P the origin's curve stays off the terminal point.
    auto null = curve_limit_at_infinity(xy, xy.origin(), vec({1, 0}));
    CHECK_FALSE(null.projectively_equal(xy.terminal_point()));
    CHECK(null.projectively_equal(point({vec({0}), vec({1, 0}), vec({0})})));
  }

  TEST_CASE("relations") {
    AmbientSpace xy(x(2, 0) * x(2, 1));
    auto rels = quadric_relations(xy);
    REQUIRE(rels.size() == 1);
    CHECK(rels[0].quadric());
    CHECK(rels[0].label() == "k=2,j=1");
    CHECK(rels[0].evaluate(embed(xy, 3, vec({2, 7}))) == 0);
    CHECK(relation_membership(xy, xy.origin()));
    CHECK(relation_membership(xy, xy.terminal_point()));
    CHECK_FALSE(relation_membership(xy, point({vec({1}), vec({0, 0}), vec({1})})));

    AmbientSpace a(prod3());
    auto all = quadric_relations(a);
    CHECK(all.size() == 4);
    CHECK(relations_failing_symbolically(a).empty());
    auto sym = embed_symbolic(a);
    REQUIRE(sym.size() == 4);
    CHECK(sym[3][0] == x(4, 1) * x(4, 2) * x(4, 3));
    CHECK(sym[0][0] == x(4, 0).pow(3));
  }

  TEST_CASE("smoothness reports") {
    auto cube = smoothness_report(x(1, 0).pow(3));
    REQUIRE(cube.items.size() == 5);
    CHECK(cube.items[0].outcome == NecessaryCondition::Outcome::pass);
    CHECK(cube.items[1].outcome == NecessaryCondition::Outcome::pass);
    CHECK(cube.items[2].outcome == NecessaryCondition::Outcome::pass);
    CHECK(cube.items[3].outcome == NecessaryCondition::Outcome::flag);
    CHECK(cube.verdict == "passes all implemented necessary conditions");

    auto fermat = smoothness_report(x(2, 0).pow(3) + x(2, 1).pow(3));
    CHECK(fermat.verdict == "fails necessary condition (a)");
    CHECK_FALSE(fermat.passes_all);

    auto xxy = smoothness_report(x(2, 0).pow(2) * x(2, 1));
    CHECK(xxy.items[0].outcome == NecessaryCondition::Outcome::pass);
    CHECK(xxy.items[3].outcome == NecessaryCondition::Outcome::flag);

    auto prod = smoothness_report(prod3());
    CHECK(prod.passes_all);
    for (const auto& item : prod.items) CHECK(item.outcome == NecessaryCondition::Outcome::pass);
    for (const auto* rep : {&cube, &fermat, &xxy, &prod}) CHECK(rep->verdict.rfind("smooth", 0) != 0);
  }

  TEST_CASE("translation agrees with the functional formula on arbitrary points") {
    Sampler rng(51);
    for (const auto& p : {x(2, 0) * x(2, 1), prod3(), x(2, 0).pow(3) + x(2, 1).pow(3), x(2, 0).pow(2) * x(2, 1)}) {
      AmbientSpace a(p);
      for (int trial = 0; trial < 10; ++trial) {
        auto pt = random_point(rng, a);
        auto v = random_rational_vector(rng, a.num_vars(), 5);
        CHECK(translate(a, v, pt) == translate_oracle(a, v, pt));
      }
    }
  }

  TEST_CASE("action consistency and group law") {
    Sampler rng(52);
    for (const auto& p : {x(2, 0) * x(2, 1), prod3(), x(2, 0).pow(3) + x(2, 1).pow(3)}) {
      AmbientSpace a(p);
      for (int trial = 0; trial < 15; ++trial) {
        Rational t = 1 + std::abs(rng.uniform(4));
        auto w = random_rational_vector(rng, a.num_vars(), 5);
        auto v = random_rational_vector(rng, a.num_vars(), 5);
        auto v2 = random_rational_vector(rng, a.num_vars(), 5);
        Vector shifted(w.size()), sum(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
          shifted[i] = w[i] + t * v[i];
          sum[i] = v[i] + v2[i];
        }
        CHECK(translate(a, v, embed(a, t, w)) == embed(a, t, shifted));
        auto boundary = bb_limit(embed(a, t, w), LimitDirection::to_infinity).point;
        CHECK(translate(a, v, translate(a, v2, boundary)) == translate(a, sum, boundary));
      }
    }
  }

  TEST_CASE("torus equivariance and orbit-limit dichotomy") {
    Sampler rng(53);
    AmbientSpace a(prod3());
    for (int trial = 0; trial < 20; ++trial) {
      auto w = random_rational_vector(rng, 3, 5);
      Rational lambda = 1 + std::abs(rng.uniform(5));
      Vector scaled(w);
      for (auto& c : scaled) c *= lambda;
      CHECK(torus_act(lambda, embed(a, 1, w)).projectively_equal(embed(a, 1, scaled)));
      if (prod3().evaluate(w) != 0) {
        CHECK(bb_limit(embed(a, 1, w), LimitDirection::to_zero).point.projectively_equal(a.origin()));
        auto inf = bb_limit(embed(a, 1, w), LimitDirection::to_infinity);
        CHECK(inf.weight == 3);
        CHECK(inf.point.projectively_equal(a.terminal_point()));
      }
    }
  }
}
