#include <gtest/gtest.h>

#include <random>

#include "oddsing/verma.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace oddsing;
using testing_support::display_weight;
using testing_support::gen;
using testing_support::gl;

TEST(Verma, OddAnticommutatorOnLowestStep) {
  const SuperAlgebra& g = gl(1, 1);
  Straightener st(g);
  for (long a : {-2L, 0L, 5L}) {
    auto v = act_generator(st, gen(g, "E(1,1bar)"), highest_weight_vector(g, display_weight({a}, {-a})));
    EXPECT_TRUE(act_generator(st, gen(g, "E(1bar,1)"), v).is_zero());
  }
  const Weight lam = display_weight({Rat(3, 2)}, {4});
  auto v = act_generator(st, gen(g, "E(1,1bar)"), highest_weight_vector(g, lam));
  auto back = act_generator(st, gen(g, "E(1bar,1)"), v);
  EXPECT_EQ(back.expansion, Element<Rat>::unit().scaled(Rat(11, 2)));
}

TEST(Verma, UnitActsTrivially) {
  const SuperAlgebra& g = gl(2, 1);
  Straightener st(g);
  auto basis = weight_space_basis(g, display_weight({1, 2}, {3}), display_weight({0, 2}, {4}));
  ASSERT_FALSE(basis.empty());
  for (const auto& v : basis) EXPECT_EQ(act(st, Element<Rat>::unit(), v), v);
}

TEST(Verma, HighestWeightCondition) {
  const SuperAlgebra& g = gl(2, 2);
  Straightener st(g);
  const auto v = highest_weight_vector(g, display_weight({4, -1}, {2, 7}));
  for (int r : g.raising()) EXPECT_TRUE(act_generator(st, r, v).is_zero()) << g.generator(r).label;
}

TEST(Verma, WeightSpaceBases) {
  const SuperAlgebra& g = gl(2, 1);
  const Weight lam = display_weight({1, 5}, {-2});
  EXPECT_EQ(weight_space_basis(g, lam, lam).size(), 1u);
  auto two = weight_space_basis(g, lam, lam - g.weight_of(delta_eps_root(2, 1, 2, 1)));
  ASSERT_EQ(two.size(), 2u);
  std::vector<Monomial> expected{Monomial({gen(g, "E(1,1bar)"), gen(g, "E(1bar,2bar)")}),
                                 Monomial({gen(g, "E(1,2bar)")})};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(two[0].expansion.terms().begin()->first, expected[0]);
  EXPECT_EQ(two[1].expansion.terms().begin()->first, expected[1]);
  const SuperAlgebra& h = gl(2, 2);
  const Weight mu = display_weight({2, 0}, {3, -2});
  EXPECT_EQ(weight_space_basis(h, mu, mu - h.weight_of(delta_eps_root(2, 2, 2, 2))).size(), 4u);
}

TEST(Verma, CartanActsByWeight) {
  std::mt19937_64 rng(8);
  const SuperAlgebra& g = gl(2, 2);
  Straightener st(g);
  const Weight lam = display_weight({Rat(1, 3), 2}, {-1, 5});
  const Weight mu = lam - g.weight_of({1, 1, -1, -1});
  for (const auto& v : weight_space_basis(g, lam, mu))
    for (int h : g.cartan()) {
      const Rat value = mu.coord(g.generator(h).cartan_coord);
      EXPECT_EQ(act_generator(st, h, v).expansion, v.expansion.scaled(value));
    }
}

TEST(Verma, ModuleActionIdentity) {
  std::mt19937_64 rng(1234);
  int checked = 0;
  for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 1}, std::pair{3, 1}}) {
    const SuperAlgebra& g = gl(m, n);
    Straightener st(g);
    Weight lam = Weight::zero(m, n);
    for (auto& v : lam.delta) v = testing_support::draw_int(rng);
    for (auto& v : lam.eps) v = testing_support::draw_int(rng);
    for (int trial = 0; trial < (m == 2 && n == 2 ? 100 : 50); ++trial) {
      const int x = static_cast<int>(rng() % g.dimension()), y = static_cast<int>(rng() % g.dimension());
      std::vector<int> word(rng() % 4);
      for (int& w : word) w = g.lowering()[rng() % g.lowering().size()];
      VermaVector<Rat> v{&g, lam.coords(), st.straighten(word)};
      if (v.is_zero()) v = highest_weight_vector(g, lam);
      EXPECT_TRUE(testing_support::module_action_holds(g, st, x, y, v))
          << g.generator(x).label << " " << g.generator(y).label;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 200);
}

TEST(Verma, ScalarRatio) {
  Element<Rat> b = Element<Rat>::term(Monomial({1}), Rat(2));
  b.add(Monomial({2}), Rat(-1));
  EXPECT_EQ(scalar_ratio(b.scaled(Rat(-3, 4)), b), Rat(-3, 4));
  Element<Rat> c = b;
  c.add(Monomial({3}), Rat(1));
  EXPECT_FALSE(scalar_ratio(c, b).has_value());
  EXPECT_FALSE(scalar_ratio(b, Element<Rat>()).has_value());
}
