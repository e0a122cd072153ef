#include <gtest/gtest.h>

#include <random>

#include "oddsing/glmn.hpp"
#include "support.hpp"

using namespace oddsing;
using testing_support::display_weight;
using testing_support::gen;
using testing_support::gl;

namespace {

CartanPoly H(int k) { return CartanPoly::symbol(k); }

Monomial mono(const SuperAlgebra& g, std::initializer_list<const char*> labels) {
  std::vector<int> v;
  for (const char* l : labels) v.push_back(gen(g, l));
  return Monomial(v);
}

}  // namespace

// Symbolic coordinates: H(k) is coordinate k, i.e. a_1, a_2, ... then b_1, ...
TEST(ClosedFormula, Gl21) {
  const SuperAlgebra& g = gl(2, 1);
  const CartanPoly a1 = H(0), a2 = H(1);
  std::vector<CartanPoly> lam{a1, a2, -a2 - 1};
  auto S = singular_vector_formula(g, lam, delta_eps_root(2, 1, 2, 1));
  Element<CartanPoly> expected;
  expected.add(mono(g, {"E(1,1bar)", "E(1bar,2bar)"}), CartanPoly(1));
  expected.add(mono(g, {"E(1,2bar)"}), a2 - a1);
  EXPECT_EQ(S.expansion, expected);
}

TEST(ClosedFormula, Gl31) {
  const SuperAlgebra& g = gl(3, 1);
  const CartanPoly a1 = H(0), a2 = H(1), a3 = H(2);
  std::vector<CartanPoly> lam{a1, a2, a3, -a3 - 2};
  auto S = singular_vector_formula(g, lam, delta_eps_root(3, 1, 3, 1));
  Element<CartanPoly> expected;
  expected.add(mono(g, {"E(1,1bar)", "E(1bar,2bar)", "E(2bar,3bar)"}), CartanPoly(1));
  expected.add(mono(g, {"E(1,1bar)", "E(1bar,3bar)"}), a3 - a2);
  expected.add(mono(g, {"E(1,2bar)", "E(2bar,3bar)"}), a3 - a1 + 1);
  expected.add(mono(g, {"E(1,3bar)"}), (a3 - a1 + 1) * (a3 - a2));
  EXPECT_EQ(S.expansion, expected);
}

TEST(ClosedFormula, Gl22) {
  const SuperAlgebra& g = gl(2, 2);
  const CartanPoly a1 = H(0), a2 = H(1), b1 = H(2);
  std::vector<CartanPoly> lam{a1, a2, b1, -a2};
  auto S = singular_vector_formula(g, lam, delta_eps_root(2, 2, 2, 2));
  const CartanPoly b2 = -a2;
  Element<CartanPoly> expected;
  expected.add(mono(g, {"E(2,1)", "E(1,1bar)", "E(1bar,2bar)"}), CartanPoly(1));
  expected.add(mono(g, {"E(2,1)", "E(1,2bar)"}), a2 - a1);
  expected.add(mono(g, {"E(2,1bar)", "E(1bar,2bar)"}), b2 - b1 - 1);
  expected.add(mono(g, {"E(2,2bar)"}), (a2 - a1) * (b2 - b1 - 1));
  EXPECT_EQ(S.expansion, expected);
}

TEST(ClosedFormula, SingleTermCase) {
  const SuperAlgebra& g = gl(1, 1);
  auto S = singular_vector_formula(g, display_weight({3}, {-3}), delta_eps_root(1, 1, 1, 1));
  EXPECT_EQ(S.expansion, Element<Rat>::term(mono(g, {"E(1,1bar)"}), Rat(1)));
}

TEST(ClosedFormula, CValues) {
  const SuperAlgebra& g = gl(2, 2);
  const std::vector<CartanPoly> lam = generic_weight(g);
  auto d = c_values(g, lam, delta_eps_root(2, 2, 2, 2));
  ASSERT_EQ(d.c.size(), 2u);
  EXPECT_EQ(d.c[0], H(1) - H(0));          // c_{1bar} = a_2 - a_1
  EXPECT_EQ(d.c[1], H(3) - H(2) - 1);      // c_1 = b_2 - b_1 - 1
  const SuperAlgebra& h = gl(3, 1);
  auto e = c_values(h, generic_weight(h), delta_eps_root(3, 1, 3, 1));
  ASSERT_EQ(e.c.size(), 2u);
  EXPECT_EQ(e.c[0], H(2) - H(1));          // c_{2bar}
  EXPECT_EQ(e.c[1], H(2) - H(0) + 1);      // c_{1bar}
  EXPECT_TRUE(c_values(gl(1, 1), generic_weight(gl(1, 1)), delta_eps_root(1, 1, 1, 1)).c.empty());
  EXPECT_THROW(c_values(g, lam, RootVector{1, -1, 0, 0}), Error);
}

TEST(ClosedFormula, DCoefficient) {
  const SuperAlgebra& g = gl(2, 2);
  const auto beta = delta_eps_root(2, 2, 2, 2);
  auto sym = c_values(g, generic_weight(g), beta);
  EXPECT_EQ(d_coefficient(sym, ChainSubset{0b11, 2}), CartanPoly(1));
  EXPECT_EQ(d_coefficient(sym, ChainSubset{0, 2}), (H(1) - H(0)) * (H(3) - H(2) - 1));
  auto num = c_values(g, display_weight({1, 0}, {2, -1}).coords(), beta);
  EXPECT_EQ(d_coefficient(num, ChainSubset{0b01, 2}), Rat(-4));
}

TEST(ClosedFormula, SubsetEnumeration) {
  for (int s = 1; s <= 3; ++s)
    for (int t = 1; t <= 3; ++t) {
      auto all = all_chain_subsets(s, t);
      ASSERT_EQ(all.size(), std::size_t{1} << (s + t - 2));
      EXPECT_EQ(all.front().cardinality(), s + t - 2);
      for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GE(all[i - 1].cardinality(), all[i].cardinality());
    }
  EXPECT_EQ(chain_index(3, 0).value, 2);
  EXPECT_TRUE(chain_index(3, 1).barred);
  EXPECT_FALSE(chain_index(3, 2).barred);
  EXPECT_EQ(chain_index(3, 2).value, 1);
}

TEST(ClosedFormula, ProofIdentities) {
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n) {
      const SuperAlgebra& g = gl(m, n);
      const auto lam = generic_weight(g);
      auto b = [&](int j) { return lam[m + j - 1]; };
      auto a = [&](int i) { return lam[i - 1]; };
      for (int s = 2; s <= m; ++s)
        for (int t = 2; t <= n; ++t) {
          auto d = c_values(g, lam, delta_eps_root(m, n, s, t));
          auto c_unbarred = [&](int j) { return d.c[s - 1 + j - 1]; };
          for (int j = 2; j <= t - 1; ++j)
            EXPECT_TRUE((b(j - 1) - b(j) + 1 - c_unbarred(j) + c_unbarred(j - 1)).is_zero());
          const CartanPoly lhs = a(s) + b(t) + s - t;
          EXPECT_EQ(lhs, b(1) + a(1) + 1 + c_unbarred(1) + d.c[s - 2]);
          EXPECT_EQ(lhs, shifted_pairing(g, lam, delta_eps_root(m, n, s, t)));
        }
    }
}

TEST(ClosedFormula, NotAtypicalIsPrecondition) {
  const SuperAlgebra& g = gl(1, 1);
  try {
    singular_vector_formula(g, display_weight({1}, {1}), delta_eps_root(1, 1, 1, 1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Precondition);
    EXPECT_NE(std::string(e.what()).find("a_s+b_t+s-t = a1+b1+1-1 = 2 != 0"), std::string::npos) << e.what();
  }
}

TEST(ClosedFormula, NonAtypicalChainIsNotSingular) {
  std::mt19937_64 rng(17);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const SuperAlgebra& g = gl(m, n);
      Straightener st(g);
      const Weight lam = testing_support::generic_weight(g, rng);
      for (int s = 1; s <= m; ++s)
        for (int t = 1; t <= n; ++t) {
          const auto beta = delta_eps_root(m, n, s, t);
          VermaVector<Rat> v{&g, lam.coords(), chain_formula(g, lam.coords(), beta).element(st)};
          bool some_nonzero = false;
          for (int e : g.simple_raisings()) some_nonzero |= !act_generator(st, e, v).is_zero();
          EXPECT_TRUE(some_nonzero) << g.name() << " " << root_str(beta, m);
        }
    }
}

TEST(Shapovalov, SmallCases) {
  const SuperAlgebra& g = gl(2, 1);
  const auto theta = shapovalov_element(g, delta_eps_root(2, 1, 2, 1));
  Element<CartanPoly> expected;
  expected.add(mono(g, {"E(1,1bar)", "E(1bar,2bar)"}), CartanPoly(1));
  expected.add(mono(g, {"E(1,2bar)"}), H(1) - H(0));
  EXPECT_EQ(theta, expected);
  EXPECT_EQ(specialize(theta, display_weight({3, 1}, {-4})).coefficient(mono(g, {"E(1,2bar)"})), Rat(2));
  const SuperAlgebra& h = gl(1, 1);
  EXPECT_EQ(shapovalov_element(h, delta_eps_root(1, 1, 1, 1)),
            Element<CartanPoly>::term(mono(h, {"E(1,1bar)"}), CartanPoly(1)));
}
