#include <cctype>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "oddsing/commands.hpp"
#include "oddsing/glmn.hpp"
#include "oddsing/osp.hpp"
#include "oddsing/render.hpp"
#include "support.hpp"

using namespace oddsing;
using testing_support::gl;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(ODDSING_GOLDEN_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing golden file " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Control words and single characters, whitespace dropped.
std::vector<std::string> latex_tokens(const std::string& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size();) {
    const unsigned char c = s[i];
    if (std::isspace(c)) {
      ++i;
    } else if (c == '\\' && i + 1 < s.size() && std::isalpha(static_cast<unsigned char>(s[i + 1]))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back(s.substr(i, j - i));
      i = j;
    } else {
      out.emplace_back(1, s[i++]);
    }
  }
  return out;
}

std::string generic_latex(const SuperAlgebra& g, int s, int t) {
  const RootVector beta = delta_eps_root(g.n_delta(), g.n_eps(), s, t);
  return render_chain_formula(g, chain_formula(g, generic_weight(g), beta), weight_symbols(g), true);
}

CartanPoly sym(int k) { return CartanPoly::symbol(k); }

}  // namespace

TEST(Render, Rationals) {
  EXPECT_EQ(render_rat(Rat(3, 2), false), "3/2");
  EXPECT_EQ(render_rat(Rat(-3, 2), true), "-\\frac{3}{2}");
  EXPECT_EQ(render_rat(Rat(-4), true), "-4");
}

TEST(Render, PolynomialOrdering) {
  const SuperAlgebra& g = gl(3, 2);
  const SymbolNamer names = weight_symbols(g);
  // a_i is symbol i-1, b_j is symbol 2+j
  EXPECT_EQ(render_poly(sym(2) - sym(0) + CartanPoly(1), names, true), "a_3-a_1+1");
  EXPECT_EQ(render_poly(sym(0) * -1 + sym(2), names, false), "a3 - a1");
  EXPECT_EQ(render_poly(sym(4) - sym(3) - CartanPoly(1), names, true), "b_2-b_1-1");
  EXPECT_EQ(render_poly(sym(0) * Rat(3, 2), names, true), "\\frac{3}{2}a_1");
  EXPECT_EQ(render_poly(sym(1) * sym(1) - sym(0), names, false), "a2^2 - a1");
  EXPECT_EQ(render_poly(CartanPoly(), names, false), "0");
}

TEST(Render, MonomialsAndElements) {
  const SuperAlgebra& g = gl(2, 1);
  const int e21 = testing_support::gen(g, "E(1bar,2bar)");
  const int x = testing_support::gen(g, "E(1,2bar)");
  EXPECT_EQ(render_monomial(g, Monomial({e21, e21}), true), "E_{\\overline{1},\\overline{2}}^{2}");
  EXPECT_EQ(render_monomial(g, Monomial({e21, e21}), false), "E(1bar,2bar)^2");
  Element<Rat> e = Element<Rat>::term(Monomial({x}), Rat(-2));
  EXPECT_EQ(render_element(g, e, false, " v+"), "-2 E(1,2bar) v+");
  EXPECT_EQ(render_element(g, Element<Rat>::unit(), false), "1");
}

TEST(Golden, Gl21Chain) {
  EXPECT_EQ(latex_tokens(generic_latex(gl(2, 1), 2, 1)), latex_tokens(read_file("gl21_d2e1.tex")));
}

TEST(Golden, Gl31Chain) {
  EXPECT_EQ(latex_tokens(generic_latex(gl(3, 1), 3, 1)), latex_tokens(read_file("gl31_d3e1.tex")));
}

TEST(Golden, Gl22Chain) {
  EXPECT_EQ(latex_tokens(generic_latex(gl(2, 2), 2, 2)), latex_tokens(read_file("gl22_d2e2.tex")));
}

TEST(Golden, CommandMatchesGl21) {
  const AlgebraChoice alg = make_algebra("gl", "even", 2, 1);
  const OutputDocument doc = cmd_singular(alg, "d2-e1", "a2,a1,-a2-1", Format::Latex);
  EXPECT_EQ(latex_tokens(doc.rendered), latex_tokens(read_file("gl21_d2e1.tex")));
}

TEST(Golden, CommandMatchesGl31) {
  const AlgebraChoice alg = make_algebra("gl", "even", 3, 1);
  const OutputDocument doc = cmd_singular(alg, "d3-e1", "a3,a2,a1,-a3-2", Format::Latex);
  EXPECT_EQ(latex_tokens(doc.rendered), latex_tokens(read_file("gl31_d3e1.tex")));
}

TEST(Golden, AtypicalSubstitutionGl22) {
  // With b_2 = -a_2 the symbolic vector is the generic one evaluated there.
  const SuperAlgebra& g = gl(2, 2);
  const RootVector beta = delta_eps_root(2, 2, 2, 2);
  Straightener st(g);
  const std::vector<CartanPoly> lam{sym(0), sym(1), sym(2), -sym(1)};
  const auto S = singular_vector_formula(g, lam, beta);
  const auto generic = chain_formula(g, generic_weight(g), beta).element(st);
  const auto substituted =
      generic.map_coefficients([&](const CartanPoly& p) { return p.evaluate(std::span<const CartanPoly>(lam)); });
  EXPECT_EQ(S.expansion, substituted);
}

TEST(Golden, Osp62CoefficientList) {
  auto real = build_osp(OspFamily::Even, 3, 1);
  const SuperAlgebra& g = real->derived;
  const nlohmann::json golden = nlohmann::json::parse(read_file("osp62_terms.json"));
  ASSERT_EQ(golden["algebra"], g.name());
  const auto terms = osp62_example_terms();
  ASSERT_EQ(golden["terms"].size(), terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& gt = golden["terms"][i];
    std::vector<std::string> labels;
    for (const RootVector& f : terms[i].factors) labels.push_back(osp_root_label(f, g.n_delta(), false));
    EXPECT_EQ(labels, gt["factors"].get<std::vector<std::string>>()) << "term " << i + 1;
    EXPECT_EQ(terms[i].coefficient, parse_expression(g, gt["coefficient"].get<std::string>())) << "term " << i + 1;
  }
}

TEST(Json, PolynomialRoundTrip) {
  const CartanPoly p = (sym(0) - sym(2) + CartanPoly(Rat(1, 3))) * (sym(1) + CartanPoly(2));
  EXPECT_EQ(poly_from_json(nlohmann::json::parse(poly_json(p).dump())), p);
}

TEST(Json, ElementRoundTrip) {
  const SuperAlgebra& g = gl(2, 2);
  const Element<CartanPoly> theta = shapovalov_element(g, delta_eps_root(2, 2, 2, 2));
  EXPECT_EQ(poly_element_from_json(g, nlohmann::json::parse(element_json(g, theta).dump())), theta);
  const Element<Rat> e = specialize(theta, testing_support::display_weight({2, 0}, {3, -2}));
  EXPECT_EQ(element_from_json(g, nlohmann::json::parse(element_json(g, e).dump())), e);
}

TEST(Json, RejectsUnknownLabels) {
  const SuperAlgebra& g = gl(1, 1);
  const auto bad = nlohmann::json::parse(R"j([{"monomial": ["E(9,9)"], "coefficient": "1"}])j");
  try {
    element_from_json(g, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Usage);
  }
}
