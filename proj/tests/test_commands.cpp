#include <gtest/gtest.h>

#include "oddsing/commands.hpp"
#include "oddsing/glmn.hpp"
#include "support.hpp"

using namespace oddsing;
using testing_support::gl;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Consistency;
}

AlgebraChoice glc(int m, int n) { return make_algebra("gl", "even", m, n); }

}  // namespace

TEST(Lambda, DisplayOrderAndSymbols) {
  const SuperAlgebra& g = gl(2, 1);
  const auto lam = parse_lambda(g, "a2, a1, -a2-1");
  ASSERT_EQ(lam.size(), 3u);
  EXPECT_EQ(lam[0], CartanPoly::symbol(0));
  EXPECT_EQ(lam[1], CartanPoly::symbol(1));
  EXPECT_EQ(lam[2], -CartanPoly::symbol(1) - CartanPoly(1));
  EXPECT_FALSE(numeric_weight(g, lam).has_value());
  EXPECT_EQ(parse_numeric_lambda(g, "4,9,-5"), testing_support::display_weight({4, 9}, {-5}));
  EXPECT_EQ(parse_expression(g, "2*a1+3/2"), CartanPoly::symbol(0) * 2 + CartanPoly(Rat(3, 2)));
  EXPECT_EQ(parse_expression(g, "(a1-a2)^2"),
            (CartanPoly::symbol(0) - CartanPoly::symbol(1)) * (CartanPoly::symbol(0) - CartanPoly::symbol(1)));
  EXPECT_EQ(parse_expression(g, "-3/4"), CartanPoly(Rat(-3, 4)));
}

TEST(Lambda, MalformedEntriesAreUsageErrors) {
  const SuperAlgebra& g = gl(2, 1);
  EXPECT_EQ(code_of([&] { parse_lambda(g, "1,2"); }), ErrorCode::Usage);
  EXPECT_EQ(code_of([&] { parse_lambda(g, "1,2,a3"); }), ErrorCode::Usage);
  EXPECT_EQ(code_of([&] { parse_lambda(g, "1,2,3/"); }), ErrorCode::Usage);
  EXPECT_EQ(code_of([&] { parse_lambda(g, "1,2,x"); }), ErrorCode::Usage);
  EXPECT_EQ(code_of([&] { parse_lambda(g, "1,2,(a1"); }), ErrorCode::Usage);
  EXPECT_EQ(code_of([&] { parse_numeric_lambda(g, "1,2,a1"); }), ErrorCode::Usage);
}

TEST(Commands, AlgebraSelection) {
  EXPECT_EQ(glc(2, 1).algebra().name(), "gl(2|1)");
  EXPECT_EQ(make_algebra("osp", "odd", 2, 1).algebra().name(), "osp(5|2)");
  EXPECT_EQ(code_of([] { make_algebra("sl", "even", 1, 1); }), ErrorCode::Usage);
  EXPECT_EQ(code_of([] { make_algebra("osp", "weird", 1, 1); }), ErrorCode::Usage);
  EXPECT_EQ(code_of([] { make_algebra("gl", "even", 0, 1); }), ErrorCode::Usage);
}

TEST(Commands, SingularSingleTerm) {
  const OutputDocument doc = cmd_singular(glc(1, 1), "d1-e1", "3,-3", Format::Plain);
  EXPECT_EQ(doc.text(), "E(1,1bar) v+\n");
  EXPECT_EQ(doc.exit_code, 0);
}

TEST(Commands, SingularNonAtypicalNamesRelation) {
  try {
    cmd_singular(glc(1, 1), "d1-e1", "3,-1", Format::Plain);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Precondition);
    EXPECT_NE(std::string(e.what()).find("a_s+b_t+s-t = 2 != 0"), std::string::npos) << e.what();
  }
}

TEST(Commands, SingularBadRootAndOspPlusCase) {
  EXPECT_EQ(code_of([] { cmd_singular(glc(2, 1), "d2-e2", "1,2,3", Format::Plain); }), ErrorCode::Usage);
  EXPECT_EQ(code_of([] { cmd_singular(glc(2, 1), "d1-d2", "1,2,3", Format::Plain); }), ErrorCode::Usage);
  EXPECT_EQ(code_of([] { cmd_singular(glc(2, 1), "d1+e1", "1,2,3", Format::Plain); }), ErrorCode::Precondition);
  const AlgebraChoice osp = make_algebra("osp", "even", 3, 1);
  try {
    cmd_singular(osp, "d1+e1", "b1+4,b1,b2,b3", Format::Plain);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Precondition);
    EXPECT_NE(std::string(e.what()).find("open problem"), std::string::npos);
  }
}

TEST(Commands, SingularJsonRoundTrip) {
  const AlgebraChoice alg = glc(2, 2);
  const OutputDocument doc = cmd_singular(alg, "d2-e2", "2,0,3,-2", Format::Json);
  const nlohmann::json parsed = parse_document(doc.text());
  EXPECT_EQ(parsed, doc.payload);
  EXPECT_EQ(parsed["instance"]["algebra"], "gl(2|2)");
  EXPECT_EQ(parsed["instance"]["lambda"], nlohmann::json({"2", "0", "3", "-2"}));
  const Weight lam = testing_support::display_weight({2, 0}, {3, -2});
  const auto S = singular_vector_formula(alg.algebra(), lam, delta_eps_root(2, 2, 2, 2));
  EXPECT_EQ(element_from_json(alg.algebra(), parsed["result"]["terms"]), S.expansion);
}

TEST(Commands, SymbolicJsonRoundTrip) {
  const AlgebraChoice alg = glc(2, 1);
  const OutputDocument doc = cmd_singular(alg, "d2-e1", "a2,a1,-a2-1", Format::Json);
  const nlohmann::json parsed = parse_document(doc.text());
  const auto lam = parse_lambda(alg.algebra(), "a2,a1,-a2-1");
  const auto S = singular_vector_formula(alg.algebra(), lam, delta_eps_root(2, 1, 2, 1));
  EXPECT_EQ(poly_element_from_json(alg.algebra(), parsed["result"]["terms"]), S.expansion);
  EXPECT_EQ(parsed["result"]["symbols"], nlohmann::json({"a1", "a2", "b1"}));
}

TEST(Commands, DocumentParserRejectsOtherSchemas) {
  EXPECT_EQ(code_of([] { parse_document("{\"schema_version\": 99}"); }), ErrorCode::Usage);
  EXPECT_EQ(code_of([] { parse_document("not json"); }), ErrorCode::Usage);
}

TEST(Commands, ShapovalovSpecializesToFormula) {
  const AlgebraChoice alg = glc(2, 2);
  const OutputDocument doc = cmd_shapovalov(alg, "d2-e2", Format::Json);
  const auto theta = poly_element_from_json(alg.algebra(), doc.payload["result"]["terms"]);
  const Weight lam = testing_support::display_weight({2, 0}, {3, -2});
  EXPECT_EQ(specialize(theta, lam), singular_vector_formula(alg.algebra(), lam, delta_eps_root(2, 2, 2, 2)).expansion);
  const OutputDocument plain = cmd_shapovalov(alg, "d2-e2", Format::Plain);
  EXPECT_NE(plain.rendered.find("(E(2,2) - E(1,1) - 1)"), std::string::npos) << plain.rendered;
}

TEST(Commands, VerifyReportsDimensionAndMatch) {
  const OutputDocument doc = cmd_verify(glc(2, 2), "d2-e2", "2,0,3,-2", false, Format::Plain);
  EXPECT_NE(doc.rendered.find("dim=1, match=1\n"), std::string::npos) << doc.rendered;
  EXPECT_NE(doc.rendered.find("time: "), std::string::npos);
  EXPECT_EQ(doc.exit_code, 0);
  const OutputDocument generic = cmd_verify(glc(2, 2), "d2-e2", "2,0,3,-1", false, Format::Plain);
  EXPECT_NE(generic.rendered.find("dim=0\n"), std::string::npos) << generic.rendered;
  EXPECT_EQ(generic.exit_code, 0);
}

TEST(Commands, VerifyKacVerdicts) {
  const OutputDocument descends = cmd_verify(glc(2, 2), "d2-e2", "2,0,3,-2", true, Format::Json);
  const auto& kac = descends.payload["result"]["verdicts"]["kac"];
  EXPECT_EQ(kac["descends"], true);
  EXPECT_EQ(kac["reduction_scalar"], "-10");
  EXPECT_EQ(kac["quotient_dim"], 1);
  const OutputDocument vanishing = cmd_verify(glc(2, 1), "d2-e1", "1,1,-2", true, Format::Plain);
  EXPECT_NE(vanishing.rendered.find("kac: maps to zero"), std::string::npos) << vanishing.rendered;
}

TEST(Commands, VerifyOsp62Vector) {
  const OutputDocument doc = cmd_verify(make_algebra("osp", "even", 3, 1), "d1+e1", "4,0,0,0", false, Format::Json);
  EXPECT_EQ(doc.payload["result"]["nullspace_dim"], 1);
  EXPECT_FALSE(doc.payload["result"]["match_scalar"].is_null());
}

TEST(Commands, KacCheckPreconditions) {
  const OutputDocument ok = cmd_kac_check(glc(2, 2), "d2-e2", "2,0,3,-2", Format::Plain);
  EXPECT_NE(ok.rendered.find("quotient dim=1 (unique)"), std::string::npos) << ok.rendered;
  EXPECT_EQ(code_of([] { cmd_kac_check(glc(2, 1), "d2-e1", "1,1,-2", Format::Plain); }), ErrorCode::Precondition);
  EXPECT_EQ(code_of([] { cmd_kac_check(glc(2, 2), "d2-e2", "0,2,3,-2", Format::Plain); }), ErrorCode::Precondition);
  EXPECT_EQ(code_of([] { cmd_kac_check(make_algebra("osp", "even", 1, 1), "d1-e1", "0,0", Format::Plain); }),
            ErrorCode::Usage);
}

TEST(Sweep, EmptySweepIsUsageError) {
  SweepOptions opts;
  opts.max_m = 0;
  opts.max_n = 0;
  EXPECT_EQ(code_of([&] { cmd_sweep(opts, Format::Json); }), ErrorCode::Usage);
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  SweepOptions opts;
  opts.max_m = 2;
  opts.max_n = 2;
  opts.samples = 3;
  opts.seed = 7;
  opts.threads = 1;
  const std::string one = cmd_sweep(opts, Format::Json).text();
  opts.threads = 4;
  const std::string four = cmd_sweep(opts, Format::Json).text();
  EXPECT_EQ(one, four);
  opts.seed = 8;
  EXPECT_NE(cmd_sweep(opts, Format::Json).text(), one);
}

TEST(Sweep, SmallGlSweepPasses) {
  SweepOptions opts;
  opts.max_m = 2;
  opts.max_n = 2;
  opts.samples = 2;
  const OutputDocument doc = cmd_sweep(opts, Format::Json);
  EXPECT_EQ(doc.exit_code, 0);
  EXPECT_EQ(doc.payload["summary"]["failed"], 0);
  // atypical: 2 samples per root; generic: 2 per rank
  EXPECT_EQ(doc.payload["summary"]["total"], 2 * (1 + 2 + 2 + 4) + 2 * 4);
}

TEST(Sweep, AtypicalSamplesAreIntegralAndAtypical) {
  SweepOptions opts;
  opts.max_m = 3;
  opts.max_n = 2;
  opts.samples = 2;
  for (const SweepInstance& r : run_sweep(opts)) {
    const SuperAlgebra& g = gl(r.ranks[0], r.ranks[1]);
    const RootVector beta = parse_root(r.beta, g.n_delta(), g.n_eps());
    EXPECT_EQ(g.is_atypical(r.lambda, beta), r.atypical);
    if (r.atypical)
      for (const Rat& x : r.lambda.coords()) EXPECT_TRUE(x.is_integer());
  }
}
