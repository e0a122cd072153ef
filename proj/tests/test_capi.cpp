#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "oddsing/oddsing.h"

namespace {

struct Algebra {
  oddsing_algebra* h = nullptr;
  ~Algebra() { oddsing_algebra_destroy(h); }
};

struct Doc {
  oddsing_doc* h = nullptr;
  ~Doc() { oddsing_doc_destroy(h); }
  std::string text() const { return oddsing_doc_text(h); }
};

}  // namespace

TEST(CApi, VersionAndNames) {
  EXPECT_STREQ(oddsing_version(), "0.1.0");
  Algebra gl;
  ASSERT_EQ(oddsing_gl_create(2, 1, &gl.h), ODDSING_OK);
  EXPECT_STREQ(oddsing_algebra_name(gl.h), "gl(2|1)");
  EXPECT_EQ(oddsing_algebra_dimension(gl.h), 9);
  Algebra osp;
  ASSERT_EQ(oddsing_osp_create(ODDSING_EVEN, 2, 1, &osp.h), ODDSING_OK);
  EXPECT_STREQ(oddsing_algebra_name(osp.h), "osp(4|2)");
}

TEST(CApi, SingularPlainOutput) {
  Algebra gl;
  ASSERT_EQ(oddsing_gl_create(1, 1, &gl.h), ODDSING_OK);
  Doc doc;
  ASSERT_EQ(oddsing_singular(gl.h, "d1-e1", "3,-3", ODDSING_PLAIN, &doc.h), ODDSING_OK);
  EXPECT_EQ(doc.text(), "E(1,1bar) v+\n");
  EXPECT_STREQ(oddsing_last_error(), "");
}

TEST(CApi, StatusCodes) {
  Algebra gl;
  ASSERT_EQ(oddsing_gl_create(1, 1, &gl.h), ODDSING_OK);
  Doc doc;
  EXPECT_EQ(oddsing_singular(gl.h, "d1-e1", "3,-1", ODDSING_PLAIN, &doc.h), ODDSING_PRECONDITION);
  EXPECT_EQ(doc.h, nullptr);
  EXPECT_NE(std::strstr(oddsing_last_error(), "a_s+b_t+s-t = 2 != 0"), nullptr) << oddsing_last_error();
  EXPECT_EQ(oddsing_singular(gl.h, "d1-e1", "3", ODDSING_PLAIN, &doc.h), ODDSING_USAGE);
  EXPECT_EQ(oddsing_singular(gl.h, nullptr, "3,-3", ODDSING_PLAIN, &doc.h), ODDSING_USAGE);
  EXPECT_EQ(oddsing_singular(nullptr, "d1-e1", "3,-3", ODDSING_PLAIN, &doc.h), ODDSING_USAGE);
  EXPECT_EQ(oddsing_singular(gl.h, "d1-e1", "3,-3", static_cast<oddsing_format>(9), &doc.h), ODDSING_USAGE);
  Algebra bad;
  EXPECT_EQ(oddsing_gl_create(0, 1, &bad.h), ODDSING_USAGE);
  EXPECT_EQ(oddsing_gl_create(1, 1, nullptr), ODDSING_USAGE);
  Doc sweep;
  EXPECT_EQ(oddsing_sweep("gl", ODDSING_EVEN, 0, 0, 5, 1, 0, ODDSING_JSON, &sweep.h), ODDSING_USAGE);
}

TEST(CApi, OspPlusCaseIsUnsupported) {
  Algebra osp;
  ASSERT_EQ(oddsing_osp_create(ODDSING_EVEN, 3, 1, &osp.h), ODDSING_OK);
  Doc doc;
  EXPECT_EQ(oddsing_singular(osp.h, "d1+e1", "b1+4,b1,b2,b3", ODDSING_PLAIN, &doc.h), ODDSING_PRECONDITION);
  EXPECT_NE(std::strstr(oddsing_last_error(), "open problem"), nullptr);
}

TEST(CApi, VerifyAndKac) {
  Algebra gl;
  ASSERT_EQ(oddsing_gl_create(2, 2, &gl.h), ODDSING_OK);
  Doc verify;
  ASSERT_EQ(oddsing_verify(gl.h, "d2-e2", "2,0,3,-2", 1, ODDSING_PLAIN, &verify.h), ODDSING_OK);
  EXPECT_NE(verify.text().find("dim=1, match=1"), std::string::npos);
  EXPECT_NE(verify.text().find("kac: descends"), std::string::npos);
  Doc kac;
  ASSERT_EQ(oddsing_kac_check(gl.h, "d2-e2", "2,0,3,-2", ODDSING_JSON, &kac.h), ODDSING_OK);
  EXPECT_NE(kac.text().find("\"descends\": true"), std::string::npos);
}

TEST(CApi, ShapovalovLatex) {
  Algebra gl;
  ASSERT_EQ(oddsing_gl_create(2, 1, &gl.h), ODDSING_OK);
  Doc doc;
  ASSERT_EQ(oddsing_shapovalov(gl.h, "d2-e1", ODDSING_LATEX, &doc.h), ODDSING_OK);
  EXPECT_EQ(doc.text(),
            "E_{1,\\overline{1}}E_{\\overline{1},\\overline{2}}+"
            "E_{1,\\overline{2}}(E_{\\overline{2},\\overline{2}}-E_{\\overline{1},\\overline{1}})\n");
}

TEST(CApi, SweepIsByteIdenticalAcrossCalls) {
  Doc a, b;
  ASSERT_EQ(oddsing_sweep("gl", ODDSING_EVEN, 2, 2, 2, 11, 1, ODDSING_JSON, &a.h), ODDSING_OK);
  ASSERT_EQ(oddsing_sweep("gl", ODDSING_EVEN, 2, 2, 2, 11, 3, ODDSING_JSON, &b.h), ODDSING_OK);
  EXPECT_EQ(a.text(), b.text());
}

TEST(CApi, LastErrorIsPerThread) {
  Algebra gl;
  ASSERT_EQ(oddsing_gl_create(1, 1, &gl.h), ODDSING_OK);
  Doc doc;
  ASSERT_EQ(oddsing_singular(gl.h, "d1-e1", "3,-1", ODDSING_PLAIN, &doc.h), ODDSING_PRECONDITION);
  std::string other;
  std::thread([&] { other = oddsing_last_error(); }).join();
  EXPECT_EQ(other, "");
  EXPECT_STRNE(oddsing_last_error(), "");
}
