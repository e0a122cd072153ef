#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "oddsing/osp.hpp"
#include "oddsing/poly.hpp"
#include "oddsing/render.hpp"
#include "oddsing/superalgebra.hpp"

namespace oddsing {

inline constexpr int kSchemaVersion = 1;

/// gl(m|n) or osp with m ε's and n δ's, as selected by --alg/--family/--ranks.
struct AlgebraChoice {
  std::string kind;  // "gl" or "osp"
  OspFamily family = OspFamily::Even;
  int m = 0;
  int n = 0;
  std::shared_ptr<const SuperAlgebra> gl;
  std::shared_ptr<const OspRealization> osp;

  const SuperAlgebra& algebra() const { return gl ? *gl : osp->derived; }
  bool is_gl() const { return static_cast<bool>(gl); }
};

/// Throws Error(Usage) for an unknown kind or family or ranks below 1.
AlgebraChoice make_algebra(std::string_view kind, std::string_view family, int m, int n);
OspFamily parse_family(std::string_view text);

/// Comma-separated entries a_p..a_1, b_1..b_q. Each entry is an exact
/// rational or a polynomial in the symbols a<i>, b<j> (e.g. "-a2-1",
/// "2*a1+3/2", "(b1-b2)^2"). Returns coordinates in Cartan order (symbol k = coordinate k).
std::vector<CartanPoly> parse_lambda(const SuperAlgebra& alg, std::string_view text);
/// One entry of the same grammar.
CartanPoly parse_expression(const SuperAlgebra& alg, std::string_view text);
/// The weight when every entry is a number.
std::optional<Weight> numeric_weight(const SuperAlgebra& alg, const std::vector<CartanPoly>& lam);
Weight parse_numeric_lambda(const SuperAlgebra& alg, std::string_view text);

struct OutputDocument {
  Format format = Format::Plain;
  nlohmann::json payload;
  std::string rendered;  // plain or LaTeX text
  int exit_code = 0;

  /// JSON dump for Format::Json, the rendered text otherwise; newline-terminated.
  std::string text() const;
};

/// Parses a JSON document produced by text(). Throws Error(Usage) on
/// malformed input or an unknown schema version.
nlohmann::json parse_document(std::string_view text);

OutputDocument cmd_singular(const AlgebraChoice& alg, std::string_view beta, std::string_view lambda, Format format);
OutputDocument cmd_shapovalov(const AlgebraChoice& alg, std::string_view beta, Format format);
OutputDocument cmd_verify(const AlgebraChoice& alg, std::string_view beta, std::string_view lambda, bool kac,
                          Format format);
OutputDocument cmd_kac_check(const AlgebraChoice& alg, std::string_view beta, std::string_view lambda, Format format);

struct SweepOptions {
  std::string kind = "gl";
  OspFamily family = OspFamily::Even;
  int max_m = 0;
  int max_n = 0;
  int samples = 5;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// One checked instance of a sweep.
struct SweepInstance {
  std::string algebra;
  std::vector<int> ranks;
  std::string beta;
  Weight lambda;
  bool atypical = true;
  bool annihilated = false;
  std::size_t nullspace_dim = 0;
  std::optional<Rat> match_scalar;
  std::optional<bool> shapovalov;  // gl only
  std::string error;
  bool pass = false;
};

/// Instances in deterministic key order, computed concurrently. Throws
/// Error(Usage) for an empty sweep.
std::vector<SweepInstance> run_sweep(const SweepOptions& opts);
OutputDocument cmd_sweep(const SweepOptions& opts, Format format);

}  // namespace oddsing
