#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "oddsing/poly.hpp"
#include "oddsing/superalgebra.hpp"
#include "oddsing/verma.hpp"

namespace oddsing {

/// Even family osp(2m|2n), odd family osp(2m+1|2n). Here m counts the ε's
/// and n the δ's.
enum class OspFamily { Even, Odd };

/// A matrix written as (ambient generator label, coefficient) pairs.
using LabelledMatrix = std::vector<std::pair<std::string, Rat>>;

struct OspTableEntry {
  RootVector root;
  LabelledMatrix printed;
};

/// osp as the subalgebra of gl(2n | r), r = 2m or 2m+1, preserving the form
/// that is symplectic on the barred indices (ī ↔ (i+n)‾) and symmetric on the
/// unbarred ones (k ↔ k+m, and 2m+1 ↔ itself).
struct OspRealization {
  OspFamily family = OspFamily::Even;
  int m = 0;
  int n = 0;
  SuperAlgebra ambient;
  SuperAlgebra derived;
  /// Root vectors and Cartan elements of `derived`, indexed like its basis,
  /// as combinations of ambient generators.
  std::vector<LinComb> embedding;
  /// Listed matrices that fail to preserve the form or disagree with the
  /// derived root vector.
  std::vector<std::string> table_discrepancies;

  /// Derived root vector of α in ambient coordinates.
  const LinComb& generator_table(const RootVector& alpha) const;
};

/// Cached per (family, m, n). Throws Error(Consistency) if the bracket of two
/// derived elements leaves their span.
std::shared_ptr<const OspRealization> build_osp(OspFamily family, int m, int n);

/// The explicit matrices for e_α in gl(2m|2n), entry by entry as listed.
std::vector<OspTableEntry> listed_osp_table(int m, int n);

/// Ambient element from a labelled matrix.
LinComb ambient_element(const OspRealization& real, const LabelledMatrix& entries);

/// Whether X preserves the form: B(Xu,w) + (−1)^{|X||u|} B(u,Xw) = 0.
bool preserves_form(const OspRealization& real, const LinComb& x);

/// (λ+ρ, β) = 0 for β = δ_s ± ε_t. Throws Error(Precondition) for any other β.
bool osp_atypicality(const OspRealization& real, const Weight& lam, const RootVector& beta);

/// S_{−β}v_λ⁺ for β = δ_s − ε_t. The plus case has no closed formula and
/// raises Error(Precondition).
VermaVector<Rat> osp_singular_formula(const OspRealization& real, const Weight& lam, const RootVector& beta);

/// One summand of the osp(6|2) vector for β = δ_1 + ε_1: a product of root
/// vectors (left to right) with a coefficient polynomial in b_1, b_2, b_3
/// (CartanPoly symbols 1, 2, 3).
struct Osp62Term {
  std::vector<RootVector> factors;
  CartanPoly coefficient;
};
std::vector<Osp62Term> osp62_example_terms();

/// The fifteen-term vector at λ = (a | b_1, b_2, b_3), a = b_1 + 4.
VermaVector<Rat> osp62_example_vector(const OspRealization& real, const Weight& lam);

/// Label of e_α, e.g. "e(e1-d1)" or "e_{\epsilon_1-\delta_1}".
std::string osp_root_label(const RootVector& root, int n_delta, bool latex);

}  // namespace oddsing
