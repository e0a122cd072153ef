#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddsing/linalg.hpp"
#include "oddsing/superalgebra.hpp"
#include "oddsing/uea.hpp"
#include "oddsing/verma.hpp"

namespace oddsing {

struct KacContext;

/// Stacked action of raising generators on the μ-weight space of M(λ).
/// Columns follow `columns`; each row is one target monomial of one raising
/// generator.
struct RaisingSystem {
  Matrix matrix;
  std::vector<Monomial> columns;
  std::vector<std::pair<int, Monomial>> rows;
};

/// Action of one raising generator from the μ-weight space (spanned by
/// `columns`) into its target weight space.
struct ActionBlock {
  int generator = -1;
  std::vector<Monomial> targets;
  Matrix matrix;
};
ActionBlock raising_block(Straightener& st, const Weight& lam, const Weight& mu,
                          const std::vector<Monomial>& columns, int generator);

/// Simple raisings only, or every positive root vector when `all_positive`.
RaisingSystem raising_action_matrix(const SuperAlgebra& alg, const Weight& lam, const Weight& mu,
                                    bool all_positive = false);

/// Outcome of the Kac-module checks for one (λ, β).
struct KacVerdict {
  Rat reduction_scalar;  // from reducing modulo J_λ
  Rat product_formula;   // closed product of c-values
  bool descends = false;
  bool rank_excluded = false;  // S ∉ span of the I_λ component, by rank
  std::optional<std::size_t> quotient_dim;
};

struct SingularVectorReport {
  std::string algebra;
  Weight lambda;
  Weight mu;
  std::optional<RootVector> beta;
  std::vector<Monomial> basis;
  /// Kernel basis in reduced form (or a complement of the I_λ component in the
  /// quotient model).
  std::vector<RatVector> nullspace;
  /// The normalized generator when the space is one-dimensional.
  std::optional<RatVector> generator;
  /// r with formula = r · generator.
  std::optional<Rat> formula_match;
  bool unique = false;
  bool quotient = false;
  std::optional<KacVerdict> kac;

  std::size_t dimension() const { return nullspace.size(); }
  Element<Rat> generator_element() const;
};

/// Coordinates of an element on a monomial basis. Throws Error(Consistency)
/// when the element has a monomial outside the basis.
RatVector coordinates(const Element<Rat>& e, const std::vector<Monomial>& basis);
Element<Rat> from_coordinates(const RatVector& v, const std::vector<Monomial>& basis);

/// All weight-μ vectors of M(λ) killed by the simple raisings (modulo the
/// μ-component of I_λ when `quotient` is given). A formula vector, if
/// supplied, is compared to the generator; `leading` fixes the monomial
/// scaled to 1.
SingularVectorReport find_singular(const SuperAlgebra& alg, const Weight& lam, const Weight& mu,
                                   const KacContext* quotient = nullptr,
                                   const VermaVector<Rat>* formula = nullptr,
                                   const Monomial* leading = nullptr);

}  // namespace oddsing
