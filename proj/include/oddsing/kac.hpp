#pragma once

#include <vector>

#include "oddsing/glmn.hpp"
#include "oddsing/solver.hpp"
#include "oddsing/verma.hpp"

namespace oddsing {

/// Data of K(λ) = M(λ)/I_λ for gl(m|n) and integral dominant λ.
struct KacContext {
  const SuperAlgebra* algebra = nullptr;
  Weight lam;
  std::vector<VermaVector<Rat>> generators;  // E^{k}v_λ⁺ for simple even lowering E
  std::vector<int> exponents;
  std::vector<RootVector> generator_weights;  // relative to λ
};

/// Throws Error(Precondition) unless λ is integral and dominant.
KacContext make_kac_context(const SuperAlgebra& alg, const Weight& lam);

/// Representative of v modulo J_λ = U(n⁻)n₀⁻v_λ⁺ inside U(n₁⁻)v_λ⁺.
VermaVector<Rat> reduce_mod_J(const KacContext& ctx, const VermaVector<Rat>& v);

/// (Π_{barred} c_i)(Π_{unbarred} (1 + c_j)).
Rat kac_product_formula(const AtypicalityDatum<Rat>& datum);

/// r with reduce_mod_J(S_{−β}v_λ⁺) = r·E_{t,s̄}v_λ⁺, checked against the
/// product formula. Throws Error(Consistency) if they differ.
Rat kac_reduction_scalar(const KacContext& ctx, const RootVector& beta);

/// Spanning set of the μ-weight component of I_λ.
std::vector<VermaVector<Rat>> I_lambda_weight_span(const KacContext& ctx, const Weight& mu);

/// Rank test for v ∈ I_λ (v weight-homogeneous).
bool in_I_lambda(const KacContext& ctx, const VermaVector<Rat>& v);

/// Whether S_{−β}v_λ⁺ survives in K(λ); needs only β-atypicality.
KacVerdict kac_descent(const KacContext& ctx, const RootVector& beta);

/// Full check: descent plus uniqueness of the singular vector of weight λ−β
/// in K(λ). Needs λ−β integral dominant.
SingularVectorReport singular_in_kac(const KacContext& ctx, const RootVector& beta);

/// The quotient model at weight μ: dimension of {v : e·v ∈ I_λ for all simple
/// raisings e} modulo the μ-component of I_λ, with complement vectors.
struct QuotientSpace {
  std::vector<Monomial> basis;
  std::vector<RatVector> complement;
};
QuotientSpace kac_quotient_singular_space(const KacContext& ctx, const Weight& mu);

/// Number of odd lowering generators of the given weight.
int odd_lowering_count(const SuperAlgebra& alg, const RootVector& weight);

}  // namespace oddsing
