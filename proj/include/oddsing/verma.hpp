#pragma once

#include <optional>
#include <vector>

#include "oddsing/superalgebra.hpp"
#include "oddsing/uea.hpp"

namespace oddsing {

/// Vector u·v_λ⁺ of the Verma module M(λ), with u expanded in the PBW basis
/// of U(n⁻). `lambda` holds the highest weight's coordinates in the
/// coefficient ring (numbers, or symbols for generic λ).
template <CoefficientRing R>
struct VermaVector {
  const SuperAlgebra* algebra = nullptr;
  std::vector<R> lambda;
  Element<R> expansion;

  bool is_zero() const { return expansion.is_zero(); }
  friend bool operator==(const VermaVector& a, const VermaVector& b) {
    return a.algebra == b.algebra && a.lambda == b.lambda && a.expansion == b.expansion;
  }
};

template <CoefficientRing R>
VermaVector<R> highest_weight_vector(const SuperAlgebra& alg, std::vector<R> lambda) {
  return {&alg, std::move(lambda), Element<R>::unit()};
}

inline VermaVector<Rat> highest_weight_vector(const SuperAlgebra& alg, const Weight& lam) {
  return highest_weight_vector<Rat>(alg, lam.coords());
}

/// Drops monomials ending in a raising generator and evaluates the Cartan
/// factors on v_λ⁺. Input monomials must be normal in the default order.
template <CoefficientRing R>
Element<R> project_to_verma(const SuperAlgebra& alg, const Element<R>& u, const std::vector<R>& lambda) {
  Element<R> out;
  for (const auto& [m, c] : u.terms()) {
    std::size_t cut = 0;
    while (cut < m.gens.size() && alg.generator(m.gens[cut]).kind == GenKind::Lowering) ++cut;
    R coeff = c;
    bool killed = false;
    for (std::size_t i = cut; i < m.gens.size(); ++i) {
      const Generator& g = alg.generator(m.gens[i]);
      if (g.kind == GenKind::Raising) { killed = true; break; }
      coeff = coeff * lambda[g.cartan_coord];
    }
    if (killed) continue;
    out.add(Monomial(std::vector<int>(m.gens.begin(), m.gens.begin() + cut)), coeff);
  }
  return out;
}

/// u·v in M(λ): straightens u times the expansion of v, then projects.
template <CoefficientRing R>
VermaVector<R> act(Straightener& st, const Element<R>& u, const VermaVector<R>& v) {
  const SuperAlgebra& alg = st.algebra();
  Element<R> raw;
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mv, cv] : v.expansion.terms()) {
      const R c = cu * cv;
      const Element<Rat> prod = st.times_word(mu, mv.gens);
      for (const auto& [m, k] : prod.terms()) raw.add(m, c * R(k));
    }
  return {v.algebra, v.lambda, project_to_verma(alg, raw, v.lambda)};
}

template <CoefficientRing R>
VermaVector<R> act_generator(Straightener& st, int g, const VermaVector<R>& v) {
  return act(st, Element<R>::generator(g), v);
}

/// Weight of a homogeneous Verma vector relative to λ (i.e. the weight of its
/// U(n⁻) part).
template <CoefficientRing R>
std::optional<RootVector> relative_weight(const VermaVector<R>& v) {
  return element_weight(*v.algebra, v.expansion);
}

/// PBW basis m·v_λ⁺ of the μ-weight space of M(λ).
std::vector<VermaVector<Rat>> weight_space_basis(const SuperAlgebra& alg, const Weight& lam, const Weight& mu);

/// r with a = r·b, when b ≠ 0 and a is a multiple of b.
std::optional<Rat> scalar_ratio(const Element<Rat>& a, const Element<Rat>& b);

}  // namespace oddsing
