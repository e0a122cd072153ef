#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddsing/error.hpp"
#include "oddsing/poly.hpp"
#include "oddsing/superalgebra.hpp"
#include "oddsing/uea.hpp"
#include "oddsing/verma.hpp"

namespace oddsing {

/// Subset J of the chain s̄ < s̄-1 < ... < 1̄ < 1 < ... < t-1 < t strictly
/// between its ends. Bit p refers to chain_index(p).
struct ChainSubset {
  std::uint32_t mask = 0;
  int length = 0;  // s + t - 2

  int cardinality() const;
  bool contains(int p) const { return (mask >> p) & 1u; }
  friend bool operator==(const ChainSubset&, const ChainSubset&) = default;
};

/// Interior chain position p as (barred, value): p < s-1 gives the barred
/// index s-1-p, otherwise the unbarred index p-s+2.
struct ChainIndex {
  bool barred;
  int value;
};
ChainIndex chain_index(int s, int p);

/// c-values of one (λ, β = δ_s − ε_t) instance, indexed by chain position.
template <CoefficientRing R>
struct AtypicalityDatum {
  int s = 0;
  int t = 0;
  RootVector beta;
  std::vector<R> c;
};

/// Splits β = δ_s − ε_t. Throws Error(Precondition) for any other shape.
std::pair<int, int> split_delta_minus_eps(const SuperAlgebra& alg, const RootVector& beta);

/// c_{s̄-k} = a_s − a_{s-k} + k − 1 and c_{t-k} = b_t − b_{t-k} − k.
template <CoefficientRing R>
AtypicalityDatum<R> c_values(const SuperAlgebra& alg, const std::vector<R>& lambda, const RootVector& beta) {
  auto [s, t] = split_delta_minus_eps(alg, beta);
  if (static_cast<int>(lambda.size()) != alg.rank())
    fail(ErrorCode::Usage, "weight rank does not match " + alg.name());
  AtypicalityDatum<R> d{s, t, beta, {}};
  const auto a = [&](int i) -> const R& { return lambda[i - 1]; };
  const auto b = [&](int j) -> const R& { return lambda[alg.n_delta() + j - 1]; };
  for (int p = 0; p < s + t - 2; ++p) {
    ChainIndex ci = chain_index(s, p);
    if (ci.barred) {
      const int k = s - ci.value;
      d.c.push_back(a(s) - a(ci.value) + R(Rat(k - 1)));
    } else {
      const int k = t - ci.value;
      d.c.push_back(b(t) - b(ci.value) - R(Rat(k)));
    }
  }
  return d;
}

/// d_J = product of c_k over chain positions k not in J.
template <CoefficientRing R>
R d_coefficient(const AtypicalityDatum<R>& datum, const ChainSubset& J) {
  R d(Rat(1));
  for (int p = 0; p < static_cast<int>(datum.c.size()); ++p)
    if (!J.contains(p)) d = d * datum.c[p];
  return d;
}

/// Generators of E_J = E_{t,j_p} E_{j_p,j_{p-1}} ... E_{j_1,s̄}, left to right.
/// Uses the root vectors of e_a − e_b with e_ī = δ_i, e_p = ε_p, so the same
/// chain serves gl and osp.
std::vector<int> chain_word(const SuperAlgebra& alg, int s, int t, const ChainSubset& J);

template <CoefficientRing R>
struct ChainTerm {
  ChainSubset subset;
  std::vector<int> word;
  std::vector<int> omitted;  // chain positions contributing a c-value factor
  R coefficient;
};

/// S_{−β} = Σ_J d_J E_J, terms ordered by |J| descending (leading term first).
template <CoefficientRing R>
struct ChainFormula {
  AtypicalityDatum<R> datum;
  std::vector<ChainTerm<R>> terms;

  Element<R> element(Straightener& st) const {
    Element<R> out;
    for (const auto& term : terms) {
      const Element<Rat> normal = st.straighten(term.word);
      for (const auto& [m, k] : normal.terms()) out.add(m, term.coefficient * R(k));
    }
    return out;
  }
};

std::vector<ChainSubset> all_chain_subsets(int s, int t);

template <CoefficientRing R>
ChainFormula<R> chain_formula(const SuperAlgebra& alg, const std::vector<R>& lambda, const RootVector& beta) {
  ChainFormula<R> f{c_values(alg, lambda, beta), {}};
  for (const ChainSubset& J : all_chain_subsets(f.datum.s, f.datum.t)) {
    ChainTerm<R> term{J, chain_word(alg, f.datum.s, f.datum.t, J), {}, d_coefficient(f.datum, J)};
    for (int p = 0; p < J.length; ++p)
      if (!J.contains(p)) term.omitted.push_back(p);
    f.terms.push_back(std::move(term));
  }
  return f;
}

/// (λ+ρ, β) for λ given by coordinates in any coefficient ring.
template <CoefficientRing R>
R shifted_pairing(const SuperAlgebra& alg, const std::vector<R>& lambda, const RootVector& beta) {
  const std::vector<Rat> rho = alg.rho().coords();
  R total(Rat(0));
  for (int k = 0; k < alg.rank(); ++k) {
    if (beta[k] == 0) continue;
    const int sign = k < alg.n_delta() ? 1 : -1;
    total += (lambda[k] + R(rho[k])) * R(Rat(sign * beta[k]));
  }
  return total;
}

/// Throws Error(Precondition) naming the violated relation a_s+b_t+s-t = 0.
template <CoefficientRing R>
void require_atypical(const SuperAlgebra& alg, const std::vector<R>& lambda, const RootVector& beta);

/// The closed-formula singular vector S_{−β}v_λ⁺ for β = δ_s − ε_t.
VermaVector<Rat> singular_vector_formula(const SuperAlgebra& alg, const Weight& lam, const RootVector& beta);
/// Same for symbolic λ (coordinates as CartanPoly in the symbols H_k = λ_k).
VermaVector<CartanPoly> singular_vector_formula(const SuperAlgebra& alg, const std::vector<CartanPoly>& lam,
                                                const RootVector& beta);

/// θ_β = Σ_J E_J Π_{k∉J} C_k with C_k ∈ ℂ + h written as CartanPoly in H_k.
/// The Cartan factor stands to the right of E_J.
Element<CartanPoly> shapovalov_element(const SuperAlgebra& alg, const RootVector& beta);

/// λ_k = H_k for all k: the generic weight.
std::vector<CartanPoly> generic_weight(const SuperAlgebra& alg);

/// Specializes a U(b⁻) element with Cartan coefficients on the right at λ.
Element<Rat> specialize(const Element<CartanPoly>& theta, const Weight& lam);

}  // namespace oddsing
