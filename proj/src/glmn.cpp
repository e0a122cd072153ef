#include "oddsing/glmn.hpp"

#include <algorithm>
#include <bit>

namespace oddsing {

int ChainSubset::cardinality() const { return std::popcount(mask); }

ChainIndex chain_index(int s, int p) {
  if (p < s - 1) return {true, s - 1 - p};
  return {false, p - (s - 1) + 1};
}

std::pair<int, int> split_delta_minus_eps(const SuperAlgebra& alg, const RootVector& beta) {
  int s = 0, t = 0;
  bool ok = static_cast<int>(beta.size()) == alg.rank();
  for (int k = 0; ok && k < alg.rank(); ++k) {
    if (beta[k] == 0) continue;
    if (k < alg.n_delta() && beta[k] == 1 && s == 0) s = k + 1;
    else if (k >= alg.n_delta() && beta[k] == -1 && t == 0) t = k - alg.n_delta() + 1;
    else ok = false;
  }
  if (!ok || s == 0 || t == 0)
    fail(ErrorCode::Precondition,
         "root " + root_str(beta, alg.n_delta()) + " is not of the form d<s>-e<t> in " + alg.name());
  return {s, t};
}

std::vector<ChainSubset> all_chain_subsets(int s, int t) {
  const int len = s + t - 2;
  std::vector<ChainSubset> out;
  for (std::uint32_t mask = 0; mask < (1u << len); ++mask) out.push_back({mask, len});
  std::stable_sort(out.begin(), out.end(), [](const ChainSubset& a, const ChainSubset& b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() > b.cardinality();
    // members compared from the top of the chain down
    for (int p = a.length - 1; p >= 0; --p)
      if (a.contains(p) != b.contains(p)) return a.contains(p);
    return false;
  });
  return out;
}

std::vector<int> chain_word(const SuperAlgebra& alg, int s, int t, const ChainSubset& J) {
  auto coord = [&](const ChainIndex& ci) { return ci.barred ? ci.value - 1 : alg.n_delta() + ci.value - 1; };
  std::vector<int> nodes{coord({true, s})};
  for (int p = 0; p < J.length; ++p)
    if (J.contains(p)) nodes.push_back(coord(chain_index(s, p)));
  nodes.push_back(coord({false, t}));
  std::vector<int> word;
  for (std::size_t i = nodes.size() - 1; i > 0; --i) {
    RootVector r(alg.rank(), 0);
    r[nodes[i]] += 1;
    r[nodes[i - 1]] -= 1;
    auto g = alg.root_vector(r);
    if (!g) fail(ErrorCode::Consistency, root_str(r, alg.n_delta()) + " has no root vector in " + alg.name());
    word.push_back(*g);
  }
  return word;
}

namespace {

std::string relation_text(int s, int t) {
  return "a" + std::to_string(s) + "+b" + std::to_string(t) + "+" + std::to_string(s) + "-" + std::to_string(t);
}

}  // namespace

template <CoefficientRing R>
void require_atypical(const SuperAlgebra& alg, const std::vector<R>& lambda, const RootVector& beta) {
  auto [s, t] = split_delta_minus_eps(alg, beta);
  const R value = shifted_pairing(alg, lambda, beta);
  if (value.is_zero()) return;
  std::string shown;
  if constexpr (std::is_same_v<R, Rat>) shown = value.str();
  else shown = "a nonzero polynomial";
  fail(ErrorCode::Precondition, "lambda is not atypical for " + root_str(beta, alg.n_delta()) +
                                    ": a_s+b_t+s-t = " + relation_text(s, t) + " = " + shown + " != 0");
}

template void require_atypical<Rat>(const SuperAlgebra&, const std::vector<Rat>&, const RootVector&);
template void require_atypical<CartanPoly>(const SuperAlgebra&, const std::vector<CartanPoly>&, const RootVector&);

VermaVector<Rat> singular_vector_formula(const SuperAlgebra& alg, const Weight& lam, const RootVector& beta) {
  const std::vector<Rat> coords = lam.coords();
  require_atypical(alg, coords, beta);
  Straightener st(alg);
  return {&alg, coords, chain_formula(alg, coords, beta).element(st)};
}

VermaVector<CartanPoly> singular_vector_formula(const SuperAlgebra& alg, const std::vector<CartanPoly>& lam,
                                                const RootVector& beta) {
  require_atypical(alg, lam, beta);
  Straightener st(alg);
  return {&alg, lam, chain_formula(alg, lam, beta).element(st)};
}

std::vector<CartanPoly> generic_weight(const SuperAlgebra& alg) {
  std::vector<CartanPoly> out;
  for (int k = 0; k < alg.rank(); ++k) out.push_back(CartanPoly::symbol(k));
  return out;
}

Element<CartanPoly> shapovalov_element(const SuperAlgebra& alg, const RootVector& beta) {
  Straightener st(alg);
  return chain_formula(alg, generic_weight(alg), beta).element(st);
}

Element<Rat> specialize(const Element<CartanPoly>& theta, const Weight& lam) {
  const std::vector<Rat> coords = lam.coords();
  return theta.map_coefficients([&](const CartanPoly& p) { return poly_eval(p, coords); });
}

}  // namespace oddsing
