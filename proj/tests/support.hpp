#pragma once

#include <map>
#include <optional>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oddsing/rational.hpp"
#include "oddsing/superalgebra.hpp"

namespace testing_support {

using namespace oddsing;

inline const SuperAlgebra& gl(int m, int n) {
  static std::map<std::pair<int, int>, std::unique_ptr<SuperAlgebra>> cache;
  auto& slot = cache[{m, n}];
  if (!slot) slot = std::make_unique<SuperAlgebra>(build_gl(m, n));
  return *slot;
}

inline int gen(const SuperAlgebra& alg, const std::string& label) {
  for (int i = 0; i < alg.dimension(); ++i)
    if (alg.generator(i).label == label) return i;
  throw std::logic_error("no generator " + label);
}

/// (a_m..a_1 | b_1..b_n) in display order to a Weight.
inline Weight display_weight(std::vector<Rat> a_desc, std::vector<Rat> b) {
  std::vector<Rat> a(a_desc.rbegin(), a_desc.rend());
  return Weight(std::move(a), std::move(b));
}

inline Rat draw_int(std::mt19937_64& rng, int lo = -10, int hi = 10) {
  return Rat(lo + static_cast<long>(rng() % static_cast<unsigned>(hi - lo + 1)));
}

/// Random integral weight made (δ_s−ε_t)-atypical by solving for b_t.
inline Weight atypical_weight(const SuperAlgebra& alg, int s, int t, std::mt19937_64& rng) {
  Weight w = Weight::zero(alg.n_delta(), alg.n_eps());
  for (auto& v : w.delta) v = draw_int(rng);
  for (auto& v : w.eps) v = draw_int(rng);
  w.eps[t - 1] = -w.delta[s - 1] - Rat(s) + Rat(t);
  return w;
}

/// Random rational weight avoiding every atypicality and root coincidence:
/// integers plus distinct fractional offsets.
inline Weight generic_weight(const SuperAlgebra& alg, std::mt19937_64& rng) {
  Weight w = Weight::zero(alg.n_delta(), alg.n_eps());
  int k = 0;
  for (auto& v : w.delta) v = draw_int(rng) + Rat(1, 7 + 2 * k++);
  for (auto& v : w.eps) v = draw_int(rng) + Rat(1, 7 + 2 * k++);
  return w;
}

}  // namespace testing_support

namespace testing_support {

/// Rejection-samples an integral λ with λ and λ−β dominant and λ β-atypical.
inline std::optional<Weight> kac_instance(const SuperAlgebra& alg, int s, int t, std::mt19937_64& rng,
                                          int attempts = 20000) {
  const Weight beta = alg.weight_of(delta_eps_root(alg.n_delta(), alg.n_eps(), s, t));
  for (int i = 0; i < attempts; ++i) {
    Weight w = atypical_weight(alg, s, t, rng);
    if (w.is_dominant() && (w - beta).is_dominant()) return w;
  }
  return std::nullopt;
}

}  // namespace testing_support

namespace testing_support {

/// Random integral λ solved for (λ+ρ, β) = 0 in the last nonzero ε
/// coordinate of β.
inline Weight atypical_for(const SuperAlgebra& alg, const RootVector& beta, std::mt19937_64& rng) {
  Weight w = Weight::zero(alg.n_delta(), alg.n_eps());
  for (auto& v : w.delta) v = draw_int(rng);
  for (auto& v : w.eps) v = draw_int(rng);
  int t = -1;
  for (int k = alg.n_delta(); k < alg.rank(); ++k)
    if (beta[k] != 0) t = k - alg.n_delta();
  w.eps[t] = Rat(0);
  const Rat value = alg.form(w + alg.rho(), alg.weight_of(beta));
  w.eps[t] = value / Rat(beta[alg.n_delta() + t]);
  return w;
}

}  // namespace testing_support
