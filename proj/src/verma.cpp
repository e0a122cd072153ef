#include "oddsing/verma.hpp"

namespace oddsing {

std::vector<VermaVector<Rat>> weight_space_basis(const SuperAlgebra& alg, const Weight& lam, const Weight& mu) {
  std::vector<VermaVector<Rat>> out;
  const std::vector<Rat> coords = lam.coords();
  for (Monomial& m : weight_monomials(alg, mu - lam))
    out.push_back({&alg, coords, Element<Rat>::term(std::move(m), Rat(1))});
  return out;
}

std::optional<Rat> scalar_ratio(const Element<Rat>& a, const Element<Rat>& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [m0, c0] = *b.terms().begin();
  const Rat r = a.coefficient(m0) / c0;
  if (b.scaled(r) != a) return std::nullopt;
  return r;
}

}  // namespace oddsing
