#include "oddsing/solver.hpp"

#include "oddsing/kac.hpp"

namespace oddsing {

RatVector coordinates(const Element<Rat>& e, const std::vector<Monomial>& basis) {
  RatVector v(basis.size());
  for (const auto& [m, c] : e.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || *it != m) fail(ErrorCode::Consistency, "vector leaves its weight space");
    v[it - basis.begin()] = c;
  }
  return v;
}

Element<Rat> from_coordinates(const RatVector& v, const std::vector<Monomial>& basis) {
  Element<Rat> e;
  for (std::size_t i = 0; i < v.size(); ++i) e.add(basis[i], v[i]);
  return e;
}

Element<Rat> SingularVectorReport::generator_element() const {
  return generator ? from_coordinates(*generator, basis) : Element<Rat>();
}

ActionBlock raising_block(Straightener& st, const Weight& lam, const Weight& mu,
                          const std::vector<Monomial>& columns, int generator) {
  const SuperAlgebra& alg = st.algebra();
  ActionBlock block;
  block.generator = generator;
  block.targets = weight_monomials(alg, mu + alg.weight_of(alg.generator(generator).root) - lam);
  block.matrix = Matrix(block.targets.size(), columns.size());
  const std::vector<Rat> coords = lam.coords();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    VermaVector<Rat> v{&alg, coords, Element<Rat>::term(columns[c], Rat(1))};
    const RatVector image = coordinates(act_generator(st, generator, v).expansion, block.targets);
    for (std::size_t r = 0; r < image.size(); ++r) block.matrix(r, c) = image[r];
  }
  return block;
}

RaisingSystem raising_action_matrix(const SuperAlgebra& alg, const Weight& lam, const Weight& mu, bool all_positive) {
  RaisingSystem sys;
  sys.columns = weight_monomials(alg, mu - lam);
  sys.matrix = Matrix(0, sys.columns.size());
  Straightener st(alg);
  for (int e : all_positive ? alg.raising() : alg.simple_raisings()) {
    ActionBlock block = raising_block(st, lam, mu, sys.columns, e);
    for (std::size_t r = 0; r < block.targets.size(); ++r) {
      sys.matrix.append_row(block.matrix.row(r));
      sys.rows.emplace_back(e, block.targets[r]);
    }
  }
  return sys;
}

namespace {

void normalize(RatVector& v, const std::vector<Monomial>& basis, const Monomial* leading) {
  std::size_t pos = v.size();
  if (leading) {
    auto it = std::lower_bound(basis.begin(), basis.end(), *leading);
    if (it != basis.end() && *it == *leading && !v[it - basis.begin()].is_zero()) pos = it - basis.begin();
  }
  if (pos == v.size())
    for (pos = 0; pos < v.size() && v[pos].is_zero(); ++pos) {}
  if (pos == v.size()) return;
  const Rat s = Rat(1) / v[pos];
  for (Rat& x : v) x *= s;
}

}  // namespace

SingularVectorReport find_singular(const SuperAlgebra& alg, const Weight& lam, const Weight& mu,
                                   const KacContext* quotient, const VermaVector<Rat>* formula,
                                   const Monomial* leading) {
  SingularVectorReport rep;
  rep.algebra = alg.name();
  rep.lambda = lam;
  rep.mu = mu;
  if (quotient) {
    if (quotient->algebra != &alg || !(quotient->lam == lam))
      fail(ErrorCode::Usage, "Kac context does not match the requested algebra and weight");
    QuotientSpace q = kac_quotient_singular_space(*quotient, mu);
    rep.basis = std::move(q.basis);
    rep.nullspace = std::move(q.complement);
    rep.quotient = true;
  } else {
    RaisingSystem sys = raising_action_matrix(alg, lam, mu);
    rep.basis = std::move(sys.columns);
    rep.nullspace = nullspace(sys.matrix);
  }
  rep.unique = rep.nullspace.size() == 1;
  if (rep.unique) {
    rep.generator = rep.nullspace.front();
    normalize(*rep.generator, rep.basis, leading);
    if (formula && !rep.quotient)
      rep.formula_match = scalar_ratio(formula->expansion, rep.generator_element());
  }
  return rep;
}

}  // namespace oddsing
