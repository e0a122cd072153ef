#include "oddsing/kac.hpp"

#include <numeric>

namespace oddsing {

namespace {

long as_long(const Rat& r) { return r.numerator().get_si(); }

}  // namespace

KacContext make_kac_context(const SuperAlgebra& alg, const Weight& lam) {
  if (alg.name().rfind("gl(", 0) != 0) fail(ErrorCode::Usage, "Kac modules are supported for gl(m|n) only");
  if (lam.delta.size() != static_cast<std::size_t>(alg.n_delta()) ||
      lam.eps.size() != static_cast<std::size_t>(alg.n_eps()))
    fail(ErrorCode::Usage, "weight rank does not match " + alg.name());
  if (!lam.is_integral()) fail(ErrorCode::Precondition, "lambda " + lam.str() + " is not integral");
  if (!lam.is_dominant()) fail(ErrorCode::Precondition, "lambda " + lam.str() + " is not dominant");

  KacContext ctx{&alg, lam, {}, {}, {}};
  Straightener st(alg);
  auto add = [&](const RootVector& root, long k) {
    auto g = alg.root_vector(root);
    if (!g) fail(ErrorCode::Consistency, "missing even root vector " + root_str(root, alg.n_delta()));
    std::vector<int> word(k, *g);
    ctx.generators.push_back({&alg, lam.coords(), st.straighten(word)});
    ctx.exponents.push_back(static_cast<int>(k));
    RootVector w(root);
    for (int& x : w) x *= static_cast<int>(k);
    ctx.generator_weights.push_back(std::move(w));
  };
  const int m = alg.n_delta(), n = alg.n_eps();
  for (int i = 2; i <= m; ++i) {
    RootVector r(alg.rank(), 0);
    r[i - 2] = 1;
    r[i - 1] = -1;
    add(r, as_long(lam.delta[i - 1] - lam.delta[i - 2]) + 1);
  }
  for (int j = 1; j < n; ++j) {
    RootVector r(alg.rank(), 0);
    r[m + j] = 1;
    r[m + j - 1] = -1;
    add(r, as_long(lam.eps[j - 1] - lam.eps[j]) + 1);
  }
  return ctx;
}

VermaVector<Rat> reduce_mod_J(const KacContext& ctx, const VermaVector<Rat>& v) {
  const SuperAlgebra& alg = *ctx.algebra;
  std::vector<int> order(alg.dimension());
  std::vector<int> seq;
  for (int g : alg.lowering())
    if (alg.generator(g).parity == Parity::Odd) seq.push_back(g);
  for (int g : alg.lowering())
    if (alg.generator(g).parity == Parity::Even) seq.push_back(g);
  for (int g = 0; g < alg.dimension(); ++g)
    if (alg.generator(g).kind != GenKind::Lowering) seq.push_back(g);
  for (std::size_t i = 0; i < seq.size(); ++i) order[seq[i]] = static_cast<int>(i);

  Straightener odd_first(alg, order);
  Straightener st(alg);
  Element<Rat> out;
  for (const auto& [m, c] : v.expansion.terms()) {
    const Element<Rat> split = odd_first.straighten(m.gens);
    for (const auto& [m2, c2] : split.terms()) {
      const bool even_tail = std::any_of(m2.gens.begin(), m2.gens.end(),
                                         [&](int g) { return alg.generator(g).parity == Parity::Even; });
      if (even_tail) continue;
      const Element<Rat> normal = st.straighten(m2.gens);
      out += normal.scaled(c * c2);
    }
  }
  return {v.algebra, v.lambda, std::move(out)};
}

Rat kac_product_formula(const AtypicalityDatum<Rat>& datum) {
  Rat r(1);
  for (int p = 0; p < static_cast<int>(datum.c.size()); ++p)
    r *= chain_index(datum.s, p).barred ? datum.c[p] : Rat(1) + datum.c[p];
  return r;
}

namespace {

struct Reduction {
  Rat by_straightening;
  Rat by_product;
  VermaVector<Rat> formula;
};

Reduction reduce_formula(const KacContext& ctx, const RootVector& beta) {
  const SuperAlgebra& alg = *ctx.algebra;
  VermaVector<Rat> S = singular_vector_formula(alg, ctx.lam, beta);
  const VermaVector<Rat> reduced = reduce_mod_J(ctx, S);
  const auto datum = c_values(alg, ctx.lam.coords(), beta);
  const Monomial target(chain_word(alg, datum.s, datum.t, ChainSubset{0, datum.s + datum.t - 2}));
  const Rat r = reduced.expansion.coefficient(target);
  if (reduced.expansion != Element<Rat>::term(target, r))
    fail(ErrorCode::Consistency, "reduction modulo J left terms other than the single odd generator");
  return {r, kac_product_formula(datum), std::move(S)};
}

}  // namespace

Rat kac_reduction_scalar(const KacContext& ctx, const RootVector& beta) {
  const Reduction red = reduce_formula(ctx, beta);
  if (red.by_straightening != red.by_product)
    fail(ErrorCode::Consistency, "reduction scalar " + red.by_straightening.str() +
                                     " differs from the product formula " + red.by_product.str());
  return red.by_straightening;
}

std::vector<VermaVector<Rat>> I_lambda_weight_span(const KacContext& ctx, const Weight& mu) {
  const SuperAlgebra& alg = *ctx.algebra;
  if (!ctx.lam.is_integral()) fail(ErrorCode::Precondition, "lambda is not integral");
  Straightener st(alg);
  std::vector<VermaVector<Rat>> out;
  for (std::size_t k = 0; k < ctx.generators.size(); ++k) {
    const Weight tail = mu - ctx.lam - alg.weight_of(ctx.generator_weights[k]);
    for (const Monomial& u : weight_monomials(alg, tail)) {
      auto v = act(st, Element<Rat>::term(u, Rat(1)), ctx.generators[k]);
      if (!v.is_zero()) out.push_back(std::move(v));
    }
  }
  return out;
}

namespace {

std::vector<RatVector> span_coordinates(const std::vector<VermaVector<Rat>>& span, const std::vector<Monomial>& basis) {
  std::vector<RatVector> rows;
  for (const auto& v : span) rows.push_back(coordinates(v.expansion, basis));
  return rows;
}

}  // namespace

bool in_I_lambda(const KacContext& ctx, const VermaVector<Rat>& v) {
  if (v.is_zero()) return true;
  const SuperAlgebra& alg = *ctx.algebra;
  auto w = relative_weight(v);
  if (!w) fail(ErrorCode::Usage, "membership test needs a weight vector");
  const Weight mu = ctx.lam + alg.weight_of(*w);
  const std::vector<Monomial> basis = weight_monomials(alg, *w);
  std::vector<RatVector> rows = span_coordinates(I_lambda_weight_span(ctx, mu), basis);
  const std::size_t r0 = span_rank(rows, basis.size());
  rows.push_back(coordinates(v.expansion, basis));
  return span_rank(rows, basis.size()) == r0;
}

KacVerdict kac_descent(const KacContext& ctx, const RootVector& beta) {
  Reduction red = reduce_formula(ctx, beta);
  if (red.by_straightening != red.by_product)
    fail(ErrorCode::Consistency, "reduction scalar " + red.by_straightening.str() +
                                     " differs from the product formula " + red.by_product.str());
  KacVerdict verdict;
  verdict.reduction_scalar = red.by_straightening;
  verdict.product_formula = red.by_product;
  verdict.descends = !red.by_straightening.is_zero();
  verdict.rank_excluded = !in_I_lambda(ctx, red.formula);
  if (verdict.descends && !verdict.rank_excluded)
    fail(ErrorCode::Consistency, "vector outside J_lambda was found inside I_lambda");
  return verdict;
}

QuotientSpace kac_quotient_singular_space(const KacContext& ctx, const Weight& mu) {
  const SuperAlgebra& alg = *ctx.algebra;
  Straightener st(alg);
  QuotientSpace q;
  q.basis = weight_monomials(alg, mu - ctx.lam);
  const std::size_t n = q.basis.size();
  if (n == 0) return q;

  struct Block {
    ActionBlock action;
    std::vector<RatVector> span;
  };
  std::vector<Block> blocks;
  std::size_t unknowns = n;
  for (int e : alg.simple_raisings()) {
    Block b{raising_block(st, ctx.lam, mu, q.basis, e), {}};
    const Weight target = mu + alg.weight_of(alg.generator(e).root);
    b.span = span_coordinates(I_lambda_weight_span(ctx, target), b.action.targets);
    unknowns += b.span.size();
    blocks.push_back(std::move(b));
  }

  // Unknowns (v, y_e): A_e v − Σ y_e,l s_e,l = 0 for every e.
  Matrix system(0, unknowns);
  std::size_t offset = n;
  for (const Block& b : blocks) {
    for (std::size_t r = 0; r < b.action.targets.size(); ++r) {
      RatVector row(unknowns);
      for (std::size_t c = 0; c < n; ++c) row[c] = b.action.matrix(r, c);
      for (std::size_t l = 0; l < b.span.size(); ++l) row[offset + l] = -b.span[l][r];
      system.append_row(std::move(row));
    }
    offset += b.span.size();
  }

  std::vector<RatVector> kept = span_coordinates(I_lambda_weight_span(ctx, mu), q.basis);
  std::size_t current = span_rank(kept, n);
  for (const RatVector& k : nullspace(system)) {
    RatVector v(k.begin(), k.begin() + n);
    kept.push_back(v);
    const std::size_t r = span_rank(kept, n);
    if (r > current) {
      current = r;
      q.complement.push_back(std::move(v));
    } else {
      kept.pop_back();
    }
  }
  return q;
}

SingularVectorReport singular_in_kac(const KacContext& ctx, const RootVector& beta) {
  const SuperAlgebra& alg = *ctx.algebra;
  require_atypical(alg, ctx.lam.coords(), beta);
  const Weight mu = ctx.lam - alg.weight_of(beta);
  if (!mu.is_dominant())
    fail(ErrorCode::Precondition, "lambda - beta = " + mu.str() + " is not dominant");
  KacVerdict verdict = kac_descent(ctx, beta);
  SingularVectorReport rep = find_singular(alg, ctx.lam, mu, &ctx);
  rep.beta = beta;
  verdict.quotient_dim = rep.dimension();
  rep.kac = verdict;
  return rep;
}

int odd_lowering_count(const SuperAlgebra& alg, const RootVector& weight) {
  return static_cast<int>(std::count_if(alg.lowering().begin(), alg.lowering().end(), [&](int g) {
    return alg.generator(g).parity == Parity::Odd && alg.generator(g).root == weight;
  }));
}

}  // namespace oddsing
