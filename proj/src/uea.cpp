#include "oddsing/uea.hpp"

#include <algorithm>
#include <numeric>

namespace oddsing {

std::vector<std::pair<int, int>> Monomial::factors() const {
  std::vector<std::pair<int, int>> out;
  for (int g : gens) {
    if (!out.empty() && out.back().first == g) ++out.back().second;
    else out.emplace_back(g, 1);
  }
  return out;
}

RootVector monomial_weight(const SuperAlgebra& alg, const Monomial& m) {
  RootVector w(alg.rank(), 0);
  for (int g : m.gens) {
    const RootVector& r = alg.generator(g).root;
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += r[k];
  }
  return w;
}

Straightener::Straightener(const SuperAlgebra& alg) : alg_(&alg), rank_(alg.dimension()) {
  std::iota(rank_.begin(), rank_.end(), 0);
}

Straightener::Straightener(const SuperAlgebra& alg, std::vector<int> rank)
    : alg_(&alg), rank_(std::move(rank)) {}

bool Straightener::is_normal(const Monomial& m) const {
  for (std::size_t i = 1; i < m.gens.size(); ++i) {
    const int a = m.gens[i - 1], b = m.gens[i];
    if (rank_[a] > rank_[b]) return false;
    if (a == b && alg_->generator(a).parity == Parity::Odd) return false;
  }
  return true;
}

Element<Rat> Straightener::times_generator(const Monomial& m, int g) {
  if (m.empty()) return Element<Rat>::generator(g);
  const int x = m.gens.back();
  const Parity px = alg_->generator(x).parity;
  if (rank_[x] < rank_[g] || (x == g && px == Parity::Even)) {
    Monomial out = m;
    out.gens.push_back(g);
    return Element<Rat>::term(std::move(out), Rat(1));
  }

  auto key = std::make_pair(m, g);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Monomial head(std::vector<int>(m.gens.begin(), m.gens.end() - 1));
  Element<Rat> result;
  if (x == g) {
    // odd x: x*x = [x,x]/2
    const Rat half(1, 2);
    for (const auto& [h, c] : alg_->bracket(x, x))
      result += times_generator(head, h).scaled(c * half);
  } else {
    const Rat s(sign_of_swap(px, alg_->generator(g).parity));
    const Element<Rat> swapped = times_generator(head, g);
    for (const auto& [mm, c] : swapped.terms())
      result += times_generator(mm, x).scaled(c * s);
    for (const auto& [h, c] : alg_->bracket(x, g))
      result += times_generator(head, h).scaled(c);
  }
  memo_.emplace(std::move(key), result);
  return result;
}

Element<Rat> Straightener::times_word(const Monomial& a, std::span<const int> b) {
  Element<Rat> cur = Element<Rat>::term(a, Rat(1));
  for (int g : b) {
    Element<Rat> next;
    for (const auto& [m, c] : cur.terms()) next += times_generator(m, g).scaled(c);
    cur = std::move(next);
  }
  return cur;
}

Element<Rat> Straightener::straighten(std::span<const int> word) { return times_word(Monomial{}, word); }

namespace {

void enumerate(const SuperAlgebra& alg, std::size_t start, RootVector& remaining,
               std::vector<int>& current, std::vector<Monomial>& out) {
  if (std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; })) {
    out.emplace_back(current);
    return;
  }
  const auto& low = alg.lowering();
  for (std::size_t i = start; i < low.size(); ++i) {
    const Generator& g = alg.generator(low[i]);
    for (std::size_t k = 0; k < remaining.size(); ++k) remaining[k] -= g.root[k];
    // every lowering root has negative height, so the rest must stay <= 0
    const int h = alg.height(remaining);
    const bool zero = std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; });
    if (h < 0 || zero) {
      current.push_back(low[i]);
      enumerate(alg, g.parity == Parity::Odd ? i + 1 : i, remaining, current, out);
      current.pop_back();
    }
    for (std::size_t k = 0; k < remaining.size(); ++k) remaining[k] += g.root[k];
  }
}

}  // namespace

std::vector<Monomial> weight_monomials(const SuperAlgebra& alg, const RootVector& target) {
  std::vector<Monomial> out;
  if (static_cast<int>(target.size()) != alg.rank()) return out;
  RootVector remaining = target;
  std::vector<int> current;
  enumerate(alg, 0, remaining, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> weight_monomials(const SuperAlgebra& alg, const Weight& target) {
  RootVector r;
  for (const Rat& c : target.coords()) {
    if (!c.is_integer()) return {};
    r.push_back(static_cast<int>(c.numerator().get_si()));
  }
  return weight_monomials(alg, r);
}

}  // namespace oddsing
