#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "oddsing/superalgebra.hpp"
#include "oddsing/uea.hpp"
#include "oddsing/verma.hpp"

namespace testing_support {

using namespace oddsing;

// Independent normal-ordering schedule: pick a random out-of-order adjacent
// pair anywhere in a word and rewrite it, recursing on the pieces. Works on
// raw words rather than through the memoized engine.
inline Element<Rat> random_schedule(const SuperAlgebra& alg, std::vector<int> word, std::mt19937_64& rng, int depth = 0) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    const int a = word[i], b = word[i + 1];
    if (a > b || (a == b && alg.generator(a).parity == Parity::Odd)) bad.push_back(i);
  }
  if (bad.empty()) return Element<Rat>::term(Monomial(word), Rat(1));
  if (depth > 200) throw std::logic_error("schedule did not terminate");
  const std::size_t i = bad[rng() % bad.size()];
  const int a = word[i], b = word[i + 1];
  Element<Rat> out;
  std::vector<int> head(word.begin(), word.begin() + i), tail(word.begin() + i + 2, word.end());
  auto with_middle = [&](std::vector<int> mid) {
    std::vector<int> w = head;
    w.insert(w.end(), mid.begin(), mid.end());
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
  };
  if (a == b) {
    for (const auto& [h, c] : alg.bracket(a, a))
      out += random_schedule(alg, with_middle({h}), rng, depth + 1).scaled(c * Rat(1, 2));
    return out;
  }
  const Rat s(sign_of_swap(alg.generator(a).parity, alg.generator(b).parity));
  out += random_schedule(alg, with_middle({b, a}), rng, depth + 1).scaled(s);
  for (const auto& [h, c] : alg.bracket(a, b)) out += random_schedule(alg, with_middle({h}), rng, depth + 1).scaled(c);
  return out;
}


/// [x, y]·v computed through the bracket, against x(yv) − (−1)^{|x||y|} y(xv).
inline bool module_action_holds(const SuperAlgebra& g, Straightener& st, int x, int y, const VermaVector<Rat>& v) {
  const Rat s(sign_of_swap(g.generator(x).parity, g.generator(y).parity));
  Element<Rat> lhs = act_generator(st, x, act_generator(st, y, v)).expansion;
  lhs -= act_generator(st, y, act_generator(st, x, v)).expansion.scaled(s);
  Element<Rat> rhs;
  for (const auto& [k, c] : g.bracket(x, y)) rhs += act_generator(st, k, v).expansion.scaled(c);
  return lhs == rhs;
}

}  // namespace testing_support
