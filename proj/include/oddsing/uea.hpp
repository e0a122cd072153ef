#pragma once

#include <compare>
#include <concepts>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "oddsing/poly.hpp"
#include "oddsing/rational.hpp"
#include "oddsing/superalgebra.hpp"

namespace oddsing {

/// PBW monomial: generator indices listed in PBW order, a power being a
/// repeated index. Odd generators never repeat.
struct Monomial {
  std::vector<int> gens;

  Monomial() = default;
  explicit Monomial(std::vector<int> g) : gens(std::move(g)) {}

  bool empty() const { return gens.empty(); }
  std::size_t degree() const { return gens.size(); }
  /// Run-length form: (generator, exponent) pairs.
  std::vector<std::pair<int, int>> factors() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

RootVector monomial_weight(const SuperAlgebra& alg, const Monomial& m);

template <class R>
concept CoefficientRing = requires(R a, const R& b, const Rat& q) {
  { a += b } -> std::same_as<R&>;
  { a * b } -> std::convertible_to<R>;
  { -b } -> std::convertible_to<R>;
  { b.is_zero() } -> std::convertible_to<bool>;
  R(q);
};

static_assert(CoefficientRing<Rat>);
static_assert(CoefficientRing<CartanPoly>);

/// Sparse linear combination of PBW monomials; never stores a zero
/// coefficient.
template <CoefficientRing R>
class Element {
 public:
  using Coefficient = R;

  Element() = default;

  static Element unit() { return term(Monomial{}, R(Rat(1))); }
  static Element generator(int g) { return term(Monomial({g}), R(Rat(1))); }
  static Element term(Monomial m, R c) {
    Element e;
    e.add(m, c);
    return e;
  }

  void add(const Monomial& m, const R& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  const std::map<Monomial, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  R coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? R(Rat(0)) : it->second;
  }

  Element& operator+=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }

  Element scaled(const R& s) const {
    Element out;
    for (const auto& [m, c] : terms_) out.add(m, c * s);
    return out;
  }

  /// Applies f to every coefficient (e.g. evaluation of CartanPoly at λ).
  template <class F>
  auto map_coefficients(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    Element<S> out;
    for (const auto& [m, c] : terms_) out.add(m, f(c));
    return out;
  }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::map<Monomial, R> terms_;
};

/// Weight of a homogeneous element; nullopt for zero or inhomogeneous input.
template <class R>
std::optional<RootVector> element_weight(const SuperAlgebra& alg, const Element<R>& e) {
  std::optional<RootVector> w;
  for (const auto& [m, c] : e.terms()) {
    RootVector mw = monomial_weight(alg, m);
    if (w && *w != mw) return std::nullopt;
    w = std::move(mw);
  }
  return w;
}

/// Rewrites products of generators into PBW normal form using
/// xy = (-1)^{|x||y|} yx + [x,y] and x^2 = [x,x]/2 for odd x. Results for
/// (monomial, generator) pairs are memoized, so an instance must not be
/// shared between threads.
class Straightener {
 public:
  explicit Straightener(const SuperAlgebra& alg);
  /// Straightening with respect to a different total order; rank[g] is the
  /// position of generator g.
  Straightener(const SuperAlgebra& alg, std::vector<int> rank);

  const SuperAlgebra& algebra() const { return *alg_; }
  const std::vector<int>& order() const { return rank_; }

  bool is_normal(const Monomial& m) const;

  /// Normal form of the product of the generators in `word`.
  Element<Rat> straighten(std::span<const int> word);
  /// Normal form of a·(product of b's generators); `a` must be normal.
  Element<Rat> times_word(const Monomial& a, std::span<const int> b);

  template <CoefficientRing R>
  Element<R> multiply(const Element<R>& x, const Element<R>& y);

 private:
  const SuperAlgebra* alg_;
  std::vector<int> rank_;
  std::map<std::pair<Monomial, int>, Element<Rat>> memo_;

  Element<Rat> times_generator(const Monomial& m, int g);
};

template <CoefficientRing R>
Element<R> Straightener::multiply(const Element<R>& x, const Element<R>& y) {
  Element<R> out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      const R c = cx * cy;
      const Element<Rat> prod = times_word(mx, my.gens);
      for (const auto& [m, k] : prod.terms()) out.add(m, c * R(k));
    }
  return out;
}

/// All PBW monomials in U(n^-) of weight `target`, listed in sorted order.
/// Returns an empty list when `target` is not a sum of negative roots.
std::vector<Monomial> weight_monomials(const SuperAlgebra& alg, const RootVector& target);

/// Rational-weight overload; non-integral targets give an empty list.
std::vector<Monomial> weight_monomials(const SuperAlgebra& alg, const Weight& target);

}  // namespace oddsing
