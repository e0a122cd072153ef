#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddsing/error.hpp"
#include "oddsing/rational.hpp"

namespace oddsing {

/// Power product over Cartan coordinate symbols: sorted (symbol, exponent) pairs
/// with positive exponents.
using PowerProduct = std::vector<std::pair<int, int>>;

/// Polynomial with rational coefficients in the Cartan coordinate symbols
/// H_0, H_1, ... (indexed by Cartan basis order). Terms are kept sorted and
/// zero-free, so equality is structural.
class CartanPoly {
 public:
  CartanPoly() = default;
  CartanPoly(Rat c);  // NOLINT(google-explicit-constructor)
  CartanPoly(long c) : CartanPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static CartanPoly symbol(int index);

  const std::map<PowerProduct, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The value when the polynomial is constant.
  std::optional<Rat> constant_value() const;
  /// Largest symbol index that occurs, or -1.
  int max_symbol() const;
  int degree() const;

  CartanPoly& operator+=(const CartanPoly& b);
  CartanPoly& operator-=(const CartanPoly& b);
  CartanPoly& operator*=(const CartanPoly& b);
  friend CartanPoly operator+(CartanPoly a, const CartanPoly& b) { return a += b; }
  friend CartanPoly operator-(CartanPoly a, const CartanPoly& b) { return a -= b; }
  friend CartanPoly operator*(CartanPoly a, const CartanPoly& b) { return a *= b; }
  CartanPoly operator-() const;
  friend bool operator==(const CartanPoly&, const CartanPoly&) = default;

  /// Substitutes values[k] for H_k. Works for any commutative ring that a
  /// Rat converts into (Rat itself, or CartanPoly for re-parametrization).
  template <class R>
  R evaluate(std::span<const R> values) const;

  static CartanPoly one() { return CartanPoly(Rat(1)); }
  static CartanPoly zero() { return {}; }

  void add_term(const PowerProduct& pp, const Rat& c);

 private:
  std::map<PowerProduct, Rat> terms_;
};

/// Evaluates p at the given coordinates. Throws Error(Precondition) when p
/// mentions a symbol with no coordinate.
Rat poly_eval(const CartanPoly& p, std::span<const Rat> coords);

template <class R>
R CartanPoly::evaluate(std::span<const R> values) const {
  if (max_symbol() >= static_cast<int>(values.size()))
    fail(ErrorCode::Precondition,
         "no coordinate supplied for Cartan symbol H_" + std::to_string(max_symbol()));
  R total{};
  for (const auto& [pp, c] : terms_) {
    R term(c);
    for (const auto& [sym, exp] : pp)
      for (int e = 0; e < exp; ++e) term *= values[sym];
    total += term;
  }
  return total;
}

}  // namespace oddsing
