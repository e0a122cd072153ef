#include "oddsing/poly.hpp"

#include <algorithm>

namespace oddsing {

CartanPoly::CartanPoly(Rat c) {
  if (!c.is_zero()) terms_.emplace(PowerProduct{}, std::move(c));
}

CartanPoly CartanPoly::symbol(int index) {
  CartanPoly p;
  p.terms_.emplace(PowerProduct{{index, 1}}, Rat(1));
  return p;
}

std::optional<Rat> CartanPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

int CartanPoly::max_symbol() const {
  int m = -1;
  for (const auto& [pp, c] : terms_)
    for (const auto& [sym, exp] : pp) m = std::max(m, sym);
  return m;
}

int CartanPoly::degree() const {
  int d = 0;
  for (const auto& [pp, c] : terms_) {
    int td = 0;
    for (const auto& [sym, exp] : pp) td += exp;
    d = std::max(d, td);
  }
  return d;
}

void CartanPoly::add_term(const PowerProduct& pp, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(pp, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CartanPoly& CartanPoly::operator+=(const CartanPoly& b) {
  for (const auto& [pp, c] : b.terms_) add_term(pp, c);
  return *this;
}

CartanPoly& CartanPoly::operator-=(const CartanPoly& b) {
  for (const auto& [pp, c] : b.terms_) add_term(pp, -c);
  return *this;
}

namespace {

PowerProduct multiply_pp(const PowerProduct& a, const PowerProduct& b) {
  PowerProduct out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

CartanPoly& CartanPoly::operator*=(const CartanPoly& b) {
  CartanPoly out;
  for (const auto& [pa, ca] : terms_)
    for (const auto& [pb, cb] : b.terms_) out.add_term(multiply_pp(pa, pb), ca * cb);
  *this = std::move(out);
  return *this;
}

CartanPoly CartanPoly::operator-() const {
  CartanPoly out;
  for (const auto& [pp, c] : terms_) out.terms_.emplace(pp, -c);
  return out;
}

Rat poly_eval(const CartanPoly& p, std::span<const Rat> coords) {
  return p.evaluate<Rat>(coords);
}

}  // namespace oddsing
