#include "oddsing/superalgebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "oddsing/error.hpp"

namespace oddsing {

// ---------------------------------------------------------------- Weight

Weight Weight::zero(int n_delta, int n_eps) {
  return Weight(std::vector<Rat>(n_delta), std::vector<Rat>(n_eps));
}

Weight Weight::from_coords(std::span<const Rat> coords, int n_delta) {
  Weight w;
  w.delta.assign(coords.begin(), coords.begin() + n_delta);
  w.eps.assign(coords.begin() + n_delta, coords.end());
  return w;
}

Weight Weight::from_root(const RootVector& root, int n_delta) {
  std::vector<Rat> c;
  c.reserve(root.size());
  for (int v : root) c.emplace_back(v);
  return from_coords(c, n_delta);
}

std::vector<Rat> Weight::coords() const {
  std::vector<Rat> c(delta);
  c.insert(c.end(), eps.begin(), eps.end());
  return c;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.delta.size() != delta.size() || o.eps.size() != eps.size())
    fail(ErrorCode::Usage, "weight rank mismatch");
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] += o.delta[i];
  for (std::size_t i = 0; i < eps.size(); ++i) eps[i] += o.eps[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.delta.size() != delta.size() || o.eps.size() != eps.size())
    fail(ErrorCode::Usage, "weight rank mismatch");
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] -= o.delta[i];
  for (std::size_t i = 0; i < eps.size(); ++i) eps[i] -= o.eps[i];
  return *this;
}

namespace {

bool block_integral(const std::vector<Rat>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] - v[0]).is_integer()) return false;
  return true;
}

}  // namespace

bool Weight::is_integral() const { return block_integral(delta) && block_integral(eps); }

bool Weight::is_dominant() const {
  if (!is_integral()) return false;
  for (std::size_t i = 1; i < delta.size(); ++i)
    if (delta[i] < delta[i - 1]) return false;
  for (std::size_t i = 1; i < eps.size(); ++i)
    if (eps[i - 1] < eps[i]) return false;
  return true;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = delta.size(); i-- > 0;) os << delta[i] << (i ? "," : "");
  os << '|';
  for (std::size_t i = 0; i < eps.size(); ++i) os << (i ? "," : "") << eps[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- LinComb

void add_to(LinComb& acc, int index, const Rat& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(acc.begin(), acc.end(), index,
                             [](const auto& e, int k) { return e.first < k; });
  if (it != acc.end() && it->first == index) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  } else {
    acc.insert(it, {index, c});
  }
}

LinComb scaled(const LinComb& v, const Rat& c) {
  LinComb out;
  if (c.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, x * c);
  return out;
}

// ---------------------------------------------------------------- SuperAlgebra

namespace {

RootVector add_roots(const RootVector& a, const RootVector& b) {
  RootVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool is_zero_root(const RootVector& r) {
  return std::all_of(r.begin(), r.end(), [](int v) { return v == 0; });
}

// Position of coordinate k in the chain δ_p < ... < δ_1 < ε_1 < ... < ε_q.
int chain_pos(int k, int n_delta) { return k < n_delta ? n_delta - 1 - k : k; }

// Lowering vectors are ordered by the chain position of their "row" (the
// coordinate with positive coefficient), largest first, so that chain
// products E_{t,j_p}...E_{j_1,s} come out normally ordered.
std::pair<int, int> lowering_key(const RootVector& r, int n_delta) {
  int top = -1, bottom = -1;
  for (int k = 0; k < static_cast<int>(r.size()); ++k) {
    if (r[k] > 0) top = std::max(top, chain_pos(k, n_delta));
    if (r[k] < 0) bottom = std::max(bottom, chain_pos(k, n_delta));
  }
  return {-top, -bottom};
}

}  // namespace

int SuperAlgebra::height(const RootVector& root) const {
  int h = 0;
  for (int k = 0; k < static_cast<int>(root.size()); ++k) {
    int w = k < n_delta_ ? n_eps_ + 2 + k : n_eps_ - (k - n_delta_);
    h += w * root[k];
  }
  return h;
}

std::size_t SuperAlgebra::tri(int i, int j) const {
  const std::size_t n = basis_.size();
  return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
}

SuperAlgebra SuperAlgebra::create(std::string name, int n_delta, int n_eps,
                                  std::vector<Generator> raw, const BracketFn& bracket) {
  SuperAlgebra alg;
  alg.name_ = std::move(name);
  alg.n_delta_ = n_delta;
  alg.n_eps_ = n_eps;
  const int n = static_cast<int>(raw.size());
  const int rank = n_delta + n_eps;

  for (auto& g : raw) {
    if (static_cast<int>(g.root.size()) != rank)
      fail(ErrorCode::Consistency, "generator " + g.label + " has wrong root length");
    if (is_zero_root(g.root)) {
      g.kind = GenKind::Cartan;
      if (g.cartan_coord < 0)
        fail(ErrorCode::Consistency, "Cartan generator " + g.label + " lacks a coordinate");
    } else {
      g.kind = alg.height(g.root) < 0 ? GenKind::Lowering : GenKind::Raising;
    }
  }

  auto key = [&](const Generator& g) {
    switch (g.kind) {
      case GenKind::Lowering: {
        auto [a, b] = lowering_key(g.root, n_delta);
        return std::make_tuple(0, a, b, g.label);
      }
      case GenKind::Cartan:
        return std::make_tuple(1, g.cartan_coord, 0, g.label);
      case GenKind::Raising:
      default: {
        RootVector neg(g.root);
        for (int& v : neg) v = -v;
        auto [a, b] = lowering_key(neg, n_delta);
        return std::make_tuple(2, a, b, g.label);
      }
    }
  };

  std::vector<int> perm(n);  // new -> old
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return key(raw[a]) < key(raw[b]); });
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;

  alg.basis_.reserve(n);
  for (int i = 0; i < n; ++i) alg.basis_.push_back(raw[perm[i]]);

  auto remap = [&](const LinComb& v) {
    LinComb out;
    for (const auto& [k, c] : v) add_to(out, inv[k], c);
    return out;
  };

  alg.upper_.resize(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      LinComb xy = remap(bracket(perm[i], perm[j]));
      LinComb yx = remap(bracket(perm[j], perm[i]));
      const Generator& x = alg.basis_[i];
      const Generator& y = alg.basis_[j];
      Rat s(-sign_of_swap(x.parity, y.parity));
      if (scaled(xy, s) != yx)
        fail(ErrorCode::Consistency, "super-antisymmetry fails for [" + x.label + "," + y.label + "]");
      RootVector sum = add_roots(x.root, y.root);
      for (const auto& [k, c] : xy) {
        const Generator& z = alg.basis_[k];
        if (z.root != sum)
          fail(ErrorCode::Consistency, "weight additivity fails for [" + x.label + "," + y.label + "]");
        if (z.parity != (x.parity == y.parity ? Parity::Even : Parity::Odd))
          fail(ErrorCode::Consistency, "parity fails for [" + x.label + "," + y.label + "]");
      }
      alg.upper_[alg.tri(i, j)] = std::move(xy);
    }
  }

  for (int i = 0; i < n; ++i) {
    const Generator& g = alg.basis_[i];
    switch (g.kind) {
      case GenKind::Lowering: alg.lowering_.push_back(i); break;
      case GenKind::Cartan: alg.cartan_.push_back(i); break;
      case GenKind::Raising: alg.raising_.push_back(i); break;
    }
    if (g.kind != GenKind::Cartan && !alg.root_index_.emplace(g.root, i).second)
      fail(ErrorCode::Consistency, "root space of " + g.label + " is not one-dimensional");
  }

  std::set<RootVector> positive;
  for (int i : alg.raising_) positive.insert(alg.basis_[i].root);
  for (int i : alg.raising_) {
    const RootVector& r = alg.basis_[i].root;
    bool decomposable = false;
    for (const RootVector& a : positive) {
      RootVector rest(r.size());
      for (std::size_t k = 0; k < r.size(); ++k) rest[k] = r[k] - a[k];
      if (positive.count(rest)) { decomposable = true; break; }
    }
    if (!decomposable) alg.simple_.push_back(i);
  }

  alg.rho_ = Weight::zero(n_delta, n_eps);
  const Rat half(1, 2);
  for (int i : alg.raising_) {
    const Generator& g = alg.basis_[i];
    Weight w = alg.weight_of(g.root);
    for (auto& v : w.delta) v *= half;
    for (auto& v : w.eps) v *= half;
    if (g.parity == Parity::Even) alg.rho_ += w; else alg.rho_ -= w;
  }
  return alg;
}

LinComb SuperAlgebra::bracket(int i, int j) const {
  if (i <= j) return upper_[tri(i, j)];
  const Rat s(-sign_of_swap(basis_[i].parity, basis_[j].parity));
  return scaled(upper_[tri(j, i)], s);
}

std::optional<int> SuperAlgebra::root_vector(const RootVector& root) const {
  auto it = root_index_.find(root);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

int SuperAlgebra::cartan_generator(int coord) const {
  for (int i : cartan_)
    if (basis_[i].cartan_coord == coord) return i;
  fail(ErrorCode::Usage, "no Cartan generator for coordinate " + std::to_string(coord));
}

std::vector<RootVector> SuperAlgebra::positive_roots(Parity p) const {
  std::vector<RootVector> out;
  for (int i : raising_)
    if (basis_[i].parity == p) out.push_back(basis_[i].root);
  return out;
}

Rat SuperAlgebra::form(const Weight& u, const Weight& w) const {
  if (u.delta.size() != static_cast<std::size_t>(n_delta_) || w.delta.size() != u.delta.size() ||
      u.eps.size() != static_cast<std::size_t>(n_eps_) || w.eps.size() != u.eps.size())
    fail(ErrorCode::Usage, "weight rank does not match " + name_);
  Rat s;
  for (int i = 0; i < n_delta_; ++i) s += u.delta[i] * w.delta[i];
  for (int k = 0; k < n_eps_; ++k) s -= u.eps[k] * w.eps[k];
  return s;
}

Rat bilinear_form(const SuperAlgebra& alg, const Weight& u, const Weight& w) { return alg.form(u, w); }

bool SuperAlgebra::is_atypical(const Weight& lam, const RootVector& beta) const {
  auto g = root_vector(beta);
  if (!g || basis_[*g].parity != Parity::Odd || basis_[*g].kind != GenKind::Raising)
    fail(ErrorCode::Precondition, root_str(beta, n_delta_) + " is not an odd positive root of " + name_);
  return form(lam + rho_, weight_of(beta)).is_zero();
}

std::optional<std::string> SuperAlgebra::find_jacobi_violation() const {
  const int n = dimension();
  auto bracket_with = [&](int x, const LinComb& v) {
    LinComb out;
    for (const auto& [k, c] : v)
      for (const auto& [m, d] : bracket(x, k)) add_to(out, m, c * d);
    return out;
  };
  auto sgn = [&](int a, int b) { return Rat(sign_of_swap(basis_[a].parity, basis_[b].parity)); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        LinComb total;
        for (const auto& [k, c] : bracket_with(x, bracket(y, z))) add_to(total, k, c * sgn(x, z));
        for (const auto& [k, c] : bracket_with(y, bracket(z, x))) add_to(total, k, c * sgn(y, x));
        for (const auto& [k, c] : bracket_with(z, bracket(x, y))) add_to(total, k, c * sgn(z, y));
        if (!total.empty())
          return "super-Jacobi fails on (" + basis_[x].label + ", " + basis_[y].label + ", " +
                 basis_[z].label + ")";
      }
  return std::nullopt;
}

// ---------------------------------------------------------------- gl(m|n)

namespace {

struct GlIndex {
  bool barred;
  int value;
};

std::string index_plain(const GlIndex& i) {
  return std::to_string(i.value) + (i.barred ? "bar" : "");
}

std::string index_latex(const GlIndex& i) {
  return i.barred ? "\\overline{" + std::to_string(i.value) + "}" : std::to_string(i.value);
}

}  // namespace

SuperAlgebra build_gl(int m, int n) {
  if (m < 1 || n < 1) fail(ErrorCode::Usage, "gl(m|n) needs m, n >= 1");
  std::vector<GlIndex> idx;
  for (int i = m; i >= 1; --i) idx.push_back({true, i});
  for (int p = 1; p <= n; ++p) idx.push_back({false, p});
  const int size = m + n;
  auto coord = [&](int a) { return idx[a].barred ? idx[a].value - 1 : m + idx[a].value - 1; };
  auto par = [&](int a) { return idx[a].barred ? 0 : 1; };

  std::vector<Generator> basis;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      Generator g;
      g.label = "E(" + index_plain(idx[a]) + "," + index_plain(idx[b]) + ")";
      g.latex = "E_{" + index_latex(idx[a]) + "," + index_latex(idx[b]) + "}";
      g.parity = (par(a) + par(b)) % 2 ? Parity::Odd : Parity::Even;
      g.root.assign(size, 0);
      if (a == b) {
        g.cartan_coord = coord(a);
      } else {
        g.root[coord(a)] += 1;
        g.root[coord(b)] -= 1;
      }
      basis.push_back(std::move(g));
    }
  auto id = [&](int a, int b) { return a * size + b; };
  auto bracket = [&](int x, int y) {
    const int i = x / size, j = x % size, k = y / size, l = y % size;
    LinComb out;
    if (j == k) add_to(out, id(i, l), Rat(1));
    if (l == i) {
      const int s = ((par(i) + par(j)) * (par(k) + par(l))) % 2 ? -1 : 1;
      add_to(out, id(k, j), Rat(-s));
    }
    return out;
  };
  return SuperAlgebra::create("gl(" + std::to_string(m) + "|" + std::to_string(n) + ")", m, n,
                              std::move(basis), bracket);
}

// ---------------------------------------------------------------- roots as text

RootVector delta_eps_root(int n_delta, int n_eps, int s, int t, bool plus) {
  RootVector r(n_delta + n_eps, 0);
  r[s - 1] = 1;
  r[n_delta + t - 1] = plus ? 1 : -1;
  return r;
}

RootVector parse_root(std::string_view text, int n_delta, int n_eps) {
  auto bad = [&]() -> RootVector {
    fail(ErrorCode::Usage, "malformed root '" + std::string(text) +
                               "' (expected d<s>-e<t> or d<s>+e<t>)");
  };
  if (text.size() < 5 || text[0] != 'd') return bad();
  auto sign_pos = text.find_first_of("+-", 1);
  if (sign_pos == std::string_view::npos || sign_pos + 1 >= text.size() || text[sign_pos + 1] != 'e')
    return bad();
  auto to_int = [&](std::string_view s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) bad();
    return std::stoi(std::string(s));
  };
  int s = to_int(text.substr(1, sign_pos - 1));
  int t = to_int(text.substr(sign_pos + 2));
  if (s < 1 || s > n_delta || t < 1 || t > n_eps)
    fail(ErrorCode::Usage, "root '" + std::string(text) + "' out of range for the given ranks");
  return delta_eps_root(n_delta, n_eps, s, t, text[sign_pos] == '+');
}

std::string root_str(const RootVector& root, int n_delta) {
  std::string out;
  for (int k = 0; k < static_cast<int>(root.size()); ++k) {
    if (root[k] == 0) continue;
    std::string sym = k < n_delta ? "d" + std::to_string(k + 1) : "e" + std::to_string(k - n_delta + 1);
    int c = root[k];
    if (c < 0) out += "-"; else if (!out.empty()) out += "+";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += sym;
  }
  return out.empty() ? "0" : out;
}

std::string coord_name(int coord, int n_delta, bool latex) {
  const bool a = coord < n_delta;
  const int k = a ? coord + 1 : coord - n_delta + 1;
  const std::string idx = std::to_string(k);
  if (!latex) return std::string(a ? "a" : "b") + idx;
  return std::string(a ? "a" : "b") + "_" + (idx.size() == 1 ? idx : "{" + idx + "}");
}

}  // namespace oddsing
