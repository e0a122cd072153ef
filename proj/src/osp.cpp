#include "oddsing/osp.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>

#include "oddsing/glmn.hpp"
#include "oddsing/linalg.hpp"

namespace oddsing {

namespace {

// Basis vector of the natural module: barred indices 1..2n (parity 0),
// unbarred indices 1..r (parity 1).
struct VIdx {
  bool barred;
  int value;
  friend bool operator==(const VIdx&, const VIdx&) = default;
};

struct NaturalModule {
  int m, n, r;

  std::vector<VIdx> all() const {
    std::vector<VIdx> out;
    for (int i = 1; i <= 2 * n; ++i) out.push_back({true, i});
    for (int k = 1; k <= r; ++k) out.push_back({false, k});
    return out;
  }
  RootVector weight(const VIdx& v) const {
    RootVector w(n + m, 0);
    if (v.barred) {
      if (v.value <= n) w[v.value - 1] = 1; else w[v.value - n - 1] = -1;
    } else if (v.value <= m) {
      w[n + v.value - 1] = 1;
    } else if (v.value <= 2 * m) {
      w[n + v.value - m - 1] = -1;
    }
    return w;
  }
  VIdx partner(const VIdx& v) const {
    if (v.barred) return {true, v.value <= n ? v.value + n : v.value - n};
    if (v.value > 2 * m) return v;
    return {false, v.value <= m ? v.value + m : v.value - m};
  }
  // B(v, v*)
  Rat pairing(const VIdx& v) const { return (v.barred && v.value > n) ? Rat(-1) : Rat(1); }
  int parity(const VIdx& v) const { return v.barred ? 0 : 1; }
};

std::string vlabel(const VIdx& v) { return std::to_string(v.value) + (v.barred ? "bar" : ""); }
std::string unit_label(const VIdx& a, const VIdx& b) { return "E(" + vlabel(a) + "," + vlabel(b) + ")"; }

RootVector sub(const RootVector& a, const RootVector& b) {
  RootVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_zero_root(const RootVector& r) {
  return std::all_of(r.begin(), r.end(), [](int v) { return v == 0; });
}

class Units {
 public:
  Units(const SuperAlgebra& ambient, const NaturalModule& v) : v_(v) {
    for (int i = 0; i < ambient.dimension(); ++i) index_.emplace(ambient.generator(i).label, i);
  }
  int operator()(const VIdx& a, const VIdx& b) const { return at(unit_label(a, b)); }
  int at(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) fail(ErrorCode::Consistency, "no ambient generator " + label);
    return it->second;
  }

 private:
  NaturalModule v_;
  std::map<std::string, int> index_;
};

Rat coefficient(const LinComb& x, int idx) {
  for (const auto& [k, c] : x)
    if (k == idx) return c;
  return Rat(0);
}

// Rows of the linear conditions B(Xu,w) + (−1)^{p|u|} B(u,Xw) = 0 restricted
// to the units of one weight.
Matrix form_conditions(const NaturalModule& nat, const Units& units, const std::vector<int>& cols,
                       const RootVector& alpha, int parity) {
  Matrix rows(0, cols.size());
  auto col_of = [&](int unit) {
    auto it = std::find(cols.begin(), cols.end(), unit);
    if (it == cols.end()) fail(ErrorCode::Consistency, "form condition mixes weight spaces");
    return static_cast<std::size_t>(it - cols.begin());
  };
  const auto basis = nat.all();
  for (const VIdx& u : basis)
    for (const VIdx& w : basis) {
      RootVector s(alpha.size(), 0);
      const RootVector wu = nat.weight(u), ww = nat.weight(w);
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = -wu[k] - ww[k];
      if (s != alpha) continue;
      RatVector row(cols.size());
      const VIdx ws = nat.partner(w), us = nat.partner(u);
      row[col_of(units(ws, u))] += nat.pairing(ws);
      row[col_of(units(us, w))] += Rat((parity && nat.parity(u)) ? -1 : 1) * nat.pairing(u);
      if (std::any_of(row.begin(), row.end(), [](const Rat& x) { return !x.is_zero(); }))
        rows.append_row(std::move(row));
    }
  return rows;
}

std::string symbol(int coord, int n_delta, bool latex) {
  const bool d = coord < n_delta;
  const int k = d ? coord + 1 : coord - n_delta + 1;
  if (latex) return std::string(d ? "\\delta_" : "\\epsilon_") + std::to_string(k);
  return std::string(d ? "d" : "e") + std::to_string(k);
}

}  // namespace

std::string osp_root_label(const RootVector& root, int n_delta, bool latex) {
  // positive terms first; ε before δ; larger index first
  std::vector<int> order;
  for (int k = static_cast<int>(root.size()) - 1; k >= n_delta; --k) order.push_back(k);
  for (int k = n_delta - 1; k >= 0; --k) order.push_back(k);
  std::string body;
  for (int pass = 0; pass < 2; ++pass)
    for (int k : order) {
      const int c = root[k];
      if (c == 0 || (pass == 0) != (c > 0)) continue;
      if (c < 0) body += "-"; else if (!body.empty()) body += "+";
      if (std::abs(c) != 1) body += std::to_string(std::abs(c));
      body += symbol(k, n_delta, latex);
    }
  return latex ? "e_{" + body + "}" : "e(" + body + ")";
}

std::vector<OspTableEntry> listed_osp_table(int m, int n) {
  std::vector<OspTableEntry> t;
  const int rank = n + m;
  auto root = [&](std::initializer_list<std::pair<int, int>> parts) {
    RootVector r(rank, 0);
    for (auto [k, c] : parts) r[k] += c;
    return r;
  };
  auto D = [&](int i) { return i - 1; };
  auto Ep = [&](int k) { return n + k - 1; };
  auto b = [](int i) { return std::to_string(i) + "bar"; };
  auto u = [](int k) { return std::to_string(k); };
  auto E = [](const std::string& x, const std::string& y) { return "E(" + x + "," + y + ")"; };
  const Rat one(1), minus(-1);

  for (int i = 1; i <= n; ++i) {
    t.push_back({root({{D(i), 2}}), {{E(b(i), b(i + n)), one}}});
    t.push_back({root({{D(i), -2}}), {{E(b(i + n), b(i)), one}}});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (i < j) {
        t.push_back({root({{D(i), 1}, {D(j), 1}}), {{E(b(i), b(j + n)), one}, {E(b(j), b(i + n)), one}}});
        t.push_back({root({{D(i), -1}, {D(j), -1}}), {{E(b(j + n), b(i)), one}, {E(b(i + n), b(j)), one}}});
      }
      t.push_back({root({{D(i), 1}, {D(j), -1}}), {{E(b(i), b(j)), one}, {E(b(j + n), b(i + n)), one}}});
    }
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= m; ++l) {
      if (k == l) continue;
      t.push_back({root({{Ep(k), 1}, {Ep(l), -1}}), {{E(u(k), u(l)), one}, {E(u(l + m), u(k + m)), minus}}});
      if (k < l) {
        t.push_back({root({{Ep(k), 1}, {Ep(l), 1}}), {{E(u(k), u(l + m)), one}, {E(u(l), u(k + m)), minus}}});
        t.push_back({root({{Ep(k), -1}, {Ep(l), -1}}), {{E(u(l + m), u(k)), one}, {E(u(k + m), u(l)), minus}}});
      }
    }
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= m; ++k) {
      t.push_back({root({{D(i), 1}, {Ep(k), 1}}), {{E(u(k), b(i + n)), one}, {E(b(i), u(k + m)), one}}});
      t.push_back({root({{D(i), -1}, {Ep(k), -1}}), {{E(u(k + m), b(i)), one}, {E(b(i + n), u(k)), minus}}});
      t.push_back({root({{D(i), 1}, {Ep(k), -1}}), {{E(u(k + m), b(i + n)), one}, {E(b(i), u(k)), one}}});
      t.push_back({root({{D(i), -1}, {Ep(k), 1}}), {{E(u(k), b(i)), one}, {E(b(i + n), u(k + m)), minus}}});
    }
  return t;
}

LinComb ambient_element(const OspRealization& real, const LabelledMatrix& entries) {
  NaturalModule nat{real.m, real.n, real.family == OspFamily::Even ? 2 * real.m : 2 * real.m + 1};
  Units units(real.ambient, nat);
  LinComb x;
  for (const auto& [label, c] : entries) add_to(x, units.at(label), c);
  return x;
}

bool preserves_form(const OspRealization& real, const LinComb& x) {
  if (x.empty()) return true;
  NaturalModule nat{real.m, real.n, real.family == OspFamily::Even ? 2 * real.m : 2 * real.m + 1};
  Units units(real.ambient, nat);
  const int parity = real.ambient.generator(x.front().first).parity == Parity::Odd ? 1 : 0;
  const auto basis = nat.all();
  for (const VIdx& u : basis)
    for (const VIdx& w : basis) {
      const VIdx ws = nat.partner(w), us = nat.partner(u);
      Rat v = coefficient(x, units(ws, u)) * nat.pairing(ws);
      v += Rat((parity && nat.parity(u)) ? -1 : 1) * coefficient(x, units(us, w)) * nat.pairing(u);
      if (!v.is_zero()) return false;
    }
  return true;
}

const LinComb& OspRealization::generator_table(const RootVector& alpha) const {
  auto g = derived.root_vector(alpha);
  if (!g) fail(ErrorCode::Usage, root_str(alpha, n) + " is not a root of " + derived.name());
  return embedding[*g];
}

namespace {

std::shared_ptr<OspRealization> construct(OspFamily family, int m, int n) {
  if (m < 1 || n < 1) fail(ErrorCode::Usage, "osp needs m, n >= 1");
  auto real = std::make_shared<OspRealization>();
  real->family = family;
  real->m = m;
  real->n = n;
  const int r = family == OspFamily::Even ? 2 * m : 2 * m + 1;
  real->ambient = build_gl(2 * n, r);
  const SuperAlgebra& amb = real->ambient;
  NaturalModule nat{m, n, r};
  Units units(amb, nat);
  const int rank = n + m;

  // units grouped by weight
  std::map<RootVector, std::vector<int>> by_weight;
  const auto basis = nat.all();
  for (const VIdx& a : basis)
    for (const VIdx& b : basis) {
      if (a == b) continue;
      by_weight[sub(nat.weight(a), nat.weight(b))].push_back(units(a, b));
    }

  std::map<RootVector, LabelledMatrix> listed;
  for (auto& e : listed_osp_table(m, n)) listed.emplace(e.root, std::move(e.printed));

  std::vector<Generator> gens;
  std::vector<LinComb> elems;
  for (auto& [alpha, cols] : by_weight) {
    if (is_zero_root(alpha)) fail(ErrorCode::Consistency, "off-diagonal unit of weight zero");
    std::sort(cols.begin(), cols.end());
    const int parity = amb.generator(cols.front()).parity == Parity::Odd ? 1 : 0;
    const auto ker = nullspace(form_conditions(nat, units, cols, alpha, parity));
    if (ker.empty()) continue;
    if (ker.size() > 1)
      fail(ErrorCode::Consistency, "root space " + root_str(alpha, n) + " is not one-dimensional");
    LinComb x;
    for (std::size_t i = 0; i < cols.size(); ++i) add_to(x, cols[i], ker[0][i]);

    // scale to the listed normalization, or to the first unit of the odd-family extras
    int ref = -1;
    Rat want(1);
    if (auto it = listed.find(alpha); it != listed.end()) {
      ref = units.at(it->second.front().first);
      want = it->second.front().second;
    } else {
      const VIdx zero{false, 2 * m + 1};
      for (int k = 0; k < rank && ref < 0; ++k) {
        if (alpha[k] == 0) continue;
        const VIdx v = k < n ? VIdx{true, k + 1} : VIdx{false, k - n + 1};
        ref = alpha[k] > 0 ? units(v, zero) : units(zero, v);
      }
    }
    const Rat have = coefficient(x, ref);
    if (have.is_zero()) fail(ErrorCode::Consistency, "normalizing unit missing for " + root_str(alpha, n));
    x = scaled(x, want / have);

    Generator g;
    g.label = osp_root_label(alpha, n, false);
    g.latex = osp_root_label(alpha, n, true);
    g.parity = parity ? Parity::Odd : Parity::Even;
    g.root = alpha;
    gens.push_back(std::move(g));
    elems.push_back(std::move(x));
  }
  for (int k = 0; k < rank; ++k) {
    const bool d = k < n;
    const int i = d ? k + 1 : k - n + 1;
    const VIdx a = d ? VIdx{true, i} : VIdx{false, i};
    const VIdx b = d ? VIdx{true, i + n} : VIdx{false, i + m};
    LinComb h;
    add_to(h, units(a, a), Rat(1));
    add_to(h, units(b, b), Rat(-1));
    Generator g;
    g.label = "h(" + symbol(k, n, false) + ")";
    g.latex = "h_{" + symbol(k, n, true) + "}";
    g.root.assign(rank, 0);
    g.cartan_coord = k;
    gens.push_back(std::move(g));
    elems.push_back(std::move(h));
  }
  for (const LinComb& x : elems)
    if (!preserves_form(*real, x)) fail(ErrorCode::Consistency, "derived element does not preserve the form");

  for (const auto& [alpha, printed] : listed) {
    const std::string name = osp_root_label(alpha, n, false);
    const LinComb x = ambient_element(*real, printed);
    auto pos = std::find_if(gens.begin(), gens.end(), [&](const Generator& g) { return g.root == alpha; });
    if (!preserves_form(*real, x))
      real->table_discrepancies.push_back(name + " as listed does not preserve the form");
    else if (pos == gens.end() || elems[pos - gens.begin()] != x)
      real->table_discrepancies.push_back(name + " as listed differs from the derived root vector");
  }

  // pivot unit of each derived element, used to read off coordinates
  std::vector<std::pair<int, Rat>> pivot;
  for (const LinComb& x : elems) pivot.push_back(x.front());
  std::map<int, int> pivot_owner;
  for (std::size_t d = 0; d < elems.size(); ++d)
    if (!pivot_owner.emplace(pivot[d].first, static_cast<int>(d)).second)
      fail(ErrorCode::Consistency, "derived elements share a pivot unit");

  auto ambient_bracket = [&](const LinComb& x, const LinComb& y) {
    LinComb z;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y)
        for (const auto& [c, cc] : amb.bracket(a, b)) add_to(z, c, ca * cb * cc);
    return z;
  };
  const std::string name = "osp(" + std::to_string(r) + "|" + std::to_string(2 * n) + ")";
  auto bracket = [&](int i, int j) {
    LinComb z = ambient_bracket(elems[i], elems[j]);
    LinComb out;
    while (!z.empty()) {
      auto it = pivot_owner.find(z.front().first);
      if (it == pivot_owner.end())
        fail(ErrorCode::Consistency, "bracket [" + gens[i].label + "," + gens[j].label + "] leaves " + name);
      const int d = it->second;
      const Rat c = z.front().second / pivot[d].second;
      add_to(out, d, c);
      for (const auto& [u, cu] : elems[d]) add_to(z, u, -c * cu);
    }
    return out;
  };
  real->derived = SuperAlgebra::create(name, n, m, gens, bracket);
  const SuperAlgebra& der = real->derived;

  real->embedding.assign(der.dimension(), {});
  for (int i = 0; i < der.dimension(); ++i) {
    auto it = std::find_if(gens.begin(), gens.end(), [&](const Generator& g) { return g.label == der.generator(i).label; });
    real->embedding[i] = elems[it - gens.begin()];
  }
  for (int h : der.cartan())
    for (int e = 0; e < der.dimension(); ++e) {
      if (der.generator(e).kind == GenKind::Cartan) continue;
      LinComb expected;
      add_to(expected, e, Rat(der.generator(e).root[der.generator(h).cartan_coord]));
      if (der.bracket(h, e) != expected)
        fail(ErrorCode::Consistency, "Cartan element " + der.generator(h).label + " does not act by the root on " +
                                         der.generator(e).label);
    }
  return real;
}

}  // namespace

std::shared_ptr<const OspRealization> build_osp(OspFamily family, int m, int n) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const OspRealization>> cache;
  const auto key = std::make_tuple(static_cast<int>(family), m, n);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::shared_ptr<const OspRealization> built = construct(family, m, n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(built)).first->second;
}

namespace {

// β = δ_s ± ε_t as (s, t, plus); nullopt otherwise.
std::optional<std::tuple<int, int, bool>> split_odd(const OspRealization& real, const RootVector& beta) {
  const int n = real.n;
  if (static_cast<int>(beta.size()) != real.derived.rank()) return std::nullopt;
  int s = 0, t = 0, sign = 0, count = 0;
  for (int k = 0; k < static_cast<int>(beta.size()); ++k) {
    if (beta[k] == 0) continue;
    ++count;
    if (k < n && beta[k] == 1) s = k + 1;
    else if (k >= n && std::abs(beta[k]) == 1) { t = k - n + 1; sign = beta[k]; }
  }
  if (count != 2 || s == 0 || t == 0) return std::nullopt;
  return std::make_tuple(s, t, sign > 0);
}

}  // namespace

bool osp_atypicality(const OspRealization& real, const Weight& lam, const RootVector& beta) {
  if (!split_odd(real, beta))
    fail(ErrorCode::Precondition, root_str(beta, real.n) + " is not an odd root d<s>+e<t> or d<s>-e<t> of " +
                                      real.derived.name());
  return real.derived.is_atypical(lam, beta);
}

VermaVector<Rat> osp_singular_formula(const OspRealization& real, const Weight& lam, const RootVector& beta) {
  auto parts = split_odd(real, beta);
  if (!parts) fail(ErrorCode::Precondition, root_str(beta, real.n) + " is not an odd root of " + real.derived.name());
  if (std::get<2>(*parts))
    fail(ErrorCode::Precondition, "no closed formula is known for " + root_str(beta, real.n) + " in " +
                                      real.derived.name() +
                                      ": singular vectors for odd roots d<s>+e<t> are an open problem");
  return singular_vector_formula(real.derived, lam, beta);
}

std::vector<Osp62Term> osp62_example_terms() {
  // coordinates (δ_1 | ε_1, ε_2, ε_3)
  auto R = [](int d, int e1, int e2, int e3) { return RootVector{d, e1, e2, e3}; };
  const RootVector e3m2 = R(0, 0, -1, 1), m3m2 = R(0, 0, -1, -1), e2m1 = R(0, -1, 1, 0), e1md = R(-1, 1, 0, 0);
  const RootVector m3m1 = R(0, -1, 0, -1), e3m1 = R(0, -1, 0, 1), e2md = R(-1, 0, 1, 0), m2m1 = R(0, -1, -1, 0);
  const RootVector m3md = R(-1, 0, 0, -1), e3md = R(-1, 0, 0, 1), m2md = R(-1, 0, -1, 0), m1md = R(-1, -1, 0, 0);
  const CartanPoly b1 = CartanPoly::symbol(1), b2 = CartanPoly::symbol(2), b3 = CartanPoly::symbol(3);
  const CartanPoly p12 = b1 - b2, q12 = b1 + b2 + 3;
  const CartanPoly s23 = b2 + b3 + 2, d23 = b2 - b3 + 2;
  const CartanPoly s13 = b1 + b3 + 2, d13 = b1 - b3 + 2;
  return {
      {{e3m2, m3m2, e2m1, e2m1, e1md}, CartanPoly(1)},
      {{e3m2, m3m1, e2m1, e1md}, -s23},
      {{m3m2, e3m1, e2m1, e1md}, -d23},
      {{e3m2, m3m2, e2m1, e2md}, -(b1 * 2 + 4)},
      {{m2m1, e2m1, e1md}, -(p12 * q12 + d23 * s23)},
      {{e3m1, m3m1, e1md}, -(p12 * q12)},
      {{e3m2, e2m1, m3md}, q12 * s13},
      {{m3m2, e2m1, e3md}, q12 * d13},
      {{e3m2, m3m1, e2md}, (p12 + 1) * s23 - p12 * q12},
      {{m3m2, e3m1, e2md}, (p12 + 1) * d23 - p12 * q12},
      {{m2m1, e2md}, p12 * p12 * q12 + (p12 + 1) * d23 * s23},
      {{e2m1, m2md}, q12 * d13 * s13},
      {{e3m1, m3md}, p12 * q12 * s13},
      {{m3m1, e3md}, p12 * q12 * d13},
      {{m1md}, (p12 + 1) * q12 * d13 * s13},
  };
}

VermaVector<Rat> osp62_example_vector(const OspRealization& real, const Weight& lam) {
  if (real.family != OspFamily::Even || real.m != 3 || real.n != 1)
    fail(ErrorCode::Usage, "the fifteen-term vector lives in osp(6|2)");
  const SuperAlgebra& alg = real.derived;
  const std::vector<Rat> coords = lam.coords();
  if (coords.size() != 4) fail(ErrorCode::Usage, "weight rank does not match osp(6|2)");
  if (coords[0] != coords[1] + Rat(4))
    fail(ErrorCode::Precondition, "lambda " + lam.str() + " is not (d1+e1)-atypical: a - b1 - 4 = " +
                                      (coords[0] - coords[1] - Rat(4)).str() + " != 0");
  Straightener st(alg);
  Element<Rat> out;
  for (const Osp62Term& term : osp62_example_terms()) {
    std::vector<int> word;
    for (const RootVector& f : term.factors) {
      auto g = alg.root_vector(f);
      if (!g) fail(ErrorCode::Consistency, root_str(f, 1) + " is not a root of osp(6|2)");
      word.push_back(*g);
    }
    const Element<Rat> normal = st.straighten(word);
    out += normal.scaled(poly_eval(term.coefficient, coords));
  }
  return {&alg, coords, project_to_verma(alg, out, coords)};
}

}  // namespace oddsing
