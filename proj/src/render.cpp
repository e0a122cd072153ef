#include "oddsing/render.hpp"

#include <algorithm>
#include <tuple>

namespace oddsing {

namespace {

using nlohmann::json;

// Joins signed pieces: a piece starting with '-' is glued with " - " (plain)
// or "-" (LaTeX), otherwise with " + " or "+".
std::string join_signed(const std::vector<std::string>& pieces, bool latex) {
  std::string out;
  for (const std::string& p : pieces) {
    if (out.empty()) {
      out = p;
    } else if (p.starts_with('-')) {
      out += latex ? "-" + p.substr(1) : " - " + p.substr(1);
    } else {
      out += latex ? "+" + p : " + " + p;
    }
  }
  return out.empty() ? "0" : out;
}

// Numeric prefactor in front of a product: "" for 1, "-" for -1.
std::string prefactor(const Rat& c, bool latex) {
  if (c.is_one()) return "";
  if (c == Rat(-1)) return "-";
  return render_rat(c, latex);
}

std::string with_prefactor(const Rat& c, const std::string& body, bool latex) {
  const std::string pre = prefactor(c, latex);
  if (pre.empty() || pre == "-") return pre + body;
  return latex ? pre + body : pre + " " + body;
}

std::string power_product(const PowerProduct& pp, const SymbolNamer& names, bool latex) {
  std::string out;
  for (const auto& [sym, exp] : pp) {
    if (!out.empty() && !latex) out += "*";
    out += names(sym, latex);
    if (exp > 1) out += latex ? "^{" + std::to_string(exp) + "}" : "^" + std::to_string(exp);
  }
  return out;
}

// Whether the polynomial prints as a single unsigned product of symbols.
bool is_bare_product(const CartanPoly& p) {
  return p.terms().size() == 1 && !p.terms().begin()->first.empty() && p.terms().begin()->second.is_one();
}

std::string coefficient_text(const CartanPoly& p, const SymbolNamer& names, bool latex) {
  if (auto c = p.constant_value()) return prefactor(*c, latex);
  if (is_bare_product(p)) return render_poly(p, names, latex);
  return "(" + render_poly(p, names, latex) + ")";
}

template <class R, class CoefText>
std::string render_terms(const SuperAlgebra& alg, const Element<R>& e, bool latex, const std::string& suffix,
                         CoefText&& coef_text) {
  std::vector<std::string> pieces;
  for (const auto& [m, c] : e.terms()) {
    const std::string coef = coef_text(c);
    std::string mono = render_monomial(alg, m, latex);
    if (mono.empty()) {
      pieces.push_back(coef.empty() ? "1" : (coef == "-" ? "-1" : coef));
      continue;
    }
    if (coef.empty() || coef == "-" || latex) pieces.push_back(coef + mono);
    else pieces.push_back(coef + " " + mono);
  }
  std::string body = join_signed(pieces, latex);
  if (!latex && pieces.size() > 1 && !suffix.empty()) body = "(" + body + ")";
  return body + suffix;
}

int generator_by_label(const SuperAlgebra& alg, const std::string& label) {
  for (int i = 0; i < alg.dimension(); ++i)
    if (alg.generator(i).label == label) return i;
  fail(ErrorCode::Usage, "unknown generator label '" + label + "' for " + alg.name());
}

Monomial monomial_from_json(const SuperAlgebra& alg, const json& labels) {
  if (!labels.is_array()) fail(ErrorCode::Usage, "monomial must be an array of generator labels");
  Monomial m;
  for (const json& l : labels) {
    if (!l.is_string()) fail(ErrorCode::Usage, "generator label must be a string");
    m.gens.push_back(generator_by_label(alg, l.get<std::string>()));
  }
  if (!std::is_sorted(m.gens.begin(), m.gens.end()))
    fail(ErrorCode::Usage, "monomial is not in PBW order");
  return m;
}

json monomial_json(const SuperAlgebra& alg, const Monomial& m) {
  json labels = json::array();
  for (int g : m.gens) labels.push_back(alg.generator(g).label);
  return labels;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "plain") return Format::Plain;
  if (text == "latex") return Format::Latex;
  if (text == "json") return Format::Json;
  fail(ErrorCode::Usage, "unknown format '" + std::string(text) + "' (expected plain, latex or json)");
}

std::string format_name(Format f) {
  switch (f) {
    case Format::Plain: return "plain";
    case Format::Latex: return "latex";
    case Format::Json: return "json";
  }
  return "plain";
}

SymbolNamer weight_symbols(const SuperAlgebra& alg) {
  const int n_delta = alg.n_delta();
  return [n_delta](int sym, bool latex) { return coord_name(sym, n_delta, latex); };
}

SymbolNamer cartan_symbols(const SuperAlgebra& alg) {
  return [&alg](int sym, bool latex) {
    const Generator& g = alg.generator(alg.cartan_generator(sym));
    return latex ? g.latex : g.label;
  };
}

std::string render_rat(const Rat& r, bool latex) {
  if (!latex || r.is_integer()) return r.str();
  const std::string sign = r.sign() < 0 ? "-" : "";
  mpz_class num = r.numerator();
  if (num < 0) num = -num;
  return sign + "\\frac{" + num.get_str() + "}{" + r.denominator().get_str() + "}";
}

std::string render_poly(const CartanPoly& p, const SymbolNamer& names, bool latex) {
  // Sort key: sign group (positive, negative, constant), then degree
  // descending, then symbols with larger index first inside each block.
  using Key = std::tuple<int, int, std::vector<int>>;
  std::vector<std::pair<Key, std::string>> pieces;
  for (const auto& [pp, c] : p.terms()) {
    if (pp.empty()) {
      pieces.push_back({{2, 0, {}}, render_rat(c, latex)});
      continue;
    }
    int degree = 0;
    std::vector<int> order;
    for (const auto& [sym, exp] : pp) {
      degree += exp;
      order.push_back(-sym);
    }
    pieces.push_back({{c.sign() > 0 ? 0 : 1, -degree, order},
                      with_prefactor(c, power_product(pp, names, latex), latex)});
  }
  std::sort(pieces.begin(), pieces.end());
  std::vector<std::string> texts;
  for (auto& [key, text] : pieces) texts.push_back(std::move(text));
  return join_signed(texts, latex);
}

std::string render_monomial(const SuperAlgebra& alg, const Monomial& m, bool latex) {
  std::string out;
  for (const auto& [g, exp] : m.factors()) {
    const Generator& gen = alg.generator(g);
    if (!out.empty() && !latex) out += " ";
    out += latex ? gen.latex : gen.label;
    if (exp > 1) out += latex ? "^{" + std::to_string(exp) + "}" : "^" + std::to_string(exp);
  }
  return out;
}

std::string render_element(const SuperAlgebra& alg, const Element<Rat>& e, bool latex, const std::string& suffix) {
  return render_terms(alg, e, latex, suffix, [&](const Rat& c) { return prefactor(c, latex); });
}

std::string render_element(const SuperAlgebra& alg, const Element<CartanPoly>& e, const SymbolNamer& names,
                           bool latex, const std::string& suffix) {
  return render_terms(alg, e, latex, suffix, [&](const CartanPoly& c) { return coefficient_text(c, names, latex); });
}

std::string render_chain_formula(const SuperAlgebra& alg, const ChainFormula<CartanPoly>& f,
                                 const SymbolNamer& names, bool latex, bool cartan_right,
                                 const std::string& suffix) {
  std::vector<std::string> pieces;
  for (const ChainTerm<CartanPoly>& term : f.terms) {
    Rat scalar(1);
    std::vector<std::string> factors;
    for (int p : term.omitted) {
      const CartanPoly& c = f.datum.c[p];
      if (auto v = c.constant_value()) {
        scalar *= *v;
        continue;
      }
      factors.push_back(is_bare_product(c) ? render_poly(c, names, latex) : "(" + render_poly(c, names, latex) + ")");
    }
    if (scalar.is_zero()) continue;
    std::sort(factors.begin(), factors.end());
    std::string product;
    for (const std::string& x : factors) product += (product.empty() || latex) ? x : " " + x;
    const std::string word = render_monomial(alg, Monomial(term.word), latex);
    std::string body;
    if (product.empty()) body = word;
    else if (cartan_right) body = latex ? word + product : word + " " + product;
    else body = latex ? product + word : product + " " + word;
    pieces.push_back(with_prefactor(scalar, body, latex));
  }
  std::string out = join_signed(pieces, latex);
  if (!latex && pieces.size() > 1 && !suffix.empty()) out = "(" + out + ")";
  return out + suffix;
}

json poly_json(const CartanPoly& p) {
  json terms = json::array();
  for (const auto& [pp, c] : p.terms()) {
    json powers = json::array();
    for (const auto& [sym, exp] : pp) powers.push_back({sym, exp});
    terms.push_back({{"coefficient", c.str()}, {"powers", powers}});
  }
  return terms;
}

CartanPoly poly_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorCode::Usage, "polynomial must be a term list");
  CartanPoly p;
  for (const json& t : j) {
    if (!t.is_object() || !t.contains("coefficient") || !t.contains("powers"))
      fail(ErrorCode::Usage, "polynomial term needs coefficient and powers");
    PowerProduct pp;
    for (const json& e : t.at("powers")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorCode::Usage, "power must be [symbol, exponent]");
      pp.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    p.add_term(pp, Rat::parse(t.at("coefficient").get<std::string>()));
  }
  return p;
}

json element_json(const SuperAlgebra& alg, const Element<Rat>& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms())
    terms.push_back({{"monomial", monomial_json(alg, m)}, {"coefficient", c.str()}});
  return terms;
}

json element_json(const SuperAlgebra& alg, const Element<CartanPoly>& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms())
    terms.push_back({{"monomial", monomial_json(alg, m)}, {"coefficient", poly_json(c)}});
  return terms;
}

Element<Rat> element_from_json(const SuperAlgebra& alg, const json& terms) {
  if (!terms.is_array()) fail(ErrorCode::Usage, "terms must be an array");
  Element<Rat> e;
  for (const json& t : terms) {
    if (!t.contains("coefficient") || !t.at("coefficient").is_string())
      fail(ErrorCode::Usage, "numeric term needs a string coefficient");
    e.add(monomial_from_json(alg, t.at("monomial")), Rat::parse(t.at("coefficient").get<std::string>()));
  }
  return e;
}

Element<CartanPoly> poly_element_from_json(const SuperAlgebra& alg, const json& terms) {
  if (!terms.is_array()) fail(ErrorCode::Usage, "terms must be an array");
  Element<CartanPoly> e;
  for (const json& t : terms) {
    if (!t.contains("coefficient") || !t.at("coefficient").is_array())
      fail(ErrorCode::Usage, "polynomial term needs a term-list coefficient");
    e.add(monomial_from_json(alg, t.at("monomial")), poly_from_json(t.at("coefficient")));
  }
  return e;
}

}  // namespace oddsing
