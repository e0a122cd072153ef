#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddsing/error.hpp"
#include "oddsing/rational.hpp"

namespace oddsing {

enum class Parity { Even = 0, Odd = 1 };

inline int sign_of_swap(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

enum class GenKind { Lowering, Cartan, Raising };

/// Integer coordinates of a root on the basis (δ_1..δ_p, ε_1..ε_q).
using RootVector = std::vector<int>;

/// Element of h*, stored as δ and ε coefficient blocks; delta[i-1] is the
/// coefficient of δ_i and eps[k-1] the coefficient of ε_k.
struct Weight {
  std::vector<Rat> delta;
  std::vector<Rat> eps;

  Weight() = default;
  Weight(std::vector<Rat> d, std::vector<Rat> e) : delta(std::move(d)), eps(std::move(e)) {}
  static Weight zero(int n_delta, int n_eps);
  static Weight from_coords(std::span<const Rat> coords, int n_delta);
  static Weight from_root(const RootVector& root, int n_delta);

  std::vector<Rat> coords() const;
  std::size_t rank() const { return delta.size() + eps.size(); }
  const Rat& coord(std::size_t k) const { return k < delta.size() ? delta[k] : eps[k - delta.size()]; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords() < b.coords(); }

  /// All pairwise differences a_i - a_j and b_p - b_q are integers.
  bool is_integral() const;
  /// Integral and a_p >= ... >= a_1, b_1 >= ... >= b_q (the gl normalization).
  bool is_dominant() const;

  /// "(a_m,...,a_1 | b_1,...,b_n)".
  std::string str() const;
};

/// One homogeneous basis vector of the algebra.
struct Generator {
  std::string label;  // plain text, e.g. "E(1,2bar)"
  std::string latex;  // e.g. "E_{1,\overline{2}}"
  Parity parity = Parity::Even;
  GenKind kind = GenKind::Cartan;
  RootVector root;        // all zeros for Cartan generators
  int cartan_coord = -1;  // Cartan generators: λ(H) = λ.coord(cartan_coord)
};

/// Sparse linear combination of basis vectors, sorted by index, zero-free.
using LinComb = std::vector<std::pair<int, Rat>>;

void add_to(LinComb& acc, int index, const Rat& c);
LinComb scaled(const LinComb& v, const Rat& c);

/// Finite-dimensional Lie superalgebra with a triangular decomposition and a
/// form on h*. The basis is stored in PBW order (index == PBW position):
/// lowering generators first, then Cartan, then raising.
class SuperAlgebra {
 public:
  using BracketFn = std::function<LinComb(int, int)>;

  /// Builds the algebra from a raw basis and bracket function. Sorts the basis
  /// into PBW order, stores the upper triangle of the bracket table and checks
  /// super-antisymmetry and weight additivity of every pair. Throws
  /// Error(Consistency) on a violation.
  static SuperAlgebra create(std::string name, int n_delta, int n_eps,
                             std::vector<Generator> basis, const BracketFn& bracket);

  const std::string& name() const { return name_; }
  int n_delta() const { return n_delta_; }
  int n_eps() const { return n_eps_; }
  int rank() const { return n_delta_ + n_eps_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const Generator& generator(int i) const { return basis_[i]; }
  const std::vector<Generator>& basis() const { return basis_; }

  LinComb bracket(int i, int j) const;

  const std::vector<int>& lowering() const { return lowering_; }
  const std::vector<int>& cartan() const { return cartan_; }
  const std::vector<int>& raising() const { return raising_; }
  /// Raising generators of the simple roots (indecomposable positive roots).
  const std::vector<int>& simple_raisings() const { return simple_; }

  /// Generator spanning the root space of `root`, if `root` is a root.
  std::optional<int> root_vector(const RootVector& root) const;
  /// Cartan generator evaluating coordinate k.
  int cartan_generator(int coord) const;

  std::vector<RootVector> positive_roots(Parity p) const;
  bool is_root(const RootVector& root) const { return root_index_.count(root) != 0; }
  bool is_positive(const RootVector& root) const { return height(root) > 0; }
  /// Linear functional fixing the positive system; integral and nonzero on roots.
  int height(const RootVector& root) const;

  /// (u, w) with (δ_i, δ_j) = δ_ij = -(ε_i, ε_j) and (δ, ε) = 0.
  Rat form(const Weight& u, const Weight& w) const;
  const Weight& rho() const { return rho_; }

  Weight weight_of(const RootVector& root) const { return Weight::from_root(root, n_delta_); }

  /// (λ+ρ, β) = 0 for an odd positive root β. Throws Error(Precondition)
  /// when β is not an odd positive root.
  bool is_atypical(const Weight& lam, const RootVector& beta) const;

  /// Exhaustive super-Jacobi check over all basis triples. Returns a
  /// description of the first failing triple.
  std::optional<std::string> find_jacobi_violation() const;

 private:
  std::string name_;
  int n_delta_ = 0;
  int n_eps_ = 0;
  std::vector<Generator> basis_;
  std::vector<LinComb> upper_;  // triangular index of (i <= j)
  std::vector<int> lowering_, cartan_, raising_, simple_;
  std::map<RootVector, int> root_index_;
  Weight rho_;

  std::size_t tri(int i, int j) const;
};

/// gl(m|n) in the standard basis E_{i,j}, i,j in {m̄ < ... < 1̄ < 1 < ... < n}.
SuperAlgebra build_gl(int m, int n);

/// Convenience for tests: root δ_s - ε_t (or + when plus is set).
RootVector delta_eps_root(int n_delta, int n_eps, int s, int t, bool plus = false);

/// Text forms "d2-e1", "d1+e3".
RootVector parse_root(std::string_view text, int n_delta, int n_eps);
std::string root_str(const RootVector& root, int n_delta);

/// Gives `rank(n_delta,n_eps)` names to coordinates: a1..ap, b1..bq.
std::string coord_name(int coord, int n_delta, bool latex);

/// Bilinear form wrapper with rank checking.
Rat bilinear_form(const SuperAlgebra& alg, const Weight& u, const Weight& w);

}  // namespace oddsing
