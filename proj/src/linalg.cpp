#include "oddsing/linalg.hpp"

#include "oddsing/error.hpp"

namespace oddsing {

void Matrix::append_row(RatVector row) {
  if (data_.empty() && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) fail(ErrorCode::Usage, "matrix row length mismatch");
  data_.push_back(std::move(row));
}

Matrix Matrix::from_rows(std::size_t cols, std::vector<RatVector> rows) {
  Matrix m(0, cols);
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

Matrix Matrix::from_columns(std::size_t height, const std::vector<RatVector>& columns) {
  Matrix m(height, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < height; ++r) m(r, c) = columns[c][r];
  return m;
}

Echelon bareiss_echelon(const Matrix& a) {
  const std::size_t nr = a.rows(), nc = a.cols();
  std::vector<std::vector<mpz_class>> m(nr, std::vector<mpz_class>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < nc; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).value().get_den_mpz_t());
    for (std::size_t c = 0; c < nc; ++c) {
      const mpq_class& q = a(r, c).value();
      m[r][c] = q.get_num() * (l / q.get_den());
    }
  }

  Echelon e;
  e.cols = nc;
  mpz_class prev = 1;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < nc && pr < nr; ++c) {
    std::size_t p = pr;
    while (p < nr && m[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(m[p], m[pr]);
    for (std::size_t i = pr + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        mpz_class v = m[pr][c] * m[i][j] - m[i][c] * m[pr][j];
        if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
          fail(ErrorCode::Consistency, "Bareiss step produced an inexact division");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][c] = 0;
    }
    prev = m[pr][c];
    e.pivots.push_back(c);
    ++pr;
  }
  m.resize(pr);
  e.rows = std::move(m);
  return e;
}

std::size_t rank(const Matrix& a) { return bareiss_echelon(a).pivots.size(); }

std::vector<RatVector> nullspace(const Matrix& a) {
  const Echelon e = bareiss_echelon(a);
  const std::size_t nc = a.cols();
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(nc);
    x[f] = Rat(1);
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
      const std::size_t pc = e.pivots[r];
      mpq_class s = 0;
      for (std::size_t j = pc + 1; j < nc; ++j)
        if (!x[j].is_zero() && e.rows[r][j] != 0) s += mpq_class(e.rows[r][j]) * x[j].value();
      x[pc] = Rat(mpq_class(-s / mpq_class(e.rows[r][pc])));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t span_rank(const std::vector<RatVector>& vectors, std::size_t length) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(length, vectors));
}

}  // namespace oddsing
