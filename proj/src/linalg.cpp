#include "thetab/linalg.hpp"

#include <utility>

namespace thetab {

namespace {

// Clears each row of [A | extra] to coprime integers; row scaling leaves
// the solution set and row space unchanged.
std::vector<std::vector<Integer>> to_integer_rows(const RatMatrix& A, const RatVector* extra) {
  std::vector<std::vector<Integer>> M(A.size());
  for (size_t i = 0; i < A.size(); ++i) {
    size_t cols = A[i].size() + (extra ? 1 : 0);
    Integer lcm = 1;
    auto take = [&](const Rational& x) {
      Integer d = x.denominator();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    };
    for (const auto& x : A[i]) take(x);
    if (extra) take((*extra)[i]);
    M[i].resize(cols);
    auto put = [&](size_t j, const Rational& x) {
      Integer d = x.denominator();
      M[i][j] = x.numerator() * (lcm / d);
    };
    for (size_t j = 0; j < A[i].size(); ++j) put(j, A[i][j]);
    if (extra) put(A[i].size(), (*extra)[i]);
  }
  return M;
}

// Bareiss elimination in place; returns the column of the pivot used in
// each eliminated row, or -1 past the rank. Entries stay exact minors.
int bareiss_echelon(std::vector<std::vector<Integer>>& M, size_t cols, std::vector<int>* pivot_rows) {
  size_t rows = M.size();
  Integer prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && sgn(M[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < M[i].size(); ++j) {
        Integer t = M[r][c] * M[i][j] - M[i][c] * M[r][j];
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][c] = 0;
    }
    prev = M[r][c];
    if (pivot_rows) pivot_rows->push_back(static_cast<int>(c));
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

RatVector solve_linear(const RatMatrix& A, const RatVector& b) {
  size_t n = A.size();
  if (b.size() != n) throw ShapeMismatch("solve_linear: rhs length mismatch");
  for (const auto& row : A)
    if (row.size() != n) throw ShapeMismatch("solve_linear: matrix not square");
  if (n == 0) return {};

  auto M = to_integer_rows(A, &b);
  std::vector<int> pivots;
  int r = bareiss_echelon(M, n, &pivots);
  if (r < static_cast<int>(n)) throw SingularMatrix();
  // Echelon with pivots on the diagonal (square, full rank): back-substitute.
  RatVector x(n);
  for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
    Rational acc(M[i][n]);
    for (size_t j = i + 1; j < n; ++j) acc -= Rational(M[i][j]) * x[j];
    x[i] = acc / Rational(M[i][i]);
  }
  return x;
}

int rank(const RatMatrix& A) {
  if (A.empty()) return 0;
  size_t cols = A[0].size();
  for (const auto& row : A)
    if (row.size() != cols) throw ShapeMismatch("rank: ragged matrix");
  auto M = to_integer_rows(A, nullptr);
  return bareiss_echelon(M, cols, nullptr);
}

std::vector<int> independent_rows(const RatMatrix& A) {
  std::vector<int> keep;
  if (A.empty()) return keep;
  size_t cols = A[0].size();
  // Incremental echelon: reduced[j] is a kept row with pivot at column j.
  std::vector<RatVector> reduced(cols);
  std::vector<bool> has_pivot(cols, false);
  for (size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != cols) throw ShapeMismatch("independent_rows: ragged matrix");
    RatVector row = A[i];
    for (size_t j = 0; j < cols; ++j) {
      if (row[j].is_zero()) continue;
      if (!has_pivot[j]) {
        Rational inv = Rational(1) / row[j];
        for (size_t k = j; k < cols; ++k) row[k] *= inv;
        reduced[j] = std::move(row);
        has_pivot[j] = true;
        keep.push_back(static_cast<int>(i));
        break;
      }
      Rational f = row[j];
      for (size_t k = j; k < cols; ++k) row[k] -= f * reduced[j][k];
    }
  }
  return keep;
}

}  // namespace thetab
