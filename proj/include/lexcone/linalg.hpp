#pragma once

#include <optional>
#include <vector>

#include "lexcone/error.hpp"
#include "lexcone/rational.hpp"

namespace lexcone {

using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;  // row-major

namespace linalg {

inline Matrix identity(std::size_t n) {
  Matrix a(n, Vec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

inline std::size_t cols(const Matrix& a) { return a.empty() ? 0 : a.front().size(); }

inline Vec multiply(const Matrix& a, const Vec& x) {
  Vec y(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw DimensionMismatch("matrix/vector size mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = cols(b);
  Matrix c(a.size(), Vec(n, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b.size()) throw DimensionMismatch("matrix size mismatch");
    for (std::size_t k = 0; k < b.size(); ++k)
      if (sgn(a[i][k]) != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  }
  return c;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(cols(a), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline Rational dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector size mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline bool is_zero(const Vec& v) {
  for (const auto& q : v)
    if (sgn(q) != 0) return false;
  return true;
}

// First nonzero coordinate is positive.
inline bool lex_positive(const Vec& v) {
  for (const auto& q : v)
    if (sgn(q) != 0) return sgn(q) > 0;
  return false;
}

// Kronecker product; (A (x) B)(x (x) y) = Ax (x) By with row-major
// flattening of x y^T.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t ra = a.size(), ca = cols(a), rb = b.size(), cb = cols(b);
  Matrix k(ra * rb, Vec(ca * cb, Rational(0)));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j)
      for (std::size_t p = 0; p < rb; ++p)
        for (std::size_t q = 0; q < cb; ++q) k[i * rb + p][j * cb + q] = a[i][j] * b[p][q];
  return k;
}

// Row-reduced echelon form with pivots chosen left to right, top to bottom.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

inline Echelon rref(Matrix a) {
  const std::size_t m = a.size(), n = cols(a);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && sgn(a[p][col]) == 0) ++p;
    if (p == m) continue;
    std::swap(a[row], a[p]);
    const Rational inv = 1 / a[row][col];
    for (auto& q : a[row]) q *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || sgn(a[i][col]) == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= factor * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const Matrix& a) { return rref(a).pivot_cols.size(); }

inline Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    if (a[col].size() != n) throw DimensionMismatch("determinant of a non-square matrix");
    std::size_t p = col;
    while (p < n && sgn(a[p][col]) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      const Rational factor = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[col][j];
    }
  }
  return det;
}

inline std::optional<Matrix> inverse(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix aug(n, Vec(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw DimensionMismatch("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto e = rref(std::move(aug));
  if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.reduced[i][n + j];
  return inv;
}

// Basis of {x : <normal, x> = 0}: for each non-pivot coordinate j,
// e_j - (normal_j / normal_p) e_p where p is the first nonzero coordinate.
inline std::vector<Vec> hyperplane_basis(const Vec& normal) {
  std::size_t p = 0;
  while (p < normal.size() && sgn(normal[p]) == 0) ++p;
  if (p == normal.size()) throw DimensionMismatch("zero normal vector");
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < normal.size(); ++j) {
    if (j == p) continue;
    Vec b(normal.size(), Rational(0));
    b[j] = 1;
    b[p] = -normal[j] / normal[p];
    basis.push_back(std::move(b));
  }
  return basis;
}

}  // namespace linalg

// Exact phase-one simplex: finds x >= 0 with A x = b, or reports
// infeasibility. Bland's rule guarantees termination.
inline std::optional<Vec> find_nonnegative_solution(const Matrix& a, const Vec& b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  if (b.size() != m) throw DimensionMismatch("right-hand side size mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw DimensionMismatch("ragged constraint matrix");

  // Columns: n originals, m artificials, then the right-hand side.
  const std::size_t width = n + m + 1;
  Matrix tab(m, Vec(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    tab[i][n + i] = 1;
    tab[i][width - 1] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of "minimise the sum of artificials".
  Vec cost(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[j] -= tab[i][j];
  for (std::size_t i = 0; i < m; ++i) cost[width - 1] -= tab[i][width - 1];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(tab[i][enter]) <= 0) continue;
      Rational ratio = tab[i][width - 1] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    // Phase one is bounded below by zero, so some row always limits.
    if (leave == m) throw VerificationFailure("unbounded phase-one simplex");

    const Rational inv = 1 / tab[leave][enter];
    for (auto& q : tab[leave]) q *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(tab[i][enter]) == 0) continue;
      const Rational factor = tab[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(tab[leave][j]) != 0) tab[i][j] -= factor * tab[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      const Rational factor = cost[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(tab[leave][j]) != 0) cost[j] -= factor * tab[leave][j];
    }
    basis[leave] = enter;
  }

  if (sgn(cost[width - 1]) != 0) return std::nullopt;
  Vec x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = tab[i][width - 1];
  return x;
}

}  // namespace lexcone
