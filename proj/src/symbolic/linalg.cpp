#include "slecft/symbolic/linalg.hpp"

#include <stdexcept>

namespace slecft::sym {

Echelon row_reduce(RationalMatrix m) {
  Echelon e;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(m);
  return e;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<RationalVector> kernel(const RationalMatrix& m, std::size_t columns) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(columns, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref[r][free];
    // normalize: first nonzero entry 1
    for (auto& x : v) {
      if (x == 0) continue;
      Rational s = 1 / x;
      for (auto& y : v) y *= s;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Rational inv = 1 / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

RationalMatrix identity(std::size_t n) {
  RationalMatrix id(n, RationalVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  std::size_t n = m.size();
  RationalMatrix aug(n, RationalVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || (n && e.pivots[n - 1] != n - 1)) return std::nullopt;
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rref[i][n + j];
  return inv;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  RationalMatrix out(n, RationalVector(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

std::optional<LinearSolution> solve(const RationalMatrix& a, const RationalVector& b) {
  std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve: size mismatch");
  std::size_t cols = rows ? a[0].size() : 0;
  RationalMatrix aug(rows, RationalVector(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  LinearSolution sol;
  sol.x.assign(cols, 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) sol.x[e.pivots[r]] = e.rref[r][cols];
  sol.nullity = cols - e.pivots.size();
  return sol;
}

CoeffPoly determinant(const PolyMatrix& a) {
  std::size_t n = a.size();
  if (n == 0) return CoeffPoly(1L);
  for (auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  // vect holds the characteristic polynomial coefficients of the leading
  // r x r block, highest power first.
  std::vector<CoeffPoly> vect = {CoeffPoly(1L), -a[0][0]};
  for (std::size_t r = 1; r < n; ++r) {
    // Block [[M, C], [R, d]] with M = a[0..r)[0..r).
    std::vector<CoeffPoly> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = a[i][r];
    std::vector<CoeffPoly> t(r + 2);
    t[0] = CoeffPoly(1L);
    t[1] = -a[r][r];
    std::vector<CoeffPoly> mc = col;  // M^k C
    for (std::size_t k = 0; k < r; ++k) {
      PolyAccumulator acc;
      for (std::size_t i = 0; i < r; ++i) acc.add_product(a[r][i], mc[i], -1);
      t[k + 2] = acc.finish();
      if (k + 1 < r) {
        std::vector<CoeffPoly> next(r);
        for (std::size_t i = 0; i < r; ++i) {
          PolyAccumulator row;
          for (std::size_t j = 0; j < r; ++j) row.add_product(a[i][j], mc[j]);
          next[i] = row.finish();
        }
        mc = std::move(next);
      }
    }
    std::vector<CoeffPoly> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      PolyAccumulator acc;
      for (std::size_t j = 0; j <= std::min(i, r); ++j) acc.add_product(t[i - j], vect[j]);
      next[i] = acc.finish();
    }
    vect = std::move(next);
  }
  return (n % 2 == 0) ? vect[n] : -vect[n];
}

CoeffPoly determinant_laplace(const PolyMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) return CoeffPoly(1L);
  if (n == 1) return m[0][0];
  CoeffPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<CoeffPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    CoeffPoly term = m[0][j] * determinant_laplace(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

RationalMatrix specialize(const PolyMatrix& m, const std::map<Generator, Rational>& assignment) {
  RationalMatrix out;
  for (auto& row : m) {
    RationalVector r;
    for (auto& x : row) r.push_back(x.substitute(assignment).constant_value());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace slecft::sym
