#include "qaw/linalg.hpp"

#include <stdexcept>

namespace qaw {

Mat identity_matrix(int n) {
  Mat m(n, Vec(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  const size_t rows = a.size(), inner = b.size(), cols = b[0].size();
  for (const auto& row : a) {
    if (row.size() != inner) throw std::invalid_argument("mat_mul: shape mismatch");
  }
  Mat out(rows, Vec(cols, Rational(0)));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) {
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t lead = 0;
  for (size_t col = 0; col < cols && lead < rows; ++col) {
    size_t piv = lead;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[lead]);
    const Rational inv = Rational(1) / m[lead][col];
    for (size_t j = col; j < cols; ++j) m[lead][j] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == lead || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (size_t j = col; j < cols; ++j) m[r][j] -= factor * m[lead][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++lead;
  }
  return pivots;
}

int rank(Mat m) {
  return static_cast<int>(rref(m).size());
}

Rational determinant(Mat m) {
  const size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  }
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = Rational(1) / m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] * inv;
      for (size_t j = col; j < n; ++j) m[r][j] -= factor * m[col][j];
    }
  }
  return det;
}

std::optional<Mat> inverse(const Mat& m) {
  const size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("inverse: matrix not square");
  }
  Mat aug(n, Vec(2 * n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const std::vector<int> pivots = rref(aug);
  if (pivots.size() != n) return std::nullopt;
  for (size_t i = 0; i < n; ++i) {
    if (pivots[i] != static_cast<int>(i)) return std::nullopt;
  }
  Mat inv(n, Vec(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

std::optional<Vec> solve_linear(const Mat& a, const Vec& b) {
  const size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_linear: shape mismatch");
  const size_t cols = rows == 0 ? 0 : a[0].size();
  Mat aug(rows, Vec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  const std::vector<int> pivots = rref(aug);
  // A pivot in the augmented column means the system is inconsistent.
  for (int p : pivots) {
    if (p == static_cast<int>(cols)) return std::nullopt;
  }
  Vec x(cols, Rational(0));
  for (size_t row = 0; row < pivots.size(); ++row) {
    x[pivots[row]] = aug[row][cols];
  }
  // Rows with pivots express pivot variables purely in terms of free
  // variables; with free variables at zero the RHS entry is the solution.
  return x;
}

}  // namespace qaw
