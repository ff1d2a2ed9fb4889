#include "logitlab/matrix.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include "logitlab/errors.hpp"

namespace logitlab {

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows, b.cols, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* arow = a.data.data() + i * a.cols;
    double* crow = c.data.data() + i * c.cols;
    for (std::size_t k = 0; k < a.cols; ++k) {
      double aik = arow[k];
      if (aik == 0.0) continue;
      const double* brow = b.data.data() + k * b.cols;
      for (std::size_t j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

void renormalize_rows(Matrix& m) {
  for (std::size_t i = 0; i < m.rows; ++i) {
    auto r = m.row(i);
    double s = 0.0;
    for (double x : r) s += x;
    if (s > 0.0) {
      for (double& x : r) x /= s;
    }
  }
}

std::vector<double> left_apply(std::span<const double> x, const Matrix& a) {
  std::vector<double> y(a.cols, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    double xi = x[i];
    if (xi == 0.0) continue;
    const double* arow = a.data.data() + i * a.cols;
    for (std::size_t j = 0; j < a.cols; ++j) y[j] += xi * arow[j];
  }
  return y;
}

std::vector<double> solve_inplace(Matrix& a, std::vector<double> rhs) {
  const std::size_t n = a.rows;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;

  for (std::size_t col = 0; col < n; ++col) {
    // Partial pivot.
    std::size_t best = col;
    double best_abs = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      double v = std::abs(a(r, col));
      if (v > best_abs) {
        best_abs = v;
        best = r;
      }
    }
    if (best_abs == 0.0) throw InternalError("singular matrix in dense solve");
    if (best != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(best, j));
      std::swap(rhs[col], rhs[best]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      a(r, col) = 0.0;
      for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
      rhs[r] -= f * rhs[col];
    }
  }
  // Back substitution.
  std::vector<double> y(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double acc = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * y[j];
    y[i] = acc / a(i, i);
  }
  return y;
}

}  // namespace logitlab
