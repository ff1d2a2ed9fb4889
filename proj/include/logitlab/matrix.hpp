#ifndef LOGITLAB_MATRIX_HPP
#define LOGITLAB_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace logitlab {

// Dense row-major matrix. Kernel and table sizes here are desk scale
// (a few thousand rows at most), so no sparse or blocked machinery.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const double> row(std::size_t r) const {
    return {data.data() + r * cols, cols};
  }
};

// C = A * B, naive i-k-j loop (cache friendly on row-major operands).
Matrix multiply(const Matrix& a, const Matrix& b);

// Rescale each row to sum exactly to one. Used after repeated kernel powers
// to stop 1e-15-scale drift from accumulating over many squarings.
void renormalize_rows(Matrix& m);

// x^T A (left action of a row vector on the matrix).
std::vector<double> left_apply(std::span<const double> x, const Matrix& a);

// Solve A y = rhs by LU with partial pivoting; A is overwritten.
// Used for the dense stationary-distribution fallback.
std::vector<double> solve_inplace(Matrix& a, std::vector<double> rhs);

}  // namespace logitlab

#endif  // LOGITLAB_MATRIX_HPP
