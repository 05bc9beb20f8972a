#pragma once

#include <chromgf/algebra/rat_func.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace chromgf {

/// Row-major dense matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// x = numerators / denominator, all entries polynomial.
struct FractionFreeSolution {
  std::vector<PolyZC> numerators;
  PolyZC denominator;
};

/// Solves A x = b by Bareiss fraction-free elimination.  The returned
/// denominator is +-det(A) and numerators[i] = denominator * x[i]; nothing
/// is reduced.  Throws AlgebraError("singular system") when det(A) = 0 and
/// std::invalid_argument on shape mismatch.
FractionFreeSolution solve_fraction_free(const Matrix<PolyZC>& a, std::span<const PolyZC> b);

/// Same solve, each component reduced to a normalised RatFunc.
std::vector<RatFunc> solve_linear_system(const Matrix<PolyZC>& a, std::span<const PolyZC> b);

}  // namespace chromgf
