#include <chromgf/algebra/linear_solve.hpp>

#include <stdexcept>

namespace chromgf {

FractionFreeSolution solve_fraction_free(const Matrix<PolyZC>& a, std::span<const PolyZC> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  if (n == 0) return {{}, PolyZC(1)};

  // Augmented [A | b].
  Matrix<PolyZC> m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = b[i];
  }

  PolyZC prev_pivot(1);
  for (std::size_t k = 0; k < n; ++k) {
    // Prefer the sparsest nonzero pivot in column k.
    std::size_t pivot_row = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      if (pivot_row == n || m(i, k).terms().size() < m(pivot_row, k).terms().size()) pivot_row = i;
    }
    if (pivot_row == n) throw AlgebraError("singular system");
    if (pivot_row != k) m.swap_rows(pivot_row, k);

    const PolyZC pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const PolyZC factor = m(i, k);
      for (std::size_t j = k + 1; j <= n; ++j) {
        PolyZC cross = pivot * m(i, j) - factor * m(k, j);
        m(i, j) = exact_div(cross, prev_pivot);
      }
      m(i, k) = PolyZC();
    }
    prev_pivot = pivot;
  }

  // m(n-1, n-1) is +-det(A); back-substitute y = det * x, every step exact.
  const PolyZC det = m(n - 1, n - 1);
  std::vector<PolyZC> y(n);
  for (std::size_t i = n; i-- > 0;) {
    PolyZC acc = det * m(i, n);
    for (std::size_t j = i + 1; j < n; ++j) acc -= m(i, j) * y[j];
    y[i] = exact_div(acc, m(i, i));
  }
  return {std::move(y), det};
}

std::vector<RatFunc> solve_linear_system(const Matrix<PolyZC>& a, std::span<const PolyZC> b) {
  FractionFreeSolution sol = solve_fraction_free(a, b);
  std::vector<RatFunc> out;
  out.reserve(sol.numerators.size());
  for (PolyZC& y : sol.numerators) out.emplace_back(std::move(y), sol.denominator);
  return out;
}

}  // namespace chromgf
