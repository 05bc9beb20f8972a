#pragma once

#include <chromgf/algebra/rational.hpp>

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace chromgf {

/// Dense univariate polynomial in the colour variable c over Q.
///
/// Coefficients are stored by ascending degree and trimmed so the highest
/// stored coefficient is nonzero; the zero polynomial stores nothing and
/// reports degree kZeroDegree.
class PolyC {
 public:
  static constexpr int kZeroDegree = -1;

  PolyC() = default;
  PolyC(Rat constant);  // NOLINT(google-explicit-constructor)
  PolyC(long constant) : PolyC(Rat(constant)) {}  // NOLINT
  PolyC(int constant) : PolyC(Rat(constant)) {}   // NOLINT

  /// From ascending coefficients a0, a1, ... (trailing zeros dropped).
  explicit PolyC(std::vector<Rat> ascending);
  PolyC(std::initializer_list<long> ascending);

  /// The monomial coeff * c^degree.
  static PolyC monomial(Rat coeff, int degree);
  /// The polynomial c.
  static PolyC var() { return monomial(Rat(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of c^i; zero outside the stored range.
  Rat coeff(int i) const;
  /// Coefficient of the highest power; 0 for the zero polynomial.
  Rat leading() const;
  std::span<const Rat> coeffs() const { return coeffs_; }

  Rat eval(const Rat& at) const;

  /// Positive rational k such that this / k has coprime integer
  /// coefficients. Zero for the zero polynomial.
  Rat content() const;
  /// this / content(), with the leading coefficient made positive.
  PolyC primitive() const;
  bool has_integer_coeffs() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  PolyC operator-() const;
  PolyC& operator+=(const PolyC& rhs);
  PolyC& operator-=(const PolyC& rhs);
  PolyC& operator*=(const PolyC& rhs);
  PolyC& operator*=(const Rat& rhs);

  friend PolyC operator+(PolyC lhs, const PolyC& rhs) { return lhs += rhs; }
  friend PolyC operator-(PolyC lhs, const PolyC& rhs) { return lhs -= rhs; }
  friend PolyC operator*(const PolyC& lhs, const PolyC& rhs);
  friend PolyC operator*(PolyC lhs, const Rat& rhs) { return lhs *= rhs; }
  friend PolyC operator*(const Rat& lhs, PolyC rhs) { return rhs *= lhs; }
  friend bool operator==(const PolyC& lhs, const PolyC& rhs) = default;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

/// Quotient and remainder over Q[c]; throws AlgebraError when divisor is 0.
std::pair<PolyC, PolyC> divmod(const PolyC& dividend, const PolyC& divisor);

/// Quotient of an exact division; throws AlgebraError("inexact division")
/// if the remainder is nonzero.
PolyC exact_div(const PolyC& dividend, const PolyC& divisor);

/// Primitive integer gcd with positive leading coefficient. gcd(0, 0) = 0.
PolyC gcd(const PolyC& a, const PolyC& b);

/// (c-s)(c-s-1)...(c-s-gamma+1): number of injective assignments of gamma
/// classes into the c-s colours not in a palette of size s.
PolyC falling_factorial_poly(unsigned s, unsigned gamma);

}  // namespace chromgf
