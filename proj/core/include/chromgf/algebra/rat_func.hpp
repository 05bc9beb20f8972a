#pragma once

#include <chromgf/algebra/poly_zc.hpp>

#include <vector>

namespace chromgf {

/// Reduced quotient of two bivariate polynomials.
///
/// After construction the numerator and denominator are coprime, the
/// denominator has coprime integer coefficients and a positive canonical
/// leading coefficient, and a zero value is stored as 0/1.  Two equal
/// rational functions therefore have identical representations.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(PolyZC value) : num_(std::move(value)), den_(1) { normalize(); }  // NOLINT
  /// Throws AlgebraError if `den` is zero.
  RatFunc(PolyZC num, PolyZC den);

  const PolyZC& num() const { return num_; }
  const PolyZC& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws AlgebraError when b is zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  void normalize();

  PolyZC num_;
  PolyZC den_;
};

/// Power-series coefficients of z^0..z^order.  Requires den(z=0) != 0;
/// throws AlgebraError otherwise, or if a coefficient is not a polynomial
/// in c.
std::vector<PolyC> series_coefficients(const RatFunc& f, int order);

}  // namespace chromgf
