#pragma once

#include <chromgf/algebra/poly_c.hpp>

#include <vector>

namespace chromgf {

/// One nonzero term coeff * z^z_deg * c^c_deg.
struct TermZC {
  int z_deg = 0;
  int c_deg = 0;
  Rat coeff;

  friend bool operator==(const TermZC&, const TermZC&) = default;
};

/// Bivariate polynomial in z and c over Q, held as a polynomial in z whose
/// coefficients are PolyC values.
///
/// Canonical term order: ascending z-degree, then descending c-degree.  The
/// first term in that order is the "leading" term used for sign
/// normalisation, so 1-(c-1)z and c-1 are both canonical.
class PolyZC {
 public:
  PolyZC() = default;
  PolyZC(PolyC constant_in_z);  // NOLINT(google-explicit-constructor)
  PolyZC(Rat constant) : PolyZC(PolyC(std::move(constant))) {}  // NOLINT
  PolyZC(long constant) : PolyZC(PolyC(constant)) {}  // NOLINT
  PolyZC(int constant) : PolyZC(PolyC(constant)) {}   // NOLINT

  /// From coefficients of z^0, z^1, ...
  explicit PolyZC(std::vector<PolyC> by_z);
  /// From arbitrary terms; like terms are summed and zeros dropped.
  static PolyZC from_terms(const std::vector<TermZC>& terms);

  static PolyZC z();
  static PolyZC c();

  /// -1 for the zero polynomial.
  int z_degree() const { return static_cast<int>(by_z_.size()) - 1; }
  /// Maximum c-degree over all terms; -1 for the zero polynomial.
  int c_degree() const;
  bool is_zero() const { return by_z_.empty(); }

  /// Coefficient of z^k as a polynomial in c (zero outside range).
  PolyC z_coeff(int k) const;
  /// Leading coefficient with respect to z.
  PolyC lc_z() const { return is_zero() ? PolyC() : by_z_.back(); }
  std::span<const PolyC> by_z() const { return by_z_; }

  Rat coeff(int z_deg, int c_deg) const;
  /// Nonzero terms in canonical order.
  std::vector<TermZC> terms() const;
  /// Coefficient of the first term in canonical order; 0 if zero.
  Rat canonical_leading() const;

  /// Value at z = 0.
  PolyC at_z0() const { return z_coeff(0); }
  /// Substitute c := value, yielding coefficients of z.
  std::vector<Rat> eval_c(const Rat& value) const;

  /// Positive rational content: this / content() has coprime integer
  /// coefficients.
  Rat rational_content() const;
  /// gcd in Q[c] of the z-coefficients (primitive integer, positive lc).
  PolyC content_z() const;

  /// Scaled to coprime integer coefficients with positive canonical
  /// leading coefficient.
  PolyZC normalized_scalar() const;

  PolyZC operator-() const;
  PolyZC& operator+=(const PolyZC& rhs);
  PolyZC& operator-=(const PolyZC& rhs);
  PolyZC& operator*=(const PolyC& rhs);

  friend PolyZC operator+(PolyZC lhs, const PolyZC& rhs) { return lhs += rhs; }
  friend PolyZC operator-(PolyZC lhs, const PolyZC& rhs) { return lhs -= rhs; }
  friend PolyZC operator*(const PolyZC& lhs, const PolyZC& rhs);
  friend PolyZC operator*(PolyZC lhs, const PolyC& rhs) { return lhs *= rhs; }
  friend PolyZC operator*(const PolyC& lhs, PolyZC rhs) { return rhs *= lhs; }
  friend PolyZC operator*(PolyZC lhs, const Rat& rhs) { return lhs *= PolyC(rhs); }
  friend PolyZC operator*(const Rat& lhs, PolyZC rhs) { return rhs *= PolyC(lhs); }
  friend bool operator==(const PolyZC&, const PolyZC&) = default;

 private:
  void trim();

  std::vector<PolyC> by_z_;
};

/// Exact quotient in Q[z,c]; throws AlgebraError("inexact division").
PolyZC exact_div(const PolyZC& dividend, const PolyZC& divisor);
/// Exact quotient by a polynomial in c alone.
PolyZC exact_div(const PolyZC& dividend, const PolyC& divisor);

/// Pseudo-remainder with respect to z:
/// lc_z(b)^(deg a - deg b + 1) * a mod b, computed without division.
PolyZC pseudo_remainder(const PolyZC& a, const PolyZC& b);

/// Greatest common divisor in Q[z,c], primitive with integer coefficients
/// and positive canonical leading coefficient.  Throws AlgebraError when
/// both arguments are zero.
PolyZC bivar_gcd(const PolyZC& a, const PolyZC& b);

}  // namespace chromgf
