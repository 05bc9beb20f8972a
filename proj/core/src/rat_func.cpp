#include <chromgf/algebra/rat_func.hpp>

namespace chromgf {

RatFunc::RatFunc(PolyZC num, PolyZC den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw AlgebraError("zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = PolyZC(1);
    return;
  }
  const PolyZC g = bivar_gcd(num_, den_);
  if (!(g == PolyZC(1))) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  Rat k = den_.rational_content();
  if (den_.canonical_leading() < 0) k = -k;
  if (k != 1) {
    const PolyC inv(1 / k);
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw AlgebraError("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::vector<PolyC> series_coefficients(const RatFunc& f, int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  const PolyC d0 = f.den().at_z0();
  if (d0.is_zero()) throw AlgebraError("denominator vanishes at z=0; no power series");
  // num = den * sum p_n z^n  =>  d0 p_n = num_n - sum_{k>=1} den_k p_{n-k}
  std::vector<PolyC> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    PolyC rhs = f.num().z_coeff(n);
    for (int k = 1; k <= n && k <= f.den().z_degree(); ++k) {
      rhs -= f.den().z_coeff(k) * out[static_cast<std::size_t>(n - k)];
    }
    out.push_back(exact_div(rhs, d0));
  }
  return out;
}

}  // namespace chromgf
