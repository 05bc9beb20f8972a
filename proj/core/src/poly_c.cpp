#include <chromgf/algebra/poly_c.hpp>

#include <algorithm>

namespace chromgf {

PolyC::PolyC(Rat constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

PolyC::PolyC(std::vector<Rat> ascending) : coeffs_(std::move(ascending)) { trim(); }

PolyC::PolyC(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long a : ascending) coeffs_.emplace_back(a);
  trim();
}

PolyC PolyC::monomial(Rat coeff, int degree) {
  if (coeff == 0) return {};
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return PolyC(std::move(c));
}

void PolyC::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat PolyC::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rat PolyC::leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

Rat PolyC::eval(const Rat& at) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Rat PolyC::content() const {
  if (is_zero()) return Rat(0);
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const Rat& a : coeffs_) {
    if (a == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), a.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den_mpz_t());
  }
  Rat k(num_gcd, den_lcm);
  k.canonicalize();
  return k;
}

PolyC PolyC::primitive() const {
  if (is_zero()) return {};
  Rat k = content();
  if (leading() < 0) k = -k;
  PolyC out = *this;
  for (Rat& a : out.coeffs_) a /= k;
  return out;
}

bool PolyC::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& a) { return is_integer(a); });
}

PolyC PolyC::operator-() const {
  PolyC out = *this;
  for (Rat& a : out.coeffs_) a = -a;
  return out;
}

PolyC& PolyC::operator+=(const PolyC& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

PolyC& PolyC::operator-=(const PolyC& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

PolyC& PolyC::operator*=(const PolyC& rhs) {
  *this = *this * rhs;
  return *this;
}

PolyC& PolyC::operator*=(const Rat& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rat& a : coeffs_) a *= rhs;
  return *this;
}

PolyC operator*(const PolyC& lhs, const PolyC& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (lhs.has_integer_coeffs() && rhs.has_integer_coeffs()) {
    // Integer fast path: accumulate numerators in place.
    std::vector<Rat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    std::vector<Int> acc(out.size());
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      const mpz_srcptr a = lhs.coeffs_[i].get_num_mpz_t();
      if (mpz_sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        mpz_addmul(acc[i + j].get_mpz_t(), a, rhs.coeffs_[j].get_num_mpz_t());
      }
    }
    for (std::size_t k = 0; k < out.size(); ++k) mpz_swap(out[k].get_num_mpz_t(), acc[k].get_mpz_t());
    return PolyC(std::move(out));
  }
  std::vector<Rat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return PolyC(std::move(out));
}

std::pair<PolyC, PolyC> divmod(const PolyC& dividend, const PolyC& divisor) {
  if (divisor.is_zero()) throw AlgebraError("division by zero polynomial");
  const int db = divisor.degree();
  if (dividend.degree() < db) return {PolyC(), dividend};
  std::vector<Rat> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  std::vector<Rat> quot(static_cast<std::size_t>(dividend.degree() - db) + 1);
  const Rat lead = divisor.leading();
  const auto dc = divisor.coeffs();
  for (int k = dividend.degree() - db; k >= 0; --k) {
    const Rat q = rem[static_cast<std::size_t>(k + db)] / lead;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * dc[static_cast<std::size_t>(j)];
  }
  return {PolyC(std::move(quot)), PolyC(std::move(rem))};
}

PolyC exact_div(const PolyC& dividend, const PolyC& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  if (!r.is_zero()) throw AlgebraError("inexact division");
  return q;
}

PolyC gcd(const PolyC& a, const PolyC& b) {
  PolyC x = a.primitive();
  PolyC y = b.primitive();
  while (!y.is_zero()) {
    PolyC r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

PolyC falling_factorial_poly(unsigned s, unsigned gamma) {
  PolyC out(1);
  for (unsigned i = 0; i < gamma; ++i) {
    out *= PolyC{-static_cast<long>(s + i), 1};
  }
  return out;
}

}  // namespace chromgf
