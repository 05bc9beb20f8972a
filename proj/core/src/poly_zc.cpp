#include <chromgf/algebra/poly_zc.hpp>

#include <algorithm>
#include <map>

namespace chromgf {

namespace {

// lhs += sign * factor * z^shift * rhs
void add_scaled_shifted(std::vector<PolyC>& lhs, const PolyC& factor, int shift, const PolyZC& rhs, bool subtract) {
  const auto rb = rhs.by_z();
  const std::size_t need = rb.size() + static_cast<std::size_t>(shift);
  if (lhs.size() < need) lhs.resize(need);
  for (std::size_t k = 0; k < rb.size(); ++k) {
    if (rb[k].is_zero()) continue;
    PolyC term = rb[k] * factor;
    if (subtract) {
      lhs[k + static_cast<std::size_t>(shift)] -= term;
    } else {
      lhs[k + static_cast<std::size_t>(shift)] += term;
    }
  }
}

PolyC power(const PolyC& base, int exp) {
  PolyC out(1);
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

PolyZC::PolyZC(PolyC constant_in_z) {
  if (!constant_in_z.is_zero()) by_z_.push_back(std::move(constant_in_z));
}

PolyZC::PolyZC(std::vector<PolyC> by_z) : by_z_(std::move(by_z)) { trim(); }

PolyZC PolyZC::from_terms(const std::vector<TermZC>& terms) {
  std::map<std::pair<int, int>, Rat> acc;
  for (const TermZC& t : terms) {
    if (t.z_deg < 0 || t.c_deg < 0) throw std::invalid_argument("negative exponent in term");
    acc[{t.z_deg, t.c_deg}] += t.coeff;
  }
  std::vector<PolyC> by_z;
  for (const auto& [key, value] : acc) {
    const auto zi = static_cast<std::size_t>(key.first);
    if (by_z.size() <= zi) by_z.resize(zi + 1);
    by_z[zi] += PolyC::monomial(value, key.second);
  }
  return PolyZC(std::move(by_z));
}

PolyZC PolyZC::z() { return PolyZC(std::vector<PolyC>{PolyC(), PolyC(1)}); }
PolyZC PolyZC::c() { return PolyZC(PolyC::var()); }

void PolyZC::trim() {
  while (!by_z_.empty() && by_z_.back().is_zero()) by_z_.pop_back();
}

int PolyZC::c_degree() const {
  int d = -1;
  for (const PolyC& p : by_z_) d = std::max(d, p.degree());
  return d;
}

PolyC PolyZC::z_coeff(int k) const {
  if (k < 0 || k > z_degree()) return {};
  return by_z_[static_cast<std::size_t>(k)];
}

Rat PolyZC::coeff(int z_deg, int c_deg) const { return z_coeff(z_deg).coeff(c_deg); }

std::vector<TermZC> PolyZC::terms() const {
  std::vector<TermZC> out;
  for (std::size_t k = 0; k < by_z_.size(); ++k) {
    const auto cs = by_z_[k].coeffs();
    for (std::size_t j = cs.size(); j-- > 0;) {
      if (cs[j] != 0) out.push_back({static_cast<int>(k), static_cast<int>(j), cs[j]});
    }
  }
  return out;
}

Rat PolyZC::canonical_leading() const {
  for (const PolyC& p : by_z_) {
    if (!p.is_zero()) return p.leading();
  }
  return Rat(0);
}

std::vector<Rat> PolyZC::eval_c(const Rat& value) const {
  std::vector<Rat> out;
  out.reserve(by_z_.size());
  for (const PolyC& p : by_z_) out.push_back(p.eval(value));
  return out;
}

Rat PolyZC::rational_content() const {
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const PolyC& p : by_z_) {
    for (const Rat& a : p.coeffs()) {
      if (a == 0) continue;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), a.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den_mpz_t());
    }
  }
  if (num_gcd == 0) return Rat(0);
  Rat k(num_gcd, den_lcm);
  k.canonicalize();
  return k;
}

PolyC PolyZC::content_z() const {
  PolyC g;
  for (const PolyC& p : by_z_) {
    g = gcd(g, p);
    if (g.degree() == 0) break;
  }
  return g;
}

PolyZC PolyZC::normalized_scalar() const {
  if (is_zero()) return {};
  Rat k = rational_content();
  if (canonical_leading() < 0) k = -k;
  PolyZC out = *this;
  const Rat inv = 1 / k;
  for (PolyC& p : out.by_z_) p *= inv;
  return out;
}

PolyZC PolyZC::operator-() const {
  PolyZC out = *this;
  for (PolyC& p : out.by_z_) p = -p;
  return out;
}

PolyZC& PolyZC::operator+=(const PolyZC& rhs) {
  if (rhs.by_z_.size() > by_z_.size()) by_z_.resize(rhs.by_z_.size());
  for (std::size_t k = 0; k < rhs.by_z_.size(); ++k) by_z_[k] += rhs.by_z_[k];
  trim();
  return *this;
}

PolyZC& PolyZC::operator-=(const PolyZC& rhs) {
  if (rhs.by_z_.size() > by_z_.size()) by_z_.resize(rhs.by_z_.size());
  for (std::size_t k = 0; k < rhs.by_z_.size(); ++k) by_z_[k] -= rhs.by_z_[k];
  trim();
  return *this;
}

PolyZC& PolyZC::operator*=(const PolyC& rhs) {
  if (rhs.is_zero()) {
    by_z_.clear();
    return *this;
  }
  for (PolyC& p : by_z_) p *= rhs;
  return *this;
}

PolyZC operator*(const PolyZC& lhs, const PolyZC& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<PolyC> out(lhs.by_z_.size() + rhs.by_z_.size() - 1);
  for (std::size_t i = 0; i < lhs.by_z_.size(); ++i) {
    if (lhs.by_z_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.by_z_.size(); ++j) out[i + j] += lhs.by_z_[i] * rhs.by_z_[j];
  }
  return PolyZC(std::move(out));
}

PolyZC exact_div(const PolyZC& dividend, const PolyZC& divisor) {
  if (divisor.is_zero()) throw AlgebraError("division by zero polynomial");
  if (dividend.is_zero()) return {};
  const int db = divisor.z_degree();
  if (dividend.z_degree() < db) throw AlgebraError("inexact division");
  const PolyC lead = divisor.lc_z();
  std::vector<PolyC> quot(static_cast<std::size_t>(dividend.z_degree() - db) + 1);
  std::vector<PolyC> rem(dividend.by_z().begin(), dividend.by_z().end());
  for (int k = dividend.z_degree() - db; k >= 0; --k) {
    const PolyC& top = rem[static_cast<std::size_t>(k + db)];
    if (top.is_zero()) continue;
    PolyC q = exact_div(top, lead);
    add_scaled_shifted(rem, q, k, divisor, /*subtract=*/true);
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const PolyC& r : rem) {
    if (!r.is_zero()) throw AlgebraError("inexact division");
  }
  return PolyZC(std::move(quot));
}

PolyZC exact_div(const PolyZC& dividend, const PolyC& divisor) {
  if (divisor.is_zero()) throw AlgebraError("division by zero polynomial");
  std::vector<PolyC> out;
  out.reserve(dividend.by_z().size());
  for (const PolyC& p : dividend.by_z()) out.push_back(p.is_zero() ? PolyC() : exact_div(p, divisor));
  return PolyZC(std::move(out));
}

PolyZC pseudo_remainder(const PolyZC& a, const PolyZC& b) {
  if (b.is_zero()) throw AlgebraError("pseudo-remainder by zero polynomial");
  const int db = b.z_degree();
  if (a.z_degree() < db) return a;
  const PolyC lb = b.lc_z();
  int e = a.z_degree() - db + 1;
  PolyZC r = a;
  while (!r.is_zero() && r.z_degree() >= db) {
    const int shift = r.z_degree() - db;
    const PolyC lr = r.lc_z();
    std::vector<PolyC> next(r.by_z().begin(), r.by_z().end());
    for (PolyC& p : next) p *= lb;
    add_scaled_shifted(next, lr, shift, b, /*subtract=*/true);
    r = PolyZC(std::move(next));
    --e;
  }
  if (e > 0) r *= power(lb, e);
  return r;
}

PolyZC bivar_gcd(const PolyZC& a, const PolyZC& b) {
  if (a.is_zero() && b.is_zero()) throw AlgebraError("gcd of two zero polynomials");
  if (a.is_zero()) return b.normalized_scalar();
  if (b.is_zero()) return a.normalized_scalar();

  const PolyC ca = a.content_z();
  const PolyC cb = b.content_z();
  const PolyC content = gcd(ca, cb);
  PolyZC x = exact_div(a, ca);
  PolyZC y = exact_div(b, cb);
  if (x.z_degree() < y.z_degree()) std::swap(x, y);

  // Subresultant remainder sequence over Q[c][z].
  PolyZC primitive_gcd(1);
  if (y.z_degree() > 0) {
    PolyC g(1);
    PolyC h(1);
    while (true) {
      const int delta = x.z_degree() - y.z_degree();
      PolyZC r = pseudo_remainder(x, y);
      if (r.is_zero()) {
        primitive_gcd = y;
        break;
      }
      if (r.z_degree() == 0) break;
      x = std::move(y);
      y = exact_div(r, g * power(h, delta));
      g = x.lc_z();
      if (delta > 0) h = exact_div(power(g, delta), power(h, delta - 1));
    }
    primitive_gcd = exact_div(primitive_gcd, primitive_gcd.content_z());
  }
  return (primitive_gcd * content).normalized_scalar();
}

}  // namespace chromgf
