#include <chromgf/algebra/linear_solve.hpp>
#include <chromgf/algebra/poly_c.hpp>
#include <chromgf/algebra/poly_zc.hpp>
#include <chromgf/algebra/rat_func.hpp>

#include <doctest.h>

#include <random>

using namespace chromgf;

namespace {

const PolyZC z = PolyZC::z();
const PolyZC c = PolyZC::c();

PolyC random_poly_c(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(-1, max_deg);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rat> cs(static_cast<std::size_t>(deg(rng) + 1));
  for (Rat& a : cs) {
    a = Rat(coef(rng), den(rng));
    a.canonicalize();
  }
  return PolyC(std::move(cs));
}

PolyZC random_poly_zc(std::mt19937& rng, int max_z, int max_c) {
  std::uniform_int_distribution<int> deg(0, max_z);
  std::vector<PolyC> by_z(static_cast<std::size_t>(deg(rng) + 1));
  for (PolyC& p : by_z) p = random_poly_c(rng, max_c);
  return PolyZC(std::move(by_z));
}

bool associates(const PolyZC& a, const PolyZC& b) { return a == b || a == -b; }

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("rational round-trips through its string form") {
  CHECK(to_string(parse_rat("-6/4")) == "-3/2");
  CHECK(parse_rat("12") == 12);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/-2"), std::invalid_argument);
}

TEST_CASE("PolyC arithmetic") {
  const PolyC cm3{-3, 1};
  const PolyC cm4{-4, 1};
  CHECK(cm3 * cm4 == PolyC{12, -7, 1});
  // 2*1 + 3(c-3) + (c-3)(c-4) = c^2 - 4c + 5
  CHECK(PolyC(2) + Rat(3) * cm3 + cm3 * cm4 == PolyC{5, -4, 1});
  const PolyC e{5, -4, 1};
  CHECK((e - e).is_zero());
  CHECK((e - e).degree() == PolyC::kZeroDegree);
  CHECK(PolyC().leading() == 0);
}

TEST_CASE("PolyC exact division") {
  CHECK(exact_div(PolyC{12, -7, 1}, PolyC{-3, 1}) == PolyC{-4, 1});
  CHECK_THROWS_WITH_AS(exact_div(PolyC{1, 0, 1}, PolyC{-1, 1}), "inexact division", AlgebraError);
  CHECK_THROWS_AS(exact_div(PolyC{1}, PolyC()), AlgebraError);
}

TEST_CASE("PolyC gcd is primitive with positive leading coefficient") {
  const PolyC a = PolyC{-1, 1} * PolyC{-2, 1};
  const PolyC b = PolyC{-1, 1} * PolyC{3, 1} * Rat(-7, 2);
  CHECK(gcd(a, b) == PolyC{-1, 1});
  CHECK(gcd(PolyC{1, 1}, PolyC{2, 1}) == PolyC(1));
  CHECK(gcd(PolyC(), PolyC{0, -2}) == PolyC{0, 1});
}

TEST_CASE("falling factorial polynomial") {
  CHECK(falling_factorial_poly(3, 1) == PolyC{-3, 1});
  CHECK(falling_factorial_poly(3, 2) == PolyC{12, -7, 1});
  CHECK(falling_factorial_poly(5, 0) == PolyC(1));
  CHECK(falling_factorial_poly(0, 3) == PolyC{0, 2, -3, 1});
}

TEST_CASE("falling factorial values at integers") {
  for (unsigned s = 0; s <= 5; ++s) {
    for (unsigned gamma = 0; gamma <= 5; ++gamma) {
      const PolyC p = falling_factorial_poly(s, gamma);
      CHECK(p.degree() == static_cast<int>(gamma));
      CHECK(p.is_monic());
      for (unsigned j = 0; j <= 4; ++j) {
        // (gamma + j)! / j!
        Int expected = 1;
        for (unsigned i = j + 1; i <= gamma + j; ++i) expected *= i;
        CHECK(p.eval(Rat(s + gamma + j)) == Rat(expected));
      }
      for (unsigned x = s; x < s + gamma; ++x) CHECK(p.eval(Rat(x)) == 0);
    }
  }
}

TEST_CASE("polynomial ring identities hold on random inputs") {
  std::mt19937 rng(20110330);
  for (int trial = 0; trial < 200; ++trial) {
    const PolyC a = random_poly_c(rng, 5);
    const PolyC b = random_poly_c(rng, 4);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) {
      CHECK(exact_div(a * b, b) == a);
      const auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
    const PolyZC x = random_poly_zc(rng, 3, 3);
    const PolyZC y = random_poly_zc(rng, 2, 3);
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK(exact_div(x * y, y) == x);
  }
}

TEST_CASE("PolyZC canonical order and leading coefficient") {
  const PolyZC den = PolyZC(1) - (c - PolyZC(1)) * z;
  const auto terms = den.terms();
  REQUIRE(terms.size() == 3);
  CHECK(terms[0] == TermZC{0, 0, Rat(1)});
  CHECK(terms[1] == TermZC{1, 1, Rat(-1)});
  CHECK(terms[2] == TermZC{1, 0, Rat(1)});
  CHECK(den.canonical_leading() == 1);
  CHECK((c - PolyZC(1)).canonical_leading() == 1);
  CHECK(PolyZC::from_terms({{1, 1, Rat(-1)}, {0, 0, Rat(1)}, {1, 0, Rat(1)}}) == den);
}

TEST_CASE("PolyZC exact division rejects non-divisors") {
  CHECK_THROWS_WITH_AS(exact_div(z + c, z - c), "inexact division", AlgebraError);
  CHECK(exact_div(z * z - c * c, z - c) == z + c);
}

TEST_CASE("pseudo-remainder matches its defining identity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const PolyZC a = random_poly_zc(rng, 4, 2);
    const PolyZC b = random_poly_zc(rng, 2, 2);
    if (b.z_degree() < 1 || a.z_degree() < b.z_degree()) continue;
    const PolyZC r = pseudo_remainder(a, b);
    CHECK(r.z_degree() < b.z_degree());
    // lc(b)^(da-db+1) a - r must be a multiple of b.
    PolyC scale(1);
    for (int i = 0; i < a.z_degree() - b.z_degree() + 1; ++i) scale *= b.lc_z();
    CHECK_NOTHROW(exact_div(a * scale - r, b));
  }
}

TEST_CASE("bivariate gcd examples") {
  const PolyZC cm1 = c - PolyZC(1);
  CHECK(bivar_gcd(z * cm1, cm1 * cm1) == cm1);
  CHECK(bivar_gcd(z + PolyZC(1), c + PolyZC(1)) == PolyZC(1));
  const PolyZC geometric = PolyZC(1) - cm1 * z;
  CHECK(bivar_gcd((PolyZC(1) + z) * geometric, geometric * geometric) == geometric);
  CHECK_THROWS_AS(bivar_gcd(PolyZC(), PolyZC()), AlgebraError);
  CHECK(bivar_gcd(PolyZC(), cm1 * Rat(-3)) == cm1);
}

TEST_CASE("bivariate gcd recovers planted common factors") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const PolyZC g = random_poly_zc(rng, 2, 2);
    const PolyZC u = random_poly_zc(rng, 2, 2);
    const PolyZC v = random_poly_zc(rng, 2, 2);
    if (g.is_zero() || u.is_zero() || v.is_zero()) continue;
    const PolyZC a = g * u;
    const PolyZC b = g * v;
    const PolyZC d = bivar_gcd(a, b);
    // d divides both, g divides d, and the cofactors are coprime.
    const PolyZC ca = exact_div(a, d);
    const PolyZC cb = exact_div(b, d);
    CHECK_NOTHROW(exact_div(d, g));
    CHECK(bivar_gcd(ca, cb) == PolyZC(1));
    CHECK(d.canonical_leading() > 0);
    CHECK(d.rational_content() == 1);
    CHECK(associates(bivar_gcd(b, a), d));
  }
}

TEST_CASE("RatFunc normalisation") {
  const PolyZC cm1 = c - PolyZC(1);
  const RatFunc f(z * cm1 * Rat(2), cm1 * cm1 * Rat(-4));
  CHECK(f.num() == -(z * Rat(1, 2)));
  CHECK(f.den() == cm1);
  CHECK(RatFunc(PolyZC(), c).den() == PolyZC(1));
  CHECK_THROWS_AS(RatFunc(c, PolyZC()), AlgebraError);
  // Sum and difference stay reduced.
  const RatFunc g(PolyZC(1), PolyZC(1) - z);
  CHECK((g - g).is_zero());
  CHECK(g * RatFunc(PolyZC(1) - z) == RatFunc(PolyZC(1)));
  CHECK(g / g == RatFunc(PolyZC(1)));
}

TEST_CASE("series coefficients") {
  const PolyZC cm1 = c - PolyZC(1);
  const auto geom = series_coefficients(RatFunc(PolyZC(1), PolyZC(1) - z), 3);
  CHECK(geom == std::vector<PolyC>{1, 1, 1, 1});

  const auto path = series_coefficients(RatFunc(PolyZC(1) + z, PolyZC(1) - cm1 * z), 2);
  CHECK(path == std::vector<PolyC>{PolyC(1), PolyC{0, 1}, PolyC{0, -1, 1}});

  const auto shifted = series_coefficients(RatFunc(c * z, PolyZC(1) - cm1 * z), 3);
  CHECK(shifted == std::vector<PolyC>{PolyC(), PolyC{0, 1}, PolyC{0, -1, 1}, PolyC{0, 1, -2, 1}});

  CHECK_THROWS_AS(series_coefficients(RatFunc(PolyZC(1), z), 2), AlgebraError);
}

TEST_CASE("series coefficients reproduce the numerator") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    PolyZC den = random_poly_zc(rng, 3, 2);
    std::vector<PolyC> by_z(den.by_z().begin(), den.by_z().end());
    if (by_z.empty()) by_z.emplace_back();
    by_z[0] = PolyC(Rat(trial % 5 + 1));
    den = PolyZC(std::move(by_z));
    const PolyZC num = random_poly_zc(rng, 3, 3);
    const RatFunc f(num, den);
    const int order = 6;
    const auto p = series_coefficients(f, order);
    PolyZC truncated;
    for (int n = 0; n <= order; ++n) truncated += PolyZC(p[static_cast<std::size_t>(n)]) * [&] {
      PolyZC zn(1);
      for (int i = 0; i < n; ++i) zn = zn * z;
      return zn;
    }();
    const PolyZC residual = truncated * f.den() - f.num();
    for (int n = 0; n <= order; ++n) CHECK(residual.z_coeff(n).is_zero());
  }
}

TEST_CASE("linear solve: identity and single equation") {
  Matrix<PolyZC> id(2, 2);
  id(0, 0) = PolyZC(1);
  id(1, 1) = PolyZC(1);
  const std::vector<PolyZC> b{z, c};
  const auto x = solve_linear_system(id, b);
  CHECK(x[0] == RatFunc(z));
  CHECK(x[1] == RatFunc(c));

  Matrix<PolyZC> one(1, 1);
  one(0, 0) = PolyZC(1) - (c - PolyZC(1)) * z;
  const std::vector<PolyZC> rhs{c * z};
  const auto y = solve_linear_system(one, rhs);
  CHECK(y[0] == RatFunc(c * z, PolyZC(1) - (c - PolyZC(1)) * z));
}

TEST_CASE("linear solve: singular and malformed systems") {
  Matrix<PolyZC> a(2, 2);
  a(0, 0) = z;
  a(0, 1) = c;
  a(1, 0) = z * Rat(2);
  a(1, 1) = c * Rat(2);
  const std::vector<PolyZC> b{PolyZC(1), PolyZC(2)};
  CHECK_THROWS_WITH_AS(solve_linear_system(a, b), "singular system", AlgebraError);
  const std::vector<PolyZC> short_b{PolyZC(1)};
  CHECK_THROWS_AS(solve_linear_system(a, short_b), std::invalid_argument);
}

TEST_CASE("linear solve: multiply-back on random systems") {
  std::mt19937 rng(2011);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Matrix<PolyZC> a(n, n);
    std::vector<PolyZC> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = random_poly_zc(rng, 1, 2);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = random_poly_zc(rng, 1, 2);
      a(i, i) += PolyZC(1) + z * Rat(static_cast<long>(i + 1));  // keep det != 0 generically
    }
    std::vector<RatFunc> x;
    try {
      x = solve_linear_system(a, b);
    } catch (const AlgebraError&) {
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      RatFunc row;
      for (std::size_t j = 0; j < n; ++j) row = row + RatFunc(a(i, j)) * x[j];
      CHECK(row == RatFunc(b[i]));
    }
  }
}

}  // TEST_SUITE
