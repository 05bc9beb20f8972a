#include <chromgf/oracle.hpp>

#include <doctest.h>

#include "test_support.hpp"

using namespace chromgf;

TEST_SUITE("oracle") {

TEST_CASE("count_proper_colorings examples") {
  CHECK(count_proper_colorings(testing::triangle(), 3) == 6);
  CHECK(count_proper_colorings(path_graph(3), 2) == 2);
  const Graph grid = build_layered_graph(path_graph(3), monogamy_connector(3), 2);
  CHECK(count_proper_colorings(grid, 2) == 2);
  CHECK(count_proper_colorings(edgeless_graph(3), 0) == 0);
  CHECK(count_proper_colorings(edgeless_graph(3), 4) == 64);
}

TEST_CASE("backtracking count agrees with exhaustive enumeration") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 6;
    const Graph h = testing::random_graph(rng, n, 0.4);
    Int previous = 0;
    for (unsigned k = 0; k <= 5; ++k) {
      const Int count = count_proper_colorings(h, k);
      CHECK(count == count_proper_colorings_exhaustive(h, k));
      CHECK(count >= previous);
      previous = count;
    }
  }
}

TEST_CASE("chromatic polynomial examples") {
  CHECK(chromatic_poly_bruteforce(path_graph(3)) == PolyC{0, 1, -2, 1});
  CHECK(chromatic_poly_bruteforce(testing::triangle()) == PolyC{0, 2, -3, 1});
  const Graph square = build_layered_graph(path_graph(2), monogamy_connector(2), 2);
  CHECK(chromatic_poly_bruteforce(square) == PolyC{0, -3, 6, -4, 1});
}

TEST_CASE("chromatic polynomials of paths and cycles") {
  const PolyC cm1{-1, 1};
  for (int n = 1; n <= 6; ++n) {
    PolyC path = PolyC{0, 1};
    for (int i = 1; i < n; ++i) path *= cm1;
    CHECK(chromatic_poly_bruteforce(path_graph(n)) == path);
  }
  for (int n = 3; n <= 6; ++n) {
    PolyC cycle(1);
    for (int i = 0; i < n; ++i) cycle *= cm1;
    cycle += (n % 2 == 0 ? cm1 : -cm1);
    CHECK(chromatic_poly_bruteforce(testing::cycle_graph(n)) == cycle);
  }
}

TEST_CASE("interpolated polynomial reproduces its sample counts") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 8;
    const Graph h = testing::random_graph(rng, n);
    const PolyC p = chromatic_poly_bruteforce(h);
    CHECK(p.is_monic());
    CHECK(p.degree() == n);
    CHECK(p.has_integer_coeffs());
    for (int k = 0; k <= n; ++k) CHECK(p.eval(Rat(k)) == Rat(count_proper_colorings(h, static_cast<unsigned>(k))));
  }
}

TEST_CASE("interpolation through naturals") {
  CHECK(interpolate_at_naturals({Rat(0), Rat(0), Rat(2), Rat(18), Rat(84)}) == PolyC{0, -3, 6, -4, 1});
  CHECK(interpolate_at_naturals({}).is_zero());
  CHECK(interpolate_at_naturals({Rat(7)}) == PolyC(7));
}

TEST_CASE("size guard") {
  CHECK_THROWS_WITH_AS(chromatic_poly_bruteforce(path_graph(13)), "oracle size limit", OracleLimitError);
  CHECK_THROWS_AS(verify_series(path_graph(4), monogamy_connector(4), 4), OracleLimitError);
  CHECK_THROWS_AS(verify_series(path_graph(2), monogamy_connector(2), 0), std::invalid_argument);
}

TEST_CASE("verify_series examples") {
  CHECK(verify_series(path_graph(2), monogamy_connector(2), 4).passed());
  CHECK(verify_series(path_graph(3), monogamy_connector(3), 3).passed());
  const VerificationReport independent = verify_series(edgeless_graph(2), Connector(2, {}), 3);
  CHECK(independent.passed());
  REQUIRE(independent.checks.size() == 3);
  for (const SeriesCheck& check : independent.checks) {
    CHECK(check.actual == PolyC::monomial(Rat(1), 2 * check.layers));
  }
}

}  // TEST_SUITE
