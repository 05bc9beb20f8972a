#include <chromgf/oracle.hpp>
#include <chromgf/transfer.hpp>

#include <doctest.h>

#include "test_support.hpp"

#include <algorithm>

using namespace chromgf;

namespace {

const CanonState k121({1, 2, 1});
const CanonState k123({1, 2, 3});

// Proper colourings of a new layer of g with `colors` colours below the
// concrete layer `prev` (colour of vertex v is prev[v]).
long brute_force_row(const Graph& g, const Connector& c, const CanonState& prev, int colors) {
  const int m = g.vertex_count();
  std::vector<int> col(static_cast<std::size_t>(m), 1);
  long total = 0;
  while (true) {
    auto at = [&](int v) { return col[static_cast<std::size_t>(v - 1)]; };
    const bool proper = std::none_of(g.edges().begin(), g.edges().end(),
                                     [&](const Edge& e) { return at(e.first) == at(e.second); }) &&
                        std::none_of(c.pairs().begin(), c.pairs().end(),
                                     [&](const LinkPair& p) { return prev[p.first] == at(p.second); });
    total += proper;
    std::size_t i = 0;
    while (i < col.size() && ++col[i] > colors) col[i++] = 1;
    if (i == col.size()) break;
  }
  return total;
}

}  // namespace

TEST_SUITE("transfer") {

TEST_CASE("forbidden sets") {
  const Connector mono = monogamy_connector(3);
  CHECK(forbidden_sets(k123, k121, mono) == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(forbidden_sets(k121, k121, mono) == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(forbidden_sets(k123, k123, Connector(3, {})) == std::vector<std::vector<int>>{{}, {}, {}});
  CHECK_THROWS_AS(forbidden_sets(k123, k121, monogamy_connector(2)), std::invalid_argument);
}

TEST_CASE("option sets complement the forbidden colours") {
  const OptionSets opts = option_sets(k123, k121, monogamy_connector(3));
  CHECK(opts.old_palette == 3);
  CHECK(opts.allowed_old == std::vector<std::vector<int>>{{2}, {1, 3}});
}

TEST_CASE("transfer entries for the width-3 grid") {
  const Connector mono = monogamy_connector(3);
  CHECK(transfer_entry(k123, k121, mono) == PolyC{5, -4, 1});
  CHECK(transfer_entry(k121, k121, mono) == PolyC{3, -3, 1});
  CHECK(transfer_entry(k121, k123, mono) == PolyC{-10, 13, -6, 1});
  CHECK(transfer_entry(k123, k123, mono) == PolyC{-13, 14, -6, 1});
}

TEST_CASE("single-vertex layers") {
  CHECK(transfer_entry(CanonState({1}), CanonState({1}), monogamy_connector(1)) == PolyC{-1, 1});
  const TransferMatrix joined = transfer_matrix(path_graph(1), monogamy_connector(1));
  REQUIRE(joined.size() == 1);
  CHECK(joined.entries(0, 0) == PolyC{-1, 1});
  const TransferMatrix free = transfer_matrix(edgeless_graph(1), Connector(1, {}));
  CHECK(free.entries(0, 0) == PolyC{0, 1});
}

TEST_CASE("transfer matrix for the width-3 grid") {
  const TransferMatrix tm = transfer_matrix(path_graph(3), monogamy_connector(3));
  REQUIRE(tm.states == std::vector<CanonState>{k121, k123});
  CHECK(tm.entries(0, 0) == PolyC{3, -3, 1});
  CHECK(tm.entries(0, 1) == PolyC{-10, 13, -6, 1});
  CHECK(tm.entries(1, 0) == PolyC{5, -4, 1});
  CHECK(tm.entries(1, 1) == PolyC{-13, 14, -6, 1});
  CHECK_THROWS_AS(transfer_matrix(path_graph(3), monogamy_connector(2)), std::invalid_argument);
}

TEST_CASE("initial vector") {
  CHECK(initial_vector(path_graph(3)) == std::vector<PolyC>{PolyC{0, -1, 1}, PolyC{0, 2, -3, 1}});
  CHECK(initial_vector(edgeless_graph(3)).front() == PolyC{0, 1});
  CHECK(initial_vector(complete_graph(4)) == std::vector<PolyC>{falling_factorial_poly(0, 4)});
}

TEST_CASE("entries are monic of degree k(T) and count integer colourings") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + trial % 4;
    const Graph g = testing::random_graph(rng, m);
    const Connector c = testing::random_connector(rng, m);
    const TransferMatrix tm = transfer_matrix(g, c);
    for (std::size_t i = 0; i < tm.size(); ++i) {
      for (std::size_t j = 0; j < tm.size(); ++j) {
        const PolyC& e = tm.entries(i, j);
        CHECK(e.is_monic());
        CHECK(e.degree() == tm.states[j].color_count());
        CHECK(e.has_integer_coeffs());
        // Counting meaning needs a concrete previous layer, i.e. c >= k(S).
        for (int c0 = tm.states[i].color_count(); c0 <= 6; ++c0) CHECK(e.eval(Rat(c0)) >= 0);
      }
    }
  }
}

TEST_CASE("row sums match brute-force extension counts") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 1 + trial % 3;
    const Graph g = testing::random_graph(rng, m);
    const Connector c = testing::random_connector(rng, m, 0.5);
    const TransferMatrix tm = transfer_matrix(g, c);
    for (std::size_t i = 0; i < tm.size(); ++i) {
      const CanonState& prev = tm.states[i];
      for (int c0 = prev.color_count(); c0 <= 6; ++c0) {
        Rat row = 0;
        for (std::size_t j = 0; j < tm.size(); ++j) row += tm.entries(i, j).eval(Rat(c0));
        CHECK(row == brute_force_row(g, c, prev, c0));
      }
    }
  }
}

TEST_CASE("one step of the recursion gives the two-layer chromatic polynomial") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 1 + trial % 5;
    const Graph g = testing::random_graph(rng, m);
    const Connector c = testing::random_connector(rng, m);
    const TransferMatrix tm = transfer_matrix(g, c);
    const auto init = initial_vector(tm.states);
    PolyC layer_one;
    PolyC layer_two;
    for (std::size_t t = 0; t < tm.size(); ++t) {
      layer_one += init[t];
      for (std::size_t s = 0; s < tm.size(); ++s) layer_two += init[s] * tm.entries(s, t);
    }
    CHECK(layer_one == chromatic_poly_bruteforce(g));
    CHECK(layer_two == chromatic_poly_bruteforce(build_layered_graph(g, c, 2)));
  }
}

}  // TEST_SUITE
