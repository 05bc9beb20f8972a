#include <chromgf/oracle.hpp>

#include <chromgf/algebra/rat_func.hpp>
#include <chromgf/genfunc.hpp>

#include <algorithm>

namespace chromgf {

namespace {

struct Backtracker {
  std::vector<std::vector<int>> earlier;  // 0-based lower neighbours
  std::vector<int> color;
  unsigned palette = 0;

  Int count(std::size_t v, unsigned used) {
    if (v == earlier.size()) return Int(1);
    Int total = 0;
    for (unsigned k = 1; k <= used; ++k) {
      const bool clash = std::any_of(earlier[v].begin(), earlier[v].end(),
                                     [&](int w) { return color[static_cast<std::size_t>(w)] == static_cast<int>(k); });
      if (clash) continue;
      color[v] = static_cast<int>(k);
      total += count(v + 1, used);
    }
    if (used < palette) {
      color[v] = static_cast<int>(used + 1);
      total += Int(palette - used) * count(v + 1, used + 1);
    }
    color[v] = 0;
    return total;
  }
};

std::vector<std::vector<int>> lower_neighbours(const Graph& h) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(h.vertex_count()));
  for (const auto& [u, v] : h.edges()) out[static_cast<std::size_t>(v - 1)].push_back(u - 1);
  return out;
}

}  // namespace

Int count_proper_colorings(const Graph& h, unsigned colors) {
  Backtracker bt{lower_neighbours(h), std::vector<int>(static_cast<std::size_t>(h.vertex_count()), 0), colors};
  return bt.count(0, 0);
}

Int count_proper_colorings_exhaustive(const Graph& h, unsigned colors) {
  const auto n = static_cast<std::size_t>(h.vertex_count());
  if (colors == 0) return Int(0);
  std::vector<unsigned> assign(n, 0);
  Int total = 0;
  while (true) {
    const bool proper = std::none_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
      return assign[static_cast<std::size_t>(e.first - 1)] == assign[static_cast<std::size_t>(e.second - 1)];
    });
    if (proper) ++total;
    std::size_t i = 0;
    while (i < n && ++assign[i] == colors) assign[i++] = 0;
    if (i == n) break;
  }
  return total;
}

PolyC interpolate_at_naturals(const std::vector<Rat>& values) {
  // Divided differences on nodes 0, 1, 2, ...
  std::vector<Rat> diff = values;
  const std::size_t n = diff.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      diff[i] = (diff[i] - diff[i - 1]) / Rat(static_cast<unsigned long>(level));
    }
  }
  // Horner form: d0 + (c-0)(d1 + (c-1)(d2 + ...)).
  PolyC out;
  for (std::size_t i = n; i-- > 0;) {
    out = out * PolyC{-static_cast<long>(i), 1} + PolyC(diff[i]);
  }
  return out;
}

PolyC chromatic_poly_bruteforce(const Graph& h) {
  const int n = h.vertex_count();
  if (n > kOracleMaxVertices) throw OracleLimitError();
  std::vector<Rat> counts;
  counts.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) counts.emplace_back(count_proper_colorings(h, static_cast<unsigned>(k)));
  PolyC p = interpolate_at_naturals(counts);
  if (p.degree() != n || !p.is_monic() || !p.has_integer_coeffs()) {
    throw std::logic_error("oracle interpolation is not a monic integer polynomial of degree |V|");
  }
  return p;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SeriesCheck& c) { return c.ok; });
}

VerificationReport verify_series(const Graph& g, const Connector& c, int order) {
  if (order < 1) throw std::invalid_argument("verification order must be positive");
  if (g.vertex_count() * order > kOracleMaxVertices) throw OracleLimitError();
  const GenFunc gf = generating_function(g, c, EmptyTerm::kIncluded);
  const std::vector<PolyC> series = series_coefficients(gf.value, order);
  VerificationReport report;
  for (int n = 1; n <= order; ++n) {
    SeriesCheck check;
    check.layers = n;
    check.expected = chromatic_poly_bruteforce(build_layered_graph(g, c, n));
    check.actual = series[static_cast<std::size_t>(n)];
    check.ok = check.expected == check.actual;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace chromgf
