#include <chromgf/genfunc.hpp>

#include <chromgf/algebra/linear_solve.hpp>
#include <chromgf/transfer.hpp>

namespace chromgf {

GenFunc generating_function(const Graph& g, const Connector& c, EmptyTerm convention) {
  const TransferMatrix tm = transfer_matrix(g, c);
  const std::vector<PolyC> init = initial_vector(tm.states);
  const std::size_t n = tm.size();

  // Row T: f_T - z * sum_S M[S][T] f_S = z * init[T].
  Matrix<PolyZC> system(n, n);
  std::vector<PolyZC> rhs(n);
  const PolyZC z = PolyZC::z();
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < n; ++s) {
      PolyZC entry = -(z * tm.entries(s, t));
      if (s == t) entry += PolyZC(1);
      system(t, s) = std::move(entry);
    }
    rhs[t] = z * init[t];
  }

  const FractionFreeSolution sol = solve_fraction_free(system, rhs);
  PolyZC numerator = convention == EmptyTerm::kIncluded ? sol.denominator : PolyZC();
  for (const PolyZC& y : sol.numerators) numerator += y;
  return {RatFunc(std::move(numerator), sol.denominator), convention};
}

GenFunc gf_cartesian(const Graph& g, EmptyTerm convention) {
  return generating_function(g, monogamy_connector(g.vertex_count()), convention);
}

GenFunc gf_grid(int m, EmptyTerm convention) { return gf_cartesian(path_graph(m), convention); }

}  // namespace chromgf
