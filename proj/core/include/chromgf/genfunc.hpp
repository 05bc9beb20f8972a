#pragma once

#include <chromgf/algebra/rat_func.hpp>
#include <chromgf/graph.hpp>

namespace chromgf {

/// Whether the z^0 coefficient (one colouring of the empty graph) is part
/// of the series.
enum class EmptyTerm { kIncluded, kOmitted };

struct GenFunc {
  RatFunc value;
  EmptyTerm convention = EmptyTerm::kIncluded;
};

/// sum_n P(M_n(g, c); colours) z^n as a reduced rational function.
///
/// Solves (I - z M^T) f = z v, where M is the transfer matrix and v the
/// initial vector, then adds the components (plus 1 when the empty term is
/// included).  The solve is fraction-free and the result is reduced once.
GenFunc generating_function(const Graph& g, const Connector& c, EmptyTerm convention = EmptyTerm::kIncluded);

/// Layers joined vertex-to-vertex: the Cartesian product g x P_n.
GenFunc gf_cartesian(const Graph& g, EmptyTerm convention = EmptyTerm::kIncluded);

/// Grid graphs P_m x P_n.
GenFunc gf_grid(int m, EmptyTerm convention = EmptyTerm::kIncluded);

}  // namespace chromgf
