#pragma once

#include <chromgf/algebra/poly_c.hpp>
#include <chromgf/graph.hpp>

#include <stdexcept>
#include <vector>

namespace chromgf {

/// Largest graph the brute-force oracle accepts.
inline constexpr int kOracleMaxVertices = 12;

class OracleLimitError : public std::runtime_error {
 public:
  OracleLimitError() : std::runtime_error("oracle size limit") {}
};

/// Number of maps V(h) -> {1..colors} with no monochromatic edge.
///
/// Backtracks over vertices in label order, pruning colours already taken
/// by a lower-numbered neighbour.  Colours not yet used anywhere are
/// interchangeable, so one representative is explored and its count is
/// scaled by the number of unused colours.
Int count_proper_colorings(const Graph& h, unsigned colors);

/// Same count by plain enumeration of all colors^|V| maps.  Only for tiny
/// inputs; used to cross-check the backtracking counter.
Int count_proper_colorings_exhaustive(const Graph& h, unsigned colors);

/// The unique polynomial of degree <= |V| through (k, count(h, k)) for
/// k = 0..|V|.  Throws OracleLimitError when |V| > kOracleMaxVertices and
/// std::logic_error if the result is not a monic integer polynomial of
/// degree |V|.
PolyC chromatic_poly_bruteforce(const Graph& h);

/// Newton interpolation through (0, values[0]), (1, values[1]), ...
PolyC interpolate_at_naturals(const std::vector<Rat>& values);

struct SeriesCheck {
  int layers = 0;
  PolyC expected;  // oracle
  PolyC actual;    // generating-function coefficient
  bool ok = false;
};

struct VerificationReport {
  std::vector<SeriesCheck> checks;

  bool passed() const;
};

/// Compares z^1..z^order of the generating function for (g, c) against the
/// oracle on the explicitly built layered graphs.  Throws OracleLimitError
/// when m * order exceeds kOracleMaxVertices.
VerificationReport verify_series(const Graph& g, const Connector& c, int order);

}  // namespace chromgf
