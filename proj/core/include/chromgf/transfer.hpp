#pragma once

#include <chromgf/algebra/linear_solve.hpp>
#include <chromgf/algebra/poly_c.hpp>
#include <chromgf/graph.hpp>
#include <chromgf/states.hpp>

#include <vector>

namespace chromgf {

/// Choices available to each colour class of the new layer.  Index t-1
/// holds class t.  Every class may also take a fresh colour, i.e. one of
/// the c - old_palette colours unused by the previous layer.
struct OptionSets {
  int old_palette = 0;
  std::vector<std::vector<int>> allowed_old;
};

/// For each class t of `next`, the old colours prev[a] facing it across a
/// connector pair [a, b] with next[b] == t.  Index t-1 holds class t;
/// each set is sorted.
std::vector<std::vector<int>> forbidden_sets(const CanonState& prev, const CanonState& next, const Connector& c);

OptionSets option_sets(const CanonState& prev, const CanonState& next, const Connector& c);

/// Number of ways, as a polynomial in c, to colour a new layer in pattern
/// `next` below a layer coloured in pattern `prev`.
///
/// Sums ff(s, gamma) over every assignment of a distinct allowed old colour
/// or the fresh marker to each class, gamma being the number of fresh
/// classes and s the previous layer's colour count.
PolyC transfer_entry(const CanonState& prev, const CanonState& next, const Connector& c);

/// entries(S, T) = transfer_entry(S, T) with rows/columns in
/// enumerate_states order.
struct TransferMatrix {
  std::vector<CanonState> states;
  Matrix<PolyC> entries;

  std::size_t size() const { return states.size(); }
};

TransferMatrix transfer_matrix(const Graph& g, const Connector& c);

/// c(c-1)...(c-k(T)+1) for each state T of g: colourings of a single layer
/// with canonical form T.
std::vector<PolyC> initial_vector(const Graph& g);
std::vector<PolyC> initial_vector(const std::vector<CanonState>& states);

}  // namespace chromgf
