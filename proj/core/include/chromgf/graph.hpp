#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromgf {

/// Undirected edge {u, v} with u < v, 1-based.
using Edge = std::pair<int, int>;
/// Inter-layer pair [alpha, beta]: vertex alpha of layer i meets vertex
/// beta of layer i+1.
using LinkPair = std::pair<int, int>;

/// Input did not match the graph/connector file format.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Simple undirected graph on vertices 1..m.
class Graph {
 public:
  /// Validates and canonicalises: each edge is stored as (min, max) and the
  /// list is sorted.  Throws std::invalid_argument for self-loops, endpoints
  /// outside 1..m, duplicates, or m < 1.
  Graph(int m, std::vector<Edge> edges);

  int vertex_count() const { return m_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  /// Neighbours w < v of vertex v, ascending.
  std::vector<int> earlier_neighbours(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int m_;
  std::vector<Edge> edges_;
};

/// The bipartite connector between consecutive layers.
class Connector {
 public:
  /// Throws std::invalid_argument for coordinates outside 1..m, duplicate
  /// pairs, or m < 1.
  Connector(int m, std::vector<LinkPair> pairs);

  int vertex_count() const { return m_; }
  const std::vector<LinkPair>& pairs() const { return pairs_; }

  friend bool operator==(const Connector&, const Connector&) = default;

 private:
  int m_;
  std::vector<LinkPair> pairs_;
};

/// Reads "m <int>" followed by "e <u> <v>" lines; '#' starts a comment line.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
/// Reads "m <int>" followed by "p <alpha> <beta>" lines.
Connector parse_connector(std::istream& in);
Connector parse_connector_text(const std::string& text);

Connector monogamy_connector(int m);
Graph path_graph(int m);
Graph edgeless_graph(int m);
Graph complete_graph(int m);

/// n copies of g; layer i occupies vertices 1+i*m .. m+i*m, and each
/// connector pair [a, b] joins a+i*m to b+(i+1)*m for consecutive layers.
Graph build_layered_graph(const Graph& g, const Connector& c, int n);

}  // namespace chromgf
