#include <chromgf/graph.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string_view>

namespace chromgf {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(int m, std::vector<Edge> edges) : m_(m), edges_(std::move(edges)) {
  if (m_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > m_ || v > m_) {
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range 1.." +
                                  std::to_string(m_));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(dup->first) + "," + std::to_string(dup->second) +
                                "}");
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> Graph::earlier_neighbours(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Connector::Connector(int m, std::vector<LinkPair> pairs) : m_(m), pairs_(std::move(pairs)) {
  if (m_ < 1) throw std::invalid_argument("connector needs at least one vertex per layer");
  for (const auto& [a, b] : pairs_) {
    if (a < 1 || b < 1 || a > m_ || b > m_) {
      throw std::invalid_argument("pair [" + std::to_string(a) + "," + std::to_string(b) + "] out of range 1.." +
                                  std::to_string(m_));
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  const auto dup = std::adjacent_find(pairs_.begin(), pairs_.end());
  if (dup != pairs_.end()) {
    throw std::invalid_argument("duplicate pair [" + std::to_string(dup->first) + "," + std::to_string(dup->second) +
                                "]");
  }
}

namespace {

struct Record {
  int line;
  std::string tag;
  std::vector<int> args;
};

int parse_int(std::string_view token, int line) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected integer, got '" + std::string(token) + "'");
  return value;
}

// Splits the input into non-comment records and checks the "m <int>" header.
std::pair<int, std::vector<Record>> read_records(std::istream& in, char body_tag) {
  std::vector<Record> records;
  std::string raw;
  int line = 0;
  int m = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream fields(raw);
    std::string tag;
    if (!(fields >> tag) || tag.front() == '#') continue;
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (!have_header) {
      if (tag != "m" || tokens.size() != 1) throw ParseError(line, "expected header 'm <count>'");
      m = parse_int(tokens[0], line);
      if (m < 1) throw ParseError(line, "vertex count must be positive");
      have_header = true;
      continue;
    }
    if (tag.size() != 1 || tag[0] != body_tag) {
      throw ParseError(line, "unexpected record '" + tag + "' (expected '" + std::string(1, body_tag) + "')");
    }
    if (tokens.size() != 2) throw ParseError(line, "expected two vertex indices");
    records.push_back({line, tag, {parse_int(tokens[0], line), parse_int(tokens[1], line)}});
  }
  if (!have_header) throw ParseError(line == 0 ? 1 : line, "missing header 'm <count>'");
  return {m, std::move(records)};
}

}  // namespace

Graph parse_graph(std::istream& in) {
  auto [m, records] = read_records(in, 'e');
  std::vector<Edge> edges;
  std::vector<Edge> seen;
  for (const Record& r : records) {
    int u = r.args[0];
    int v = r.args[1];
    if (u == v) throw ParseError(r.line, "self-loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > m || v > m) throw ParseError(r.line, "vertex out of range 1.." + std::to_string(m));
    Edge key{std::min(u, v), std::max(u, v)};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw ParseError(r.line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    seen.push_back(key);
    edges.push_back(key);
  }
  return Graph(m, std::move(edges));
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Connector parse_connector(std::istream& in) {
  auto [m, records] = read_records(in, 'p');
  std::vector<LinkPair> pairs;
  for (const Record& r : records) {
    const LinkPair p{r.args[0], r.args[1]};
    if (p.first < 1 || p.second < 1 || p.first > m || p.second > m) {
      throw ParseError(r.line, "vertex out of range 1.." + std::to_string(m));
    }
    if (std::find(pairs.begin(), pairs.end(), p) != pairs.end()) {
      throw ParseError(r.line, "duplicate pair " + std::to_string(p.first) + " " + std::to_string(p.second));
    }
    pairs.push_back(p);
  }
  return Connector(m, std::move(pairs));
}

Connector parse_connector_text(const std::string& text) {
  std::istringstream in(text);
  return parse_connector(in);
}

Connector monogamy_connector(int m) {
  std::vector<LinkPair> pairs;
  for (int i = 1; i <= m; ++i) pairs.emplace_back(i, i);
  return Connector(m, std::move(pairs));
}

Graph path_graph(int m) {
  std::vector<Edge> edges;
  for (int i = 1; i < m; ++i) edges.emplace_back(i, i + 1);
  return Graph(m, std::move(edges));
}

Graph edgeless_graph(int m) { return Graph(m, {}); }

Graph complete_graph(int m) {
  std::vector<Edge> edges;
  for (int u = 1; u <= m; ++u) {
    for (int v = u + 1; v <= m; ++v) edges.emplace_back(u, v);
  }
  return Graph(m, std::move(edges));
}

Graph build_layered_graph(const Graph& g, const Connector& c, int n) {
  const int m = g.vertex_count();
  if (c.vertex_count() != m) {
    throw std::invalid_argument("graph has " + std::to_string(m) + " vertices but connector expects " +
                                std::to_string(c.vertex_count()));
  }
  if (n < 1) throw std::invalid_argument("layer count must be positive");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * g.edges().size() + static_cast<std::size_t>(n - 1) * c.pairs().size());
  for (int i = 0; i < n; ++i) {
    for (const auto& [u, v] : g.edges()) edges.emplace_back(u + i * m, v + i * m);
  }
  for (int i = 0; i + 1 < n; ++i) {
    for (const auto& [a, b] : c.pairs()) edges.emplace_back(a + i * m, b + (i + 1) * m);
  }
  return Graph(m * n, std::move(edges));
}

}  // namespace chromgf
