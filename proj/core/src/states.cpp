#include <chromgf/states.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chromgf {

CanonState::CanonState(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("empty state");
  for (int label : labels_) {
    if (label < 1 || label > color_count_ + 1) throw std::invalid_argument("state is not a restricted-growth sequence");
    color_count_ = std::max(color_count_, label);
  }
}

bool CanonState::is_proper_for(const Graph& g) const {
  if (g.vertex_count() != size()) return false;
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [this](const Edge& e) { return (*this)[e.first] == (*this)[e.second]; });
}

std::vector<int> canonicalize(std::span<const int> coloring) {
  std::map<int, int> rename;
  std::vector<int> out;
  out.reserve(coloring.size());
  for (int color : coloring) {
    auto [it, inserted] = rename.try_emplace(color, static_cast<int>(rename.size()) + 1);
    out.push_back(it->second);
  }
  return out;
}

namespace {

void extend(const std::vector<std::vector<int>>& earlier, std::vector<int>& prefix, int max_label,
            std::vector<CanonState>& out) {
  const std::size_t v = prefix.size();
  if (v == earlier.size()) {
    out.emplace_back(prefix);
    return;
  }
  for (int label = 1; label <= max_label + 1; ++label) {
    const bool clash = std::any_of(earlier[v].begin(), earlier[v].end(),
                                   [&](int w) { return prefix[static_cast<std::size_t>(w - 1)] == label; });
    if (clash) continue;
    prefix.push_back(label);
    extend(earlier, prefix, std::max(max_label, label), out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<CanonState> enumerate_states(const Graph& g) {
  std::vector<std::vector<int>> earlier;
  for (int v = 1; v <= g.vertex_count(); ++v) earlier.push_back(g.earlier_neighbours(v));
  std::vector<CanonState> out;
  std::vector<int> prefix;
  extend(earlier, prefix, 0, out);
  return out;
}

std::string format_state(const CanonState& s) {
  const bool compact = s.color_count() <= 9;
  std::string out;
  for (int i = 0; i < s.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(s.labels()[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace chromgf
