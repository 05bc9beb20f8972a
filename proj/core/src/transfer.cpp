#include <chromgf/transfer.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace chromgf {

namespace {

void check_shapes(const CanonState& prev, const CanonState& next, const Connector& c) {
  if (prev.size() != c.vertex_count() || next.size() != c.vertex_count()) {
    throw std::invalid_argument("state length does not match connector size");
  }
}

// Tallies atomic events by their number of fresh classes.
void count_events(const OptionSets& options, std::size_t cls, std::vector<bool>& used, int fresh,
                  std::vector<std::uint64_t>& by_fresh) {
  if (cls == options.allowed_old.size()) {
    ++by_fresh[static_cast<std::size_t>(fresh)];
    return;
  }
  for (int old : options.allowed_old[cls]) {
    if (used[static_cast<std::size_t>(old)]) continue;
    used[static_cast<std::size_t>(old)] = true;
    count_events(options, cls + 1, used, fresh, by_fresh);
    used[static_cast<std::size_t>(old)] = false;
  }
  count_events(options, cls + 1, used, fresh + 1, by_fresh);
}

}  // namespace

std::vector<std::vector<int>> forbidden_sets(const CanonState& prev, const CanonState& next, const Connector& c) {
  check_shapes(prev, next, c);
  std::vector<std::vector<int>> forb(static_cast<std::size_t>(next.color_count()));
  for (const auto& [alpha, beta] : c.pairs()) {
    forb[static_cast<std::size_t>(next[beta] - 1)].push_back(prev[alpha]);
  }
  for (auto& set : forb) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  return forb;
}

OptionSets option_sets(const CanonState& prev, const CanonState& next, const Connector& c) {
  const auto forb = forbidden_sets(prev, next, c);
  OptionSets out;
  out.old_palette = prev.color_count();
  out.allowed_old.resize(forb.size());
  for (std::size_t t = 0; t < forb.size(); ++t) {
    for (int old = 1; old <= out.old_palette; ++old) {
      if (!std::binary_search(forb[t].begin(), forb[t].end(), old)) out.allowed_old[t].push_back(old);
    }
  }
  return out;
}

PolyC transfer_entry(const CanonState& prev, const CanonState& next, const Connector& c) {
  const OptionSets options = option_sets(prev, next, c);
  std::vector<std::uint64_t> by_fresh(options.allowed_old.size() + 1, 0);
  std::vector<bool> used(static_cast<std::size_t>(options.old_palette) + 1, false);
  count_events(options, 0, used, 0, by_fresh);

  PolyC entry;
  const auto s = static_cast<unsigned>(options.old_palette);
  for (std::size_t gamma = 0; gamma < by_fresh.size(); ++gamma) {
    if (by_fresh[gamma] == 0) continue;
    entry += falling_factorial_poly(s, static_cast<unsigned>(gamma)) * Rat(static_cast<unsigned long>(by_fresh[gamma]));
  }
  return entry;
}

TransferMatrix transfer_matrix(const Graph& g, const Connector& c) {
  if (g.vertex_count() != c.vertex_count()) throw std::invalid_argument("graph and connector sizes differ");
  TransferMatrix tm{enumerate_states(g), {}};
  const std::size_t n = tm.states.size();
  tm.entries = Matrix<PolyC>(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) tm.entries(i, j) = transfer_entry(tm.states[i], tm.states[j], c);
  }
  return tm;
}

std::vector<PolyC> initial_vector(const std::vector<CanonState>& states) {
  std::vector<PolyC> out;
  out.reserve(states.size());
  for (const CanonState& t : states) out.push_back(falling_factorial_poly(0, static_cast<unsigned>(t.color_count())));
  return out;
}

std::vector<PolyC> initial_vector(const Graph& g) { return initial_vector(enumerate_states(g)); }

}  // namespace chromgf
