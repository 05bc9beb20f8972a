#pragma once

#include <chromgf/graph.hpp>

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace chromgf {

/// Canonical colouring of one layer: a restricted-growth sequence
/// (first label 1, each label at most one more than the prefix maximum).
/// Colour class t is the set of positions labelled t.
class CanonState {
 public:
  /// Throws std::invalid_argument unless `labels` is a nonempty
  /// restricted-growth sequence.
  explicit CanonState(std::vector<int> labels);

  std::span<const int> labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  /// Label of 1-based vertex v.
  int operator[](int v) const { return labels_[static_cast<std::size_t>(v - 1)]; }
  /// Number of distinct colours (the largest label).
  int color_count() const { return color_count_; }

  bool is_proper_for(const Graph& g) const;

  friend auto operator<=>(const CanonState& a, const CanonState& b) { return a.labels_ <=> b.labels_; }
  friend bool operator==(const CanonState& a, const CanonState& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<int> labels_;
  int color_count_ = 0;
};

/// Renames colours by order of first appearance: 351132 -> 123314.
std::vector<int> canonicalize(std::span<const int> coloring);

/// Every canonical proper colouring of g, in lexicographic order.
std::vector<CanonState> enumerate_states(const Graph& g);

inline int state_color_count(const CanonState& s) { return s.color_count(); }

/// "121" when every label is a single digit, "1,2,...,10" otherwise.
std::string format_state(const CanonState& s);

}  // namespace chromgf
