#pragma once

#include "krev/canonical.hpp"
#include "krev/graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace krev {

/// Builds the tree described by a level sequence (preorder depths, root at depth 0).
inline Graph tree_from_level_sequence(const std::vector<int> &levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  std::vector<Vertex> last_at_depth(n + 1, -1);
  for (Vertex v = 0; v < n; ++v) {
    int d = levels[v];
    if (d > 0)
      edges.emplace_back(last_at_depth[d - 1], v);
    last_at_depth[d] = v;
  }
  return Graph(n, std::move(edges));
}

/**
 * Streams one representative of every isomorphism class of trees on n
 * vertices.
 *
 * Trees are produced as centre-rooted canonical level sequences in the
 * order of the Wright-Richmond-Odlyzko-McKay scheme: a Beyer-Hedetniemi
 * rooted-tree successor, with jumps that skip level sequences whose first
 * root subtree is too tall (or too large) to be the centre-rooted form.
 *
 *     FreeTreeEnumerator e(8);
 *     while (auto t = e.next()) { ... }
 */
class FreeTreeEnumerator {
public:
  explicit FreeTreeEnumerator(int n) : n_(n) {
    if (n < 1)
      throw std::invalid_argument("tree order must be positive");
    if (n <= 2) {
      for (int i = 0; i < n; ++i)
        levels_.push_back(i);
      return;
    }
    // Path rooted at its centre.
    for (int i = 0; i <= n / 2; ++i)
      levels_.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i)
      levels_.push_back(i);
  }

  /// Next tree, or nullopt once every class has been produced.
  std::optional<Graph> next() {
    if (done_)
      return std::nullopt;
    if (n_ <= 2) {
      done_ = true;
      return tree_from_level_sequence(levels_);
    }
    if (started_ && !next_rooted(static_cast<int>(levels_.size()) - 1, true)) {
      done_ = true;
      return std::nullopt;
    }
    started_ = true;
    while (!valid()) {
      if (!jump()) {
        done_ = true;
        return std::nullopt;
      }
    }
    return tree_from_level_sequence(levels_);
  }

  /// Level sequence of the tree most recently returned by next().
  const std::vector<int> &levels() const noexcept { return levels_; }

private:
  // Beyer-Hedetniemi successor. When `skip_ones` is set, p starts at the
  // last entry whose level exceeds one.
  bool next_rooted(int p, bool skip_ones) {
    if (skip_ones)
      while (p > 0 && levels_[p] == 1)
        --p;
    if (p <= 0)
      return false;
    int q = p - 1;
    while (levels_[q] != levels_[p] - 1)
      --q;
    for (std::size_t i = p; i < levels_.size(); ++i)
      levels_[i] = levels_[i - p + q];
    return true;
  }

  // Index where the first root subtree ends (second occurrence of level 1).
  int split_point() const {
    for (std::size_t i = 2; i < levels_.size(); ++i)
      if (levels_[i] == 1)
        return static_cast<int>(i);
    return static_cast<int>(levels_.size());
  }

  // The sequence is centre-rooted and canonical iff the first subtree is
  // not taller than the rest of the tree, and on a tie is neither larger
  // nor lexicographically later.
  bool valid() const {
    const int m = split_point();
    std::vector<int> left(levels_.begin() + 1, levels_.begin() + m);
    for (auto &d : left)
      --d;
    std::vector<int> rest{0};
    rest.insert(rest.end(), levels_.begin() + m, levels_.end());
    const int left_h = *std::max_element(left.begin(), left.end());
    const int rest_h = *std::max_element(rest.begin(), rest.end());
    if (rest_h < left_h)
      return false;
    if (rest_h == left_h) {
      if (left.size() > rest.size())
        return false;
      if (left.size() == rest.size() && left > rest)
        return false;
    }
    return true;
  }

  // Skips straight past the run of invalid sequences that share the
  // current first subtree. A tall first subtree also resets the tail to
  // the shortest path that keeps the rest at least as high.
  bool jump() {
    const int p = split_point() - 1;
    const bool tall = levels_[p] > 2;
    if (!next_rooted(p, false))
      return false;
    if (tall) {
      const int m = split_point();
      int left_h = 0;
      for (int i = 1; i < m; ++i)
        left_h = std::max(left_h, levels_[i] - 1);
      const int len = left_h + 1;
      const int size = static_cast<int>(levels_.size());
      for (int i = 0; i < len; ++i)
        levels_[size - len + i] = i + 1;
    }
    return true;
  }

  int n_;
  std::vector<int> levels_;
  bool started_ = false;
  bool done_ = false;
};

} // namespace krev
