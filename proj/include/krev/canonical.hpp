#pragma once

#include "krev/graph.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace krev {

/// Relabeling-invariant identifier of an unlabeled (optionally vertex-coloured) tree.
class CanonicalCode {
public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t> &bytes() const noexcept { return bytes_; }

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (auto b : bytes_) {
      out += digits[b >> 4];
      out += digits[b & 0xF];
    }
    return out;
  }

  static CanonicalCode from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0)
      throw std::invalid_argument("odd-length hex code");
    auto nibble = [](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      throw std::invalid_argument("bad hex digit");
    };
    std::vector<std::uint8_t> bytes;
    for (std::size_t i = 0; i < hex.size(); i += 2)
      bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
    return CanonicalCode(std::move(bytes));
  }

  friend auto operator<=>(const CanonicalCode &, const CanonicalCode &) = default;
  friend bool operator==(const CanonicalCode &, const CanonicalCode &) = default;

private:
  std::vector<std::uint8_t> bytes_;
};

/// One or two centres of a tree, found by peeling leaves.
inline std::vector<Vertex> tree_centers(const Graph &g) {
  const int n = g.n();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1)
      layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer)
      for (Vertex w : g.neighbors(leaf))
        if (--deg[w] == 1)
          next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace detail {

// Encoding of the subtree at v: one entry per vertex in preorder, holding
// the depth relative to v (and the colour, when coloured). Child subtrees
// appear in descending lexicographic order of their own encodings.
inline std::vector<std::uint8_t> rooted_encoding(const Graph &g, Vertex v, Vertex parent,
                                                 std::span<const int> colors) {
  const int stride = colors.empty() ? 1 : 2;
  std::vector<std::vector<std::uint8_t>> children;
  for (Vertex w : g.neighbors(v))
    if (w != parent)
      children.push_back(rooted_encoding(g, w, v, colors));
  std::sort(children.begin(), children.end(), std::greater<>{});
  std::vector<std::uint8_t> out{0};
  if (!colors.empty())
    out.push_back(static_cast<std::uint8_t>(colors[v]));
  for (auto &child : children)
    for (std::size_t i = 0; i < child.size(); ++i)
      out.push_back(i % stride == 0 ? static_cast<std::uint8_t>(child[i] + 1) : child[i]);
  return out;
}

} // namespace detail

/**
 * Canonical code of a tree: the level sequence of the tree rooted at its
 * centre, with children ordered by descending subtree code. For bicentral
 * trees the smaller of the two rootings is taken.
 *
 * With `colors` (one value in [0, 255] per vertex) the code identifies
 * the coloured tree up to colour-preserving isomorphism.
 */
inline CanonicalCode canonical_code(const Graph &g, std::span<const int> colors = {}) {
  if (!is_tree(g))
    throw std::invalid_argument("canonical_code requires a tree");
  if (!colors.empty() && static_cast<int>(colors.size()) != g.n())
    throw std::invalid_argument("colour vector length does not match graph");
  if (g.n() > 255)
    throw std::invalid_argument("canonical_code supports at most 255 vertices");
  std::optional<std::vector<std::uint8_t>> best;
  for (Vertex c : tree_centers(g)) {
    auto enc = detail::rooted_encoding(g, c, -1, colors);
    if (!best || enc < *best)
      best = std::move(enc);
  }
  return CanonicalCode(std::move(*best));
}

} // namespace krev
