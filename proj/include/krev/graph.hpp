#pragma once

#include "krev/error.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace krev {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Word = std::uint64_t;

inline constexpr int bits_per_word = 64;

inline constexpr int words_for(int n) { return (n + bits_per_word - 1) / bits_per_word; }

/**
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Besides adjacency lists, every vertex carries its neighbourhood as a
 * packed bit row so that disagreement counts reduce to popcounts.
 * Edges are stored with u < v in the order they were supplied.
 */
class Graph {
public:
  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1)
      throw std::invalid_argument("graph needs at least one vertex");
    words_ = words_for(n);
    adjacency_.resize(n);
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v)
        throw std::invalid_argument("self-loop");
      if (u > v)
        std::swap(u, v);
      if (row_bit(u, v))
        throw std::invalid_argument("duplicate edge");
      set_row_bit(u, v);
      set_row_bit(v, u);
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
      edges_.emplace_back(u, v);
    }
    for (auto &nbrs : adjacency_)
      std::sort(nbrs.begin(), nbrs.end());
    for (const auto &nbrs : adjacency_)
      max_degree_ = std::max(max_degree_, static_cast<int>(nbrs.size()));
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }
  int max_degree() const noexcept { return max_degree_; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Number of 64-bit words in each neighbourhood row.
  int words() const noexcept { return words_; }
  std::span<const Word> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  bool adjacent(Vertex u, Vertex v) const { return row_bit(u, v); }

  std::vector<Edge> sorted_edges() const {
    auto out = edges_;
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.sorted_edges() == b.sorted_edges();
  }

private:
  bool row_bit(Vertex u, Vertex v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + v / bits_per_word] >> (v % bits_per_word)) & 1U;
  }
  void set_row_bit(Vertex u, Vertex v) {
    rows_[static_cast<std::size_t>(u) * words_ + v / bits_per_word] |= Word{1} << (v % bits_per_word);
  }

  int n_;
  int words_ = 0;
  int max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Word> rows_;
};

/// Connected with exactly n-1 edges.
inline bool is_tree(const Graph &g) {
  if (g.m() != g.n() - 1)
    return false;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.n();
}

/// Applies a vertex permutation: vertex v of g becomes perm[v].
inline Graph relabel(const Graph &g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw std::invalid_argument("permutation length does not match graph");
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (auto [u, v] : g.edges())
    edges.emplace_back(perm[u], perm[v]);
  return Graph(g.n(), std::move(edges));
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline bool parse_int(std::string_view s, long long &out) {
  if (s.empty() || s.size() > 18)
    return false;
  long long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

} // namespace detail

/**
 * Parses the edge-list text format:
 *
 *     # optional comments
 *     n=4
 *     1 2
 *     2 3
 *
 * Vertex indices in the file are 1-based. Anything after '#' on a line
 * is ignored.
 */
inline Graph parse_edge_list(std::string_view text) {
  using K = ParseErrorKind;
  long long n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = text.size();
    auto raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    auto line = detail::trim(raw);
    if (line.empty())
      continue;

    if (n < 0) {
      auto rest = line.starts_with('n') ? detail::trim(line.substr(1)) : std::string_view{};
      if (!rest.starts_with('='))
        throw ParseError(K::MissingHeader, line_no, "expected \"n=<int>\"");
      if (!detail::parse_int(detail::trim(rest.substr(1)), n) || n < 1)
        throw ParseError(K::MalformedLine, line_no, "bad vertex count");
      continue;
    }

    auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos)
      throw ParseError(K::MalformedLine, line_no, std::string(line));
    long long u = 0, v = 0;
    if (!detail::parse_int(line.substr(0, sep), u) || !detail::parse_int(detail::trim(line.substr(sep)), v))
      throw ParseError(K::MalformedLine, line_no, std::string(line));
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(K::IndexOutOfRange, line_no, std::string(line));
    if (u == v)
      throw ParseError(K::SelfLoop, line_no, std::string(line));
    Edge e{static_cast<Vertex>(std::min(u, v) - 1), static_cast<Vertex>(std::max(u, v) - 1)};
    if (!seen.insert(e).second)
      throw ParseError(K::DuplicateEdge, line_no, std::string(line));
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (n < 0)
    throw ParseError(K::MissingHeader, 0, "empty input");
  return Graph(static_cast<int>(n), std::move(edges));
}

/// Inverse of parse_edge_list; edges are written in stored order.
inline std::string to_edge_list(const Graph &g) {
  std::ostringstream out;
  out << "n=" << g.n() << '\n';
  for (auto [u, v] : g.edges())
    out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

/// Compact single-line form used in reports: "1-2 2-3 3-4".
inline std::string edges_string(const Graph &g) {
  std::string out;
  for (auto [u, v] : g.sorted_edges()) {
    if (!out.empty())
      out += ' ';
    out += std::to_string(u + 1) + '-' + std::to_string(v + 1);
  }
  return out;
}

/// Inverse of edges_string.
inline Graph graph_from_edges_string(int n, std::string_view s) {
  std::vector<Edge> edges;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) {
    const auto dash = tok.find('-');
    long long u = 0, v = 0;
    if (dash == std::string::npos || !detail::parse_int(std::string_view(tok).substr(0, dash), u) ||
        !detail::parse_int(std::string_view(tok).substr(dash + 1), v) || u < 1 || v < 1)
      throw ParseError(ParseErrorKind::MalformedLine, 0, tok);
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  return Graph(n, std::move(edges));
}

} // namespace krev
