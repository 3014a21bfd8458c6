#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clawsplit {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/**
 * Simple undirected graph with dense vertex ids 0..n-1.
 *
 * Neighbor lists are kept sorted. An optional role label may be attached to
 * every vertex; labels either cover all vertices or none.
 */
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : adj_(n) {}

  /// Throws std::invalid_argument on self-loops, parallel edges, or ids >= n.
  Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (const auto& e : edges) {
      if (e.u >= n || e.v >= n)
        throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                    std::to_string(e.v) + ") out of range");
      if (e.u == e.v)
        throw std::invalid_argument("self-loop at " + std::to_string(e.u));
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end());
      if (std::adjacent_find(list.begin(), list.end()) != list.end())
        throw std::invalid_argument("parallel edge");
    }
    m_ = edges.size();
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from adjacency lists; lists must be symmetric, loop-free and
  /// duplicate-free (sorted here).
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adj,
                              std::vector<std::string> labels = {}) {
    Graph g;
    std::size_t degree_sum = 0;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      std::sort(adj[v].begin(), adj[v].end());
      degree_sum += adj[v].size();
    }
    g.adj_ = std::move(adj);
    g.m_ = degree_sum / 2;
    g.labels_ = std::move(labels);
    return g;
  }

  [[nodiscard]] std::size_t vertex_count() const { return adj_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return m_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return adj_[v];
  }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adj_[v].size(); }

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
  }

  [[nodiscard]] std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& list : adj_) d = std::max(d, list.size());
    return d;
  }

  /// All edges with u < v, ascending.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  [[nodiscard]] bool has_labels() const { return !labels_.empty(); }
  [[nodiscard]] const std::vector<std::string>& labels() const {
    return labels_;
  }
  [[nodiscard]] std::string_view label(Vertex v) const {
    return labels_.empty() ? std::string_view{} : std::string_view{labels_[v]};
  }

  [[nodiscard]] Graph with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != adj_.size())
      throw std::invalid_argument("label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
  }

  [[nodiscard]] const std::vector<std::vector<Vertex>>& adjacency() const {
    return adj_;
  }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::size_t m_ = 0;
};

inline constexpr Vertex kTombstone = static_cast<Vertex>(-1);

/// A graph obtained by deleting vertices, with both directions of the id map.
struct Relabeled {
  Graph graph;
  std::vector<Vertex> old_to_new;  // kTombstone for deleted vertices
  std::vector<Vertex> new_to_old;
};

inline Relabeled induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Relabeled r;
  r.old_to_new.assign(g.vertex_count(), kTombstone);
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    r.old_to_new[v] = static_cast<Vertex>(r.new_to_old.size());
    r.new_to_old.push_back(v);
  }
  std::vector<std::vector<Vertex>> adj(sorted.size());
  std::vector<std::string> labels;
  for (Vertex nv = 0; nv < sorted.size(); ++nv) {
    for (Vertex w : g.neighbors(sorted[nv]))
      if (r.old_to_new[w] != kTombstone) adj[nv].push_back(r.old_to_new[w]);
    if (g.has_labels()) labels.emplace_back(g.label(sorted[nv]));
  }
  r.graph = Graph::from_adjacency(std::move(adj), std::move(labels));
  return r;
}

inline Relabeled delete_vertices(const Graph& g, std::span<const Vertex> doomed) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (Vertex v : doomed) gone.at(v) = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    comps.emplace_back();
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

/// Components of the subgraph induced by `subset` (need not be sorted).
inline std::vector<std::vector<Vertex>> induced_components(
    const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  auto index_of = [&](Vertex v) -> std::optional<std::size_t> {
    auto it = std::lower_bound(members.begin(), members.end(), v);
    if (it == members.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - members.begin());
  };
  std::vector<char> seen(members.size(), 0);
  std::vector<std::vector<Vertex>> comps;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (seen[i]) continue;
    comps.emplace_back();
    std::vector<std::size_t> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
      std::size_t j = stack.back();
      stack.pop_back();
      comps.back().push_back(members[j]);
      for (Vertex w : g.neighbors(members[j]))
        if (auto k = index_of(w); k && !seen[*k]) {
          seen[*k] = 1;
          stack.push_back(*k);
        }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!g.adjacent(members[i], members[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Edge-list text format
// ---------------------------------------------------------------------------

enum class ParseErrorKind {
  malformed_line,
  vertex_out_of_range,
  duplicate_edge,
  self_loop,
  missing_header,
  edge_count_mismatch,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  [[nodiscard]] ParseErrorKind kind() const { return kind_; }
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

/// Parses whitespace-separated non-negative decimal integers.
inline std::optional<std::vector<std::uint64_t>> parse_numbers(std::string_view s) {
  std::vector<std::uint64_t> out;
  s = trim(s);
  while (!s.empty()) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr == s.data()) return std::nullopt;
    out.push_back(value);
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    if (!s.empty() && s.front() != ' ' && s.front() != '\t') return std::nullopt;
    s = trim(s);
  }
  return out;
}

}  // namespace detail

/// Parses "n m" followed by m lines "u v". Lines starting with '#' are comments.
inline Graph parse_edge_list(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> adj;
  std::size_t header_line = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    if (detail::skippable(lines[i])) continue;
    auto nums = detail::parse_numbers(lines[i]);
    if (!nums || nums->size() != 2)
      throw ParseError(ParseErrorKind::malformed_line, lineno,
                       "expected two integers, got '" + std::string(lines[i]) + "'");
    if (!header) {
      header = {(*nums)[0], (*nums)[1]};
      header_line = lineno;
      if (header->first > std::numeric_limits<Vertex>::max() / 2)
        throw ParseError(ParseErrorKind::malformed_line, lineno, "vertex count too large");
      adj.resize(header->first);
      continue;
    }
    const auto u = (*nums)[0], v = (*nums)[1];
    if (u >= header->first || v >= header->first)
      throw ParseError(ParseErrorKind::vertex_out_of_range, lineno,
                       "vertex index out of range in '" + std::string(lines[i]) + "'");
    if (u == v)
      throw ParseError(ParseErrorKind::self_loop, lineno,
                       "self-loop at " + std::to_string(u));
    auto a = static_cast<Vertex>(std::min(u, v));
    auto b = static_cast<Vertex>(std::max(u, v));
    if (std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end())
      throw ParseError(ParseErrorKind::duplicate_edge, lineno,
                       "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    adj[a].push_back(b);
    adj[b].push_back(a);
    edges.push_back({a, b});
  }
  if (!header) throw ParseError(ParseErrorKind::missing_header, lines.size(), "missing 'n m' header");
  if (edges.size() != header->second)
    throw ParseError(ParseErrorKind::edge_count_mismatch, header_line,
                     "header declares " + std::to_string(header->second) +
                         " edges, found " + std::to_string(edges.size()));
  return Graph::from_adjacency(std::move(adj));
}

/// Canonical edge-list text: header then edges ascending, LF endings.
inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// Labels file: lines "v label". Unlisted vertices get an empty label.
inline Graph parse_labels(std::string_view text, const Graph& g) {
  std::vector<std::string> labels(g.vertex_count());
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::skippable(lines[i])) continue;
    auto line = detail::trim(lines[i]);
    auto space = line.find_first_of(" \t");
    auto nums = detail::parse_numbers(line.substr(0, space));
    if (!nums || nums->size() != 1 || space == std::string_view::npos)
      throw ParseError(ParseErrorKind::malformed_line, i + 1,
                       "expected 'v label', got '" + std::string(lines[i]) + "'");
    if ((*nums)[0] >= g.vertex_count())
      throw ParseError(ParseErrorKind::vertex_out_of_range, i + 1,
                       "vertex index out of range");
    labels[(*nums)[0]] = std::string(detail::trim(line.substr(space)));
  }
  return g.with_labels(std::move(labels));
}

inline std::string to_labels_text(const Graph& g) {
  std::string out;
  if (!g.has_labels()) return out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!g.label(v).empty()) out += std::to_string(v) + " " + std::string(g.label(v)) + "\n";
  return out;
}

inline std::string_view role_color(std::string_view role) {
  if (role == "subset") return "lightblue";
  if (role == "element") return "orange";
  if (role == "element-pendant") return "khaki";
  if (role == "guard") return "palegreen";
  if (role == "guard-pendant") return "gray85";
  return "white";
}

/// Graphviz rendering; `highlight` vertices (e.g. claw centers) get a red outline.
inline std::string to_dot(const Graph& g, std::span<const Vertex> highlight = {}) {
  std::string out = "graph G {\n  node [shape=circle, style=filled];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v);
    if (!g.label(v).empty()) out += "\\n" + std::string(g.label(v));
    out += "\", fillcolor=\"" + std::string(role_color(g.label(v))) + "\"";
    if (std::find(highlight.begin(), highlight.end(), v) != highlight.end())
      out += ", color=red, penwidth=2";
    out += "];\n";
  }
  for (const auto& e : g.edges())
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace clawsplit
