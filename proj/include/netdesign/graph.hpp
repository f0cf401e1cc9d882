#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace netdesign {

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<int, int>;

/// Lexicographic rank of edge {u, v} (u < v) among all pairs on n vertices.
int edge_index(int n, int u, int v);

/// Inverse of edge_index.
Edge edge_from_index(int n, int index);

/// All possible edges on n vertices in lexicographic order.
std::vector<Edge> all_edges(int n);

/// Immutable simple undirected unweighted graph. Vertices are 0-based
/// internally; user-facing text output is 1-based. Edges are kept in
/// canonical form: first < second, sorted lexicographically.
class Graph {
 public:
  /// Validates and canonicalizes. Throws std::invalid_argument on self
  /// loops, duplicate edges, or out-of-range endpoints.
  Graph(int n_v, std::vector<Edge> edges);

  int vertex_count() const { return n_v_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int min_edge_count() const { return n_v_ - 1; }
  int max_edge_count() const { return n_v_ * (n_v_ - 1) / 2; }
  double density() const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  std::vector<int> degrees() const;

  /// Edge set as a bit vector indexed by edge_index (the genome encoding).
  std::vector<std::uint8_t> edge_bits() const;
  static Graph from_edge_bits(int n_v, const std::vector<std::uint8_t>& bits);

  nlohmann::json to_json() const;
  static Graph from_json(const nlohmann::json& j);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_v_ == b.n_v_ && a.edges_ == b.edges_;
  }

 private:
  int n_v_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::uint8_t> adj_matrix_;  // n_v * n_v, 0/1
};

}  // namespace netdesign
