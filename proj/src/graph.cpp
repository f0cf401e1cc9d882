#include "netdesign/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace netdesign {

int edge_index(int n, int u, int v) {
  // rank of (u, v) with u < v in row-major upper-triangle order
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Edge edge_from_index(int n, int index) {
  int u = 0;
  int row = n - 1;
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return {u, u + 1 + index};
}

std::vector<Edge> all_edges(int n) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

Graph::Graph(int n_v, std::vector<Edge> edges) : n_v_(n_v) {
  if (n_v < 1) throw std::invalid_argument("graph needs at least one vertex");
  adj_matrix_.assign(static_cast<std::size_t>(n_v) * n_v, 0);
  adjacency_.resize(n_v);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_v) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self loops are not allowed");
    auto& cell = adj_matrix_[static_cast<std::size_t>(u) * n_v + v];
    if (cell) throw std::invalid_argument("duplicate edge");
    cell = 1;
    adj_matrix_[static_cast<std::size_t>(v) * n_v + u] = 1;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

double Graph::density() const {
  if (n_v_ < 2) return 0.0;
  return 2.0 * edge_count() / (static_cast<double>(n_v_) * (n_v_ - 1));
}

bool Graph::has_edge(int u, int v) const {
  return adj_matrix_[static_cast<std::size_t>(u) * n_v_ + v] != 0;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_v_);
  for (int v = 0; v < n_v_; ++v) d[v] = degree(v);
  return d;
}

std::vector<std::uint8_t> Graph::edge_bits() const {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(max_edge_count()), 0);
  for (auto [u, v] : edges_) bits[edge_index(n_v_, u, v)] = 1;
  return bits;
}

Graph Graph::from_edge_bits(int n_v, const std::vector<std::uint8_t>& bits) {
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(bits.size()); ++i)
    if (bits[i]) edges.push_back(edge_from_index(n_v, i));
  return Graph(n_v, std::move(edges));
}

nlohmann::json Graph::to_json() const {
  nlohmann::json e = nlohmann::json::array();
  for (auto [u, v] : edges_) e.push_back({u, v});
  return nlohmann::json{{"n_v", n_v_}, {"edges", std::move(e)}};
}

Graph Graph::from_json(const nlohmann::json& j) {
  int n_v = j.at("n_v").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(n_v, std::move(edges));
}

}  // namespace netdesign
