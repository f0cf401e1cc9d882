#include "netdesign/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace netdesign {

Graph complete_graph(int n_v) { return Graph(n_v, all_edges(n_v)); }

Graph path_graph(int n_v) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n_v; ++i) edges.emplace_back(i, i + 1);
  return Graph(n_v, std::move(edges));
}

Graph ring_graph(int n_v) {
  if (n_v < 3) throw std::invalid_argument("ring needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n_v; ++i) edges.emplace_back(i, (i + 1) % n_v);
  return Graph(n_v, std::move(edges));
}

Graph star_graph(int n_v, int center) {
  if (center < 0 || center >= n_v) throw std::invalid_argument("star center out of range");
  std::vector<Edge> edges;
  for (int i = 0; i < n_v; ++i)
    if (i != center) edges.emplace_back(center, i);
  return Graph(n_v, std::move(edges));
}

Graph k_nearest_graph(int n_v, int k) {
  if (k < 1 || 2 * k + 1 > n_v)
    throw std::invalid_argument("k nearest neighbors needs 2k+1 <= n_v");
  std::vector<Edge> edges;
  for (int i = 0; i < n_v; ++i)
    for (int j = 1; j <= k; ++j) edges.emplace_back(i, (i + j) % n_v);
  return Graph(n_v, std::move(edges));
}

Graph erdos_renyi_graph(int n_v, double p, Rng& rng) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0, 1]");
  std::vector<Edge> edges;
  for (int u = 0; u < n_v; ++u)
    for (int v = u + 1; v < n_v; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n_v, std::move(edges));
}

Graph watts_strogatz_graph(int n_v, int k, double rewire_prob, Rng& rng) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("neighbor count must be even and >= 2");
  if (k + 1 > n_v) throw std::invalid_argument("neighbor count too large for n_v");
  const int half = k / 2;
  std::vector<std::vector<char>> adj(n_v, std::vector<char>(n_v, 0));
  auto connect = [&](int a, int b, char on) { adj[a][b] = adj[b][a] = on; };
  for (int i = 0; i < n_v; ++i)
    for (int j = 1; j <= half; ++j) connect(i, (i + j) % n_v, 1);

  for (int j = 1; j <= half; ++j) {
    for (int i = 0; i < n_v; ++i) {
      int v = (i + j) % n_v;
      if (!adj[i][v]) continue;  // already rewired away
      if (!rng.bernoulli(rewire_prob)) continue;
      // replace far endpoint with a uniformly random non-neighbor of i
      std::vector<int> candidates;
      for (int w = 0; w < n_v; ++w)
        if (w != i && !adj[i][w]) candidates.push_back(w);
      if (candidates.empty()) continue;
      int w = candidates[rng.bounded(candidates.size())];
      connect(i, v, 0);
      connect(i, w, 1);
    }
  }

  std::vector<Edge> edges;
  for (int u = 0; u < n_v; ++u)
    for (int v = u + 1; v < n_v; ++v)
      if (adj[u][v]) edges.emplace_back(u, v);
  return Graph(n_v, std::move(edges));
}

Graph barabasi_albert_graph(int n_v, int m, Rng& rng) {
  if (m < 1 || m + 1 > n_v) throw std::invalid_argument("attachment count too large for n_v");
  std::vector<Edge> edges = all_edges(m + 1);
  // one entry per incident edge end, so uniform draws are degree-weighted
  std::vector<int> targets;
  for (auto [u, v] : edges) {
    targets.push_back(u);
    targets.push_back(v);
  }
  for (int v = m + 1; v < n_v; ++v) {
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < m) {
      int u = targets[rng.bounded(targets.size())];
      if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) chosen.push_back(u);
    }
    for (int u : chosen) {
      edges.emplace_back(u, v);
      targets.push_back(u);
      targets.push_back(v);
    }
  }
  return Graph(n_v, std::move(edges));
}

Graph random_edge_graph(int n_v, int e, Rng& rng) {
  const int max_e = n_v * (n_v - 1) / 2;
  if (e < 0 || e > max_e) throw std::invalid_argument("edge count outside [0, n_e_max]");
  auto picks = rng.sample_indices(e, max_e);
  std::vector<Edge> edges;
  edges.reserve(e);
  for (int idx : picks) edges.push_back(edge_from_index(n_v, idx));
  return Graph(n_v, std::move(edges));
}

}  // namespace netdesign
