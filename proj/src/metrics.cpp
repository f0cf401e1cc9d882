#include "netdesign/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace netdesign {

SquareMatrix laplacian(const Graph& g) {
  const int n = g.vertex_count();
  SquareMatrix l(n);
  for (int v = 0; v < n; ++v) l.at(v, v) = g.degree(v);
  for (auto [u, v] : g.edges()) {
    l.at(u, v) = -1.0;
    l.at(v, u) = -1.0;
  }
  return l;
}

std::vector<double> spectrum(const Graph& g) {
  return jacobi_eigen(laplacian(g)).values;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == n;
}

double eigenratio(const Graph& g) {
  auto spec = spectrum(g);
  return spec.back() / spec[1];
}

DegreeStats degree_stats(const Graph& g) {
  const int n = g.vertex_count();
  DegreeStats s;
  s.d = g.degrees();
  double sum = 0.0;
  for (int d : s.d) sum += d;
  s.mean = sum / n;
  double ss = 0.0;
  for (int d : s.d) ss += (d - s.mean) * (d - s.mean);
  s.var = n > 1 ? ss / (n - 1) : 0.0;
  s.norm_dev.resize(n);
  for (int i = 0; i < n; ++i) s.norm_dev[i] = n > 1 ? (s.d[i] - s.mean) / (n - 1) : 0.0;
  const double density = g.density();
  const int n_e = g.edge_count();
  if (density > 0.0 && density < 1.0)
    s.norm_var = (n - 1) / (n * n_e * (1.0 - density)) * s.var;
  else
    s.norm_var = 0.0;
  return s;
}

BetweennessStats betweenness_stats(const Graph& g) {
  if (!is_connected(g)) throw std::domain_error("betweenness needs a connected graph");
  const int n = g.vertex_count();
  std::vector<double> b(n, 0.0);

  // Brandes: one BFS per source, dependencies accumulated in reverse order.
  std::vector<int> dist(n), order;
  std::vector<double> sigma(n), delta(n);
  std::vector<std::vector<int>> preds(n);
  order.reserve(n);
  for (int src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    order.clear();

    dist[src] = 0;
    sigma[src] = 1.0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int w = *it;
      for (int v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != src) b[w] += delta[w];
    }
  }
  for (double& x : b) x *= 0.5;  // ordered pairs -> unordered

  BetweennessStats s;
  s.b = std::move(b);
  double sum = 0.0;
  for (double x : s.b) sum += x;
  s.mean = sum / n;
  double ss = 0.0;
  for (double x : s.b) ss += (x - s.mean) * (x - s.mean);
  s.var = n > 1 ? ss / (n - 1) : 0.0;
  s.norm_dev.resize(n);
  const double dev_scale = (n - 1) * (n - 2) / 2.0;
  for (int i = 0; i < n; ++i)
    s.norm_dev[i] = dev_scale > 0.0 ? (s.b[i] - s.mean) / dev_scale : 0.0;
  const double var_scale = static_cast<double>(n - 1) * (n - 2) * (n - 2);
  s.norm_var = var_scale > 0.0 ? 4.0 * s.var / var_scale : 0.0;
  return s;
}

std::vector<std::vector<int>> bfs_distances(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int src = 0; src < n; ++src) {
    auto& d = dist[src];
    d[src] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (d[w] < 0) {
          d[w] = d[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

int shortest_cycle_through(const Graph& g, int v) {
  // every cycle through v uses two incident edges; drop one and measure the
  // detour back
  const int n = g.vertex_count();
  int best = 0;
  for (int u : g.neighbors(v)) {
    std::vector<int> d(n, -1);
    d[v] = 0;
    std::deque<int> queue{v};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(x)) {
        if (x == v && w == u) continue;  // removed edge
        if (d[w] < 0) {
          d[w] = d[x] + 1;
          queue.push_back(w);
        }
      }
    }
    if (d[u] > 0) {
      int len = d[u] + 1;
      if (best == 0 || len < best) best = len;
    }
  }
  return best;
}

StructuralStats structural_stats(const Graph& g) {
  if (!is_connected(g)) throw std::domain_error("structural stats need a connected graph");
  const int n = g.vertex_count();
  StructuralStats s;

  auto dist = bfs_distances(g);
  std::vector<int> pair_dists;
  pair_dists.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  int diameter = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pair_dists.push_back(dist[i][j]);
      diameter = std::max(diameter, dist[i][j]);
    }
  s.diameter = diameter;
  if (!pair_dists.empty()) {
    double sum = 0.0;
    for (int d : pair_dists) sum += d;
    s.avg_shortest_path = sum / pair_dists.size();
    if (pair_dists.size() > 1) {
      double ss = 0.0;
      for (int d : pair_dists) ss += (d - s.avg_shortest_path) * (d - s.avg_shortest_path);
      s.var_shortest_path = ss / (pair_dists.size() - 1);
    }
  }

  int girth = 0;
  double cycle_sum = 0.0;
  int on_cycle = 0;
  for (int v = 0; v < n; ++v) {
    int len = shortest_cycle_through(g, v);
    if (len > 0) {
      cycle_sum += len;
      ++on_cycle;
      if (girth == 0 || len < girth) girth = len;
    }
  }
  s.girth = girth;
  s.has_cycle = girth > 0;
  s.mean_shortest_return_cycle = on_cycle > 0 ? cycle_sum / on_cycle : 0.0;

  // clustering
  long long triangles3 = 0;  // 3 * number of triangles, as closed triples
  long long triples = 0;
  s.local_clustering.assign(n, 0.0);
  for (int v = 0; v < n; ++v) {
    const auto& nb = g.neighbors(v);
    const int d = static_cast<int>(nb.size());
    int links = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (g.has_edge(nb[i], nb[j])) ++links;
    if (d >= 2) {
      s.local_clustering[v] = 2.0 * links / (static_cast<double>(d) * (d - 1));
      triples += static_cast<long long>(d) * (d - 1) / 2;
      triangles3 += links;
    }
  }
  s.global_clustering = triples > 0 ? static_cast<double>(triangles3) / triples : 0.0;

  // principal adjacency eigenvector, unit norm, largest-|entry| made positive
  SquareMatrix adj(n);
  for (auto [u, v] : g.edges()) {
    adj.at(u, v) = 1.0;
    adj.at(v, u) = 1.0;
  }
  auto eig = jacobi_eigen(adj);
  const double* pv = eig.vector(n - 1);
  s.eigenvector_centrality.assign(pv, pv + n);
  double norm = 0.0;
  int arg_abs_max = 0;
  for (int i = 0; i < n; ++i) {
    norm += pv[i] * pv[i];
    if (std::abs(pv[i]) > std::abs(s.eigenvector_centrality[arg_abs_max])) arg_abs_max = i;
  }
  norm = std::sqrt(norm);
  const double sign = s.eigenvector_centrality[arg_abs_max] < 0.0 ? -1.0 : 1.0;
  for (double& x : s.eigenvector_centrality) x *= sign / norm;

  return s;
}

}  // namespace netdesign
