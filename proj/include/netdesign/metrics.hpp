#pragma once

#include <vector>

#include "netdesign/graph.hpp"
#include "netdesign/linalg.hpp"

namespace netdesign {

/// Dense Laplacian L = D - A.
SquareMatrix laplacian(const Graph& g);

/// Eigenvalues of the Laplacian, ascending. For any graph the first is 0.
std::vector<double> spectrum(const Graph& g);

/// BFS reachability from vertex 0. Agrees with lambda_2(L) > 0.
bool is_connected(const Graph& g);

/// Algebraic connectivity lambda_2 from a precomputed spectrum.
inline double algebraic_connectivity(const std::vector<double>& spec) { return spec[1]; }

/// Eigenratio lambda_max / lambda_2 of a connected graph.
double eigenratio(const Graph& g);

struct DegreeStats {
  std::vector<int> d;
  double mean = 0.0;
  double var = 0.0;               // sample variance, 1/(n-1)
  double norm_var = 0.0;          // in [0, 1]; 0 for empty and complete graphs
  std::vector<double> norm_dev;   // (d_i - mean) / (n_v - 1)
};

/// Degree statistics. norm_var is var scaled by (n_v-1)/(n_v n_e (1-s)) for
/// density s strictly between 0 and 1, and defined as 0 at s in {0, 1}.
DegreeStats degree_stats(const Graph& g);

struct BetweennessStats {
  std::vector<double> b;          // unordered pairs j < k, both != i
  double mean = 0.0;
  double var = 0.0;
  double norm_var = 0.0;          // 4 var / ((n_v-1)(n_v-2)^2)
  std::vector<double> norm_dev;   // (b_i - mean) / ((n_v-1)(n_v-2)/2)
};

/// Betweenness centralities via Brandes' accumulation, halved so each
/// unordered pair counts once. Requires a connected graph (domain error
/// otherwise).
BetweennessStats betweenness_stats(const Graph& g);

struct StructuralStats {
  double avg_shortest_path = 0.0;
  double var_shortest_path = 0.0;      // sample variance over unordered pairs
  int diameter = 0;
  bool has_cycle = false;
  int girth = 0;                       // 0 when the graph is acyclic
  double mean_shortest_return_cycle = 0.0;  // over vertices lying on a cycle; 0 if none
  double global_clustering = 0.0;      // transitivity: 3 * triangles / connected triples
  std::vector<double> local_clustering;
  std::vector<double> eigenvector_centrality;  // unit norm, max-|entry| positive
};

/// Path, cycle, clustering and centrality summary of a connected graph.
StructuralStats structural_stats(const Graph& g);

/// All-pairs BFS distances; -1 marks unreachable pairs.
std::vector<std::vector<int>> bfs_distances(const Graph& g);

/// Length of the shortest cycle through v, or 0 if none exists.
int shortest_cycle_through(const Graph& g, int v);

}  // namespace netdesign
