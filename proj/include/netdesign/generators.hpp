#pragma once

#include "netdesign/graph.hpp"
#include "netdesign/rng.hpp"

namespace netdesign {

Graph complete_graph(int n_v);
Graph path_graph(int n_v);
Graph ring_graph(int n_v);
Graph star_graph(int n_v, int center);

/// Ring lattice: each vertex joined to its k nearest neighbors on each side
/// (n_e = k * n_v). Requires 2k + 1 <= n_v.
Graph k_nearest_graph(int n_v, int k);

/// G(n, p): every pair independently with probability p.
Graph erdos_renyi_graph(int n_v, double p, Rng& rng);

/// Watts-Strogatz: ring lattice with k total neighbors per vertex (k even,
/// k/2 per side), then each lattice edge rewired with probability
/// rewire_prob to a uniformly random non-neighbor. Edge count stays n_v*k/2.
Graph watts_strogatz_graph(int n_v, int k, double rewire_prob, Rng& rng);

/// Barabasi-Albert preferential attachment: complete seed on m+1 vertices,
/// every later vertex attaches to m distinct existing vertices picked
/// proportionally to degree.
Graph barabasi_albert_graph(int n_v, int m, Rng& rng);

/// Uniformly random set of exactly e edges.
Graph random_edge_graph(int n_v, int e, Rng& rng);

}  // namespace netdesign
