#pragma once

#include <vector>

#include "netdesign/graph.hpp"

namespace netdesign {

/// Erdos-Gallai test: true iff d is the degree sequence of some simple
/// graph. Throws std::invalid_argument on negative entries.
bool is_graphical(const std::vector<int>& d);

/// Builds a simple graph realizing d exactly. Edges are allocated
/// sequentially: the unfinished vertex with the smallest positive residual
/// degree is connected, one edge at a time, to the admissible vertex with
/// the largest residual degree (admissible = keeps the residual sequence
/// graphical). Ties break to the lowest index, so the result is
/// deterministic. Throws std::domain_error when d is not graphical.
Graph realize_degree_sequence(const std::vector<int>& d);

}  // namespace netdesign
