#include "netdesign/degree_sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace netdesign {

bool is_graphical(const std::vector<int>& d) {
  for (int x : d)
    if (x < 0) throw std::invalid_argument("degree entries must be nonnegative");
  const int n = static_cast<int>(d.size());
  for (int x : d)
    if (x > n - 1) return false;
  long long total = std::accumulate(d.begin(), d.end(), 0LL);
  if (total % 2 != 0) return false;

  std::vector<int> s = d;
  std::sort(s.begin(), s.end(), std::greater<int>());
  long long prefix = 0;
  for (int k = 1; k <= n; ++k) {
    prefix += s[k - 1];
    long long rhs = static_cast<long long>(k) * (k - 1);
    for (int i = k; i < n; ++i) rhs += std::min(s[i], k);
    if (prefix > rhs) return false;
  }
  return true;
}

Graph realize_degree_sequence(const std::vector<int>& d) {
  if (!is_graphical(d)) throw std::domain_error("degree sequence is not graphical");
  const int n = static_cast<int>(d.size());
  std::vector<int> residual = d;
  std::vector<Edge> edges;

  auto residual_graphical_after = [&](int i, int j) {
    auto r = residual;
    --r[i];
    --r[j];
    return is_graphical(r);
  };

  for (;;) {
    // unfinished vertex with the smallest positive residual degree
    int i = -1;
    for (int v = 0; v < n; ++v)
      if (residual[v] > 0 && (i < 0 || residual[v] < residual[i])) i = v;
    if (i < 0) break;

    std::vector<char> connected(n, 0);
    for (auto [u, v] : edges) {
      if (u == i) connected[v] = 1;
      if (v == i) connected[u] = 1;
    }
    while (residual[i] > 0) {
      int j = -1;
      for (int v = 0; v < n; ++v) {
        if (v == i || residual[v] <= 0 || connected[v]) continue;
        if (j >= 0 && residual[v] <= residual[j]) continue;
        if (residual_graphical_after(i, v)) j = v;
      }
      if (j < 0) throw std::domain_error("degree sequence realization got stuck");
      edges.emplace_back(std::min(i, j), std::max(i, j));
      connected[j] = 1;
      --residual[i];
      --residual[j];
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace netdesign
