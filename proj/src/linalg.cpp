#include "netdesign/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "netdesign/errors.hpp"

namespace netdesign {

namespace {

double off_diagonal_norm(const SquareMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (i != j) s += a.at(i, j) * a.at(i, j);
  return std::sqrt(s);
}

double frobenius_norm(const SquareMatrix& a) {
  double s = 0.0;
  for (double x : a.data) s += x * x;
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const SquareMatrix& input, double tol, int max_sweeps) {
  const int n = input.n;
  SquareMatrix a = input;
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);  // row-major rotation product
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

  const double threshold = tol * std::max(1.0, frobenius_norm(input));
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep >= max_sweeps)
      throw NumericError("jacobi eigensolver did not converge after " +
                         std::to_string(sweep) + " sweeps");
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (apq == 0.0) continue;
        const double app = a.at(p, p);
        const double aqq = a.at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        // smaller-magnitude root for a stable rotation
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = a.at(k, p);
          const double akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a.at(p, k);
          const double aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[static_cast<std::size_t>(k) * n + p];
          const double vkq = v[static_cast<std::size_t>(k) * n + q];
          v[static_cast<std::size_t>(k) * n + p] = c * vkp - s * vkq;
          v[static_cast<std::size_t>(k) * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a.at(i, i) < a.at(j, j); });

  EigenDecomposition out;
  out.n = n;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a.at(order[k], order[k]);
    for (int i = 0; i < n; ++i)
      out.vectors[static_cast<std::size_t>(k) * n + i] =
          v[static_cast<std::size_t>(i) * n + order[k]];
  }
  return out;
}

}  // namespace netdesign
