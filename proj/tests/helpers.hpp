#pragma once

// shared generators for the randomized suites; everything is seeded so runs
// are reproducible

#include "dbraid/matrix.hpp"
#include "dbraid/scheme.hpp"

#include <random>
#include <utility>
#include <vector>

namespace dbraid::testing {

using Rng = std::mt19937_64;

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo = -20,
                               int hi = 20) {
  std::uniform_int_distribution<int> entry(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

// connected scheme: random spanning tree plus extra edges
inline NegativeColourScheme random_connected_scheme(Rng& rng, int max_r, int max_extra_edges,
                                                    int min_degree, int max_degree) {
  std::uniform_int_distribution<int> rdist(1, max_r);
  int r = rdist(rng);
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= r; ++v) {
    std::uniform_int_distribution<int> pick(1, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  std::uniform_int_distribution<int> extra(0, max_extra_edges);
  int want = extra(rng);
  std::uniform_int_distribution<int> vdist(1, r);
  for (int tries = 0; tries < 4 * want && want > 0; ++tries) {
    int a = vdist(rng), b = vdist(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end()) continue;
    edges.emplace_back(a, b);
    --want;
  }
  std::uniform_int_distribution<int> kdist(min_degree, max_degree);
  std::vector<Int> degrees;
  for (int v = 0; v < r; ++v) degrees.emplace_back(kdist(rng));
  return validate_scheme(r, std::move(edges), std::move(degrees));
}

}  // namespace dbraid::testing
