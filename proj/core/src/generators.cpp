#include "nbpoly/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "nbpoly/random.hpp"

namespace nbpoly {

Graph gen_basic(BasicFamily family, int n) {
  if (n < 1) throw std::invalid_argument("gen_basic: n must be positive");
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case BasicFamily::kPath:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case BasicFamily::kCycle:
      if (n < 3) throw std::invalid_argument("gen_basic: cycle needs n >= 3");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, n - 1);
      break;
    case BasicFamily::kComplete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case BasicFamily::kStar:
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
  }
  return Graph(n, edges);
}

Graph gen_split(int m) {
  if (m < 1) throw std::invalid_argument("gen_split: m must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (j != i) edges.emplace_back(m + i, j);
  return Graph(2 * m, edges);
}

Graph gen_interval_family(int m) {
  if (m < 1) throw std::invalid_argument("gen_interval_family: m must be positive");
  std::vector<std::pair<int, int>> lohi;  // interval per vertex, endpoints in [-m, m]
  lohi.reserve(static_cast<std::size_t>(4 * m + 1));
  for (int i = 0; i <= m; ++i) lohi.emplace_back(-m, i);
  for (int i = -m + 1; i <= 0; ++i) lohi.emplace_back(i, m);
  for (int i = -m; i <= -1; ++i) lohi.emplace_back(-m, i);
  for (int i = 1; i <= m; ++i) lohi.emplace_back(i, m);
  const int n = static_cast<int>(lohi.size());
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (lohi[a].first <= lohi[b].second && lohi[b].first <= lohi[a].second)
        edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph gen_random_chordal(int n, int attach_max, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random_chordal: n must be positive");
  if (attach_max < 1) throw std::invalid_argument("gen_random_chordal: attach_max must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> cliques = {{0}};  // maximal cliques of the partial graph
  std::vector<std::pair<int, int>> edges;
  std::vector<int> pool;
  for (int v = 1; v < n; ++v) {
    std::size_t host = uniform_below(rng, cliques.size());
    const std::vector<int>& host_clique = cliques[host];
    int size = std::min(uniform_int(rng, 1, attach_max), static_cast<int>(host_clique.size()));
    pool = host_clique;
    for (int i = 0; i < size; ++i) {  // partial Fisher-Yates: uniform subset
      std::size_t j = static_cast<std::size_t>(i) +
                      uniform_below(rng, pool.size() - static_cast<std::size_t>(i));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    std::vector<int> attach(pool.begin(), pool.begin() + size);
    for (int u : attach) edges.emplace_back(u, v);
    if (size == static_cast<int>(host_clique.size())) {
      // the host is no longer maximal; the new clique supersedes it
      cliques[host] = std::move(cliques.back());
      cliques.pop_back();
    }
    attach.push_back(v);
    cliques.push_back(std::move(attach));
  }
  return Graph(n, edges);
}

}  // namespace nbpoly
