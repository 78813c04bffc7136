#include "nbpoly/elimination.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

#include "nbpoly/random.hpp"

namespace nbpoly {

EliminationOrder lex_bfs(const Graph& g, std::optional<std::uint64_t> tie_seed) {
  const int n = g.vertex_count();
  std::vector<int> visit;
  visit.reserve(static_cast<std::size_t>(n));
  std::optional<std::mt19937_64> rng;
  if (tie_seed) rng.emplace(*tie_seed);

  // Ordered partition of the unvisited vertices. The front class holds the
  // lexicographically largest labels; visiting a pivot splits every class S
  // into (S ∩ N(pivot), S \ N(pivot)) with the neighbor part in front.
  std::list<std::vector<int>> classes;
  if (n > 0) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    classes.push_back(std::move(all));
  }

  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  while (!classes.empty()) {
    std::vector<int>& head = classes.front();
    std::size_t pick = 0;
    if (rng) {
      pick = uniform_below(*rng, head.size());
    } else {
      pick = static_cast<std::size_t>(
          std::min_element(head.begin(), head.end()) - head.begin());
    }
    const int pivot = head[pick];
    head.erase(head.begin() + static_cast<std::ptrdiff_t>(pick));
    if (head.empty()) classes.pop_front();
    visit.push_back(pivot);
    removed[static_cast<std::size_t>(pivot)] = 1;

    const VertexSet& nb = g.neighbors(pivot);
    for (auto it = classes.begin(); it != classes.end();) {
      std::vector<int> in, out;
      for (int v : *it) (nb.contains(v) ? in : out).push_back(v);
      if (in.empty() || out.empty()) {
        ++it;
        continue;
      }
      *it = std::move(out);
      classes.insert(it, std::move(in));  // neighbor part ranks ahead
      ++it;
    }
  }

  // Reverse the visit order: the last visited vertex is eliminated first.
  std::reverse(visit.begin(), visit.end());
  return EliminationOrder{std::move(visit)};
}

std::optional<int> first_peo_violation(const Graph& g, const EliminationOrder& ord) {
  const int n = g.vertex_count();
  if (static_cast<int>(ord.order.size()) != n)
    throw std::invalid_argument("first_peo_violation: order is not a permutation");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = ord.order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1)
      throw std::invalid_argument("first_peo_violation: order is not a permutation");
    pos[static_cast<std::size_t>(v)] = i;
  }
  std::vector<int> later;
  for (int i = 0; i < n; ++i) {
    const int v = ord.order[static_cast<std::size_t>(i)];
    later.clear();
    for (int u : g.neighbors(v))
      if (pos[static_cast<std::size_t>(u)] > i) later.push_back(u);
    if (later.size() <= 1) continue;
    // Parent check: the earliest later neighbor must be adjacent to the rest.
    int parent = later.front();
    for (int u : later)
      if (pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(parent)]) parent = u;
    for (int u : later)
      if (u != parent && !g.has_edge(parent, u)) return v;
  }
  return std::nullopt;
}

bool is_peo(const Graph& g, const EliminationOrder& ord) {
  return !first_peo_violation(g, ord).has_value();
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> out;
  std::vector<int> stack, members;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    const int id = static_cast<int>(out.size());
    comp[static_cast<std::size_t>(s)] = id;
    stack = {s};
    members.clear();
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int u : g.neighbors(v))
        if (comp[static_cast<std::size_t>(u)] == -1) {
          comp[static_cast<std::size_t>(u)] = id;
          stack.push_back(u);
        }
    }
    out.push_back(VertexSet::from_unsorted(std::move(members)));
    members = {};
  }
  return out;
}

std::variant<EliminationOrder, NotChordal> find_peo(const Graph& g) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (const VertexSet& comp : connected_components(g)) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    EliminationOrder local = lex_bfs(sub.graph);
    for (int v : local.order) order.push_back(sub.original[static_cast<std::size_t>(v)]);
  }
  EliminationOrder candidate{std::move(order)};
  if (auto bad = first_peo_violation(g, candidate))
    return NotChordal{std::move(candidate), *bad};
  return candidate;
}

}  // namespace nbpoly
