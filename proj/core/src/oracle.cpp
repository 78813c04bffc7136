#include "nbpoly/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace nbpoly {

namespace {

void require_limit(int value, int limit, const char* what) {
  if (value > limit)
    throw OracleLimitError(std::string(what) + ": size " + std::to_string(value) +
                           " exceeds limit " + std::to_string(limit));
}

std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint64_t> mask(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : g.neighbors(v)) mask[static_cast<std::size_t>(v)] |= 1ULL << u;
  return mask;
}

Polynomial counts_to_poly(const std::vector<std::uint64_t>& by_size) {
  std::vector<Polynomial::Coeff> coeffs;
  coeffs.reserve(by_size.size());
  for (std::uint64_t c : by_size) coeffs.emplace_back(c);
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial brute_neighborhood_poly(const Graph& g, int limit) {
  const int n = g.vertex_count();
  require_limit(n, limit, "brute_neighborhood_poly");
  const auto nbr = neighbor_masks(g);
  std::vector<std::uint64_t> by_size(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t sub = 0; sub < (1ULL << n); ++sub) {
    for (std::uint64_t m : nbr) {
      if ((sub & ~m) == 0) {
        ++by_size[static_cast<std::size_t>(std::popcount(sub))];
        break;
      }
    }
  }
  return counts_to_poly(by_size);
}

std::uint64_t brute_neighborhood_count(const Graph& g, int limit) {
  const int n = g.vertex_count();
  require_limit(n, limit, "brute_neighborhood_count");
  const auto nbr = neighbor_masks(g);
  std::uint64_t count = 0;
  for (std::uint64_t sub = 0; sub < (1ULL << n); ++sub)
    for (std::uint64_t m : nbr)
      if ((sub & ~m) == 0) {
        ++count;
        break;
      }
  return count;
}

Polynomial brute_domination_poly(const Graph& g, int limit) {
  const int n = g.vertex_count();
  require_limit(n, limit, "brute_domination_poly");
  const auto nbr = neighbor_masks(g);
  const std::uint64_t all = n == 0 ? 0 : ((1ULL << n) - 1);
  std::vector<std::uint64_t> by_size(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t sub = 0; sub < (1ULL << n); ++sub) {
    std::uint64_t covered = sub;
    std::uint64_t rest = sub;
    while (rest != 0) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      covered |= nbr[static_cast<std::size_t>(v)];
    }
    if (covered == all) ++by_size[static_cast<std::size_t>(std::popcount(sub))];
  }
  return counts_to_poly(by_size);
}

bool check_complement_identity(const Graph& g, int limit) {
  const int n = g.vertex_count();
  require_limit(n, limit, "check_complement_identity");
  Polynomial lhs = brute_domination_poly(complement(g), limit) + brute_neighborhood_poly(g, limit);
  return lhs == Polynomial::binomial_power(n);
}

namespace {

// Walks all periphery subsets; `anchor` carries the common neighborhood of
// the chosen prefix inside the clique. Empty anchors prune the subtree:
// adding more periphery vertices can only shrink the intersection.
void collect_anchor_data(const Graph& g, const std::vector<int>& periphery, std::size_t idx,
                         const VertexSet& anchor, int chosen, AnchorMap& out) {
  if (idx == periphery.size()) {
    out[anchor] += Polynomial::monomial(chosen);
    return;
  }
  collect_anchor_data(g, periphery, idx + 1, anchor, chosen, out);
  VertexSet next = intersect(anchor, g.neighbors(periphery[idx]));
  if (!next.empty()) collect_anchor_data(g, periphery, idx + 1, next, chosen + 1, out);
}

}  // namespace

AnchorMap brute_anchor_data(const Graph& g, const VertexSet& clique, int periphery_limit) {
  if (clique.empty() || !is_clique(g, clique))
    throw std::invalid_argument("brute_anchor_data: argument is not a non-empty clique");
  const VertexSet per = periphery(g, clique);
  require_limit(per.size(), periphery_limit, "brute_anchor_data periphery");
  std::vector<int> plist(per.begin(), per.end());
  AnchorMap out;
  collect_anchor_data(g, plist, 0, clique, 0, out);
  return out;
}

std::vector<VertexSet> closure_anchor_family(const Graph& g, const VertexSet& clique) {
  if (clique.empty() || !is_clique(g, clique))
    throw std::invalid_argument("closure_anchor_family: argument is not a non-empty clique");
  const VertexSet per = periphery(g, clique);
  std::set<VertexSet, VertexSetOrder> family;
  std::vector<VertexSet> work = {clique};
  family.insert(clique);
  while (!work.empty()) {
    VertexSet a = std::move(work.back());
    work.pop_back();
    for (int w : per) {
      VertexSet next = intersect(a, g.neighbors(w));
      if (next.empty()) continue;
      if (family.insert(next).second) work.push_back(std::move(next));
    }
  }
  return {family.begin(), family.end()};
}

namespace {

// Enumerates subsets W of u, carrying the common neighborhood of the chosen
// prefix. Tallies are indexed by |common neighborhood| with the
// inclusion-exclusion sign; phi counts subsets with no common neighbor by
// their size. No pruning: empty intersections still contribute to phi.
void walk_attachment(const Graph& g, const std::vector<int>& u, std::size_t idx,
                     const VertexSet& common, int chosen, std::vector<long long>& signed_by_size,
                     std::vector<long long>& phi_by_size) {
  if (idx == u.size()) {
    if (chosen == 0) return;
    if (common.empty()) ++phi_by_size[static_cast<std::size_t>(chosen)];
    const long long sign = (chosen % 2 == 1) ? 1 : -1;
    signed_by_size[static_cast<std::size_t>(common.size())] += sign;
    return;
  }
  walk_attachment(g, u, idx + 1, common, chosen, signed_by_size, phi_by_size);
  VertexSet next = chosen == 0 ? g.neighbors(u[idx]) : intersect(common, g.neighbors(u[idx]));
  walk_attachment(g, u, idx + 1, next, chosen + 1, signed_by_size, phi_by_size);
}

}  // namespace

Polynomial general_attachment(const Graph& g, const Polynomial& n_g, const VertexSet& u,
                              int limit) {
  require_limit(u.size(), limit, "general_attachment subset");
  if (!u.empty() && (u.front() < 0 || u.back() >= g.vertex_count()))
    throw std::invalid_argument("general_attachment: vertex out of range");
  std::vector<long long> signed_by_size(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  std::vector<long long> phi_by_size(static_cast<std::size_t>(u.size()) + 1, 0);
  std::vector<int> ulist(u.begin(), u.end());
  walk_attachment(g, ulist, 0, VertexSet{}, 0, signed_by_size, phi_by_size);

  Polynomial result = n_g;
  for (std::size_t k = 0; k < phi_by_size.size(); ++k)
    if (phi_by_size[k] != 0)
      result += Polynomial::monomial(static_cast<int>(k), phi_by_size[k]);
  for (std::size_t d = 0; d < signed_by_size.size(); ++d)
    if (signed_by_size[d] != 0)
      result += (Polynomial::binomial_power(static_cast<int>(d)) *
                 Polynomial::constant(signed_by_size[d]))
                    .shifted(1);
  return result;
}

Polynomial replay_attachment(const Graph& g, const EliminationOrder& order, int limit) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.order.size()) != n)
    throw std::invalid_argument("replay_attachment: order size mismatch");
  if (n == 0) return Polynomial{};
  std::vector<int> attach_of(static_cast<std::size_t>(n), -1);
  for (int t = 0; t < n; ++t)
    attach_of[static_cast<std::size_t>(order.order[static_cast<std::size_t>(n - 1 - t)])] = t;

  std::vector<std::vector<int>> adj;  // grows one vertex per step, attach labels
  adj.reserve(static_cast<std::size_t>(n));
  adj.emplace_back();
  Polynomial poly = Polynomial::one();
  for (int t = 1; t < n; ++t) {
    const int orig = order.order[static_cast<std::size_t>(n - 1 - t)];
    std::vector<int> earlier;
    for (int w : g.neighbors(orig)) {
      const int aw = attach_of[static_cast<std::size_t>(w)];
      if (aw < t) earlier.push_back(aw);
    }
    VertexSet u = VertexSet::from_unsorted(std::move(earlier));
    poly = general_attachment(Graph::from_adjacency(adj), poly, u, limit);
    adj.emplace_back();
    for (int w : u) {
      adj[static_cast<std::size_t>(w)].push_back(t);
      adj[static_cast<std::size_t>(t)].push_back(w);
    }
  }
  return poly;
}

Polynomial cograph_combine(CographOp op, const Polynomial& p1, const Polynomial& p2, int n1,
                           int n2) {
  switch (op) {
    case CographOp::kUnion:
      return p1 + p2 - Polynomial::one();
    case CographOp::kJoin:
      return Polynomial::binomial_power(n2) * p1 + Polynomial::binomial_power(n1) * p2 - p1 * p2;
  }
  throw std::invalid_argument("cograph_combine: unknown operation");
}

}  // namespace nbpoly
