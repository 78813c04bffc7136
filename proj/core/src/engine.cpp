#include "nbpoly/engine.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace nbpoly {

AnchorMap restrict_record(const CliqueRecord& rec, const VertexSet& clique) {
  if (clique.empty() || !is_subset(clique, rec.clique))
    throw std::invalid_argument("restrict_record: clique must be a non-empty subset");
  AnchorMap out;
  for (const auto& [anchor, poly] : rec.anchors) {
    VertexSet cut = intersect(anchor, clique);
    if (cut.empty()) continue;
    out[std::move(cut)] += poly;
  }
  const int spare = rec.clique.size() - clique.size();
  if (spare > 0) {
    const Polynomial factor = Polynomial::binomial_power(spare);
    for (auto& [anchor, poly] : out) poly = poly * factor;
  }
  return out;
}

Polynomial local_neighborhood_gf(const AnchorMap& restricted, int clique_size) {
  const Polynomial full = Polynomial::binomial_power(clique_size);
  Polynomial sum;
  for (const auto& [anchor, poly] : restricted) {
    Polynomial extensions =
        full - Polynomial::binomial_power(clique_size - anchor.size()).shifted(anchor.size());
    sum += poly * extensions;
  }
  return sum;
}

Polynomial attachment_delta(const AnchorMap& restricted, int clique_size,
                            bool clique_was_maximal) {
  Polynomial delta = local_neighborhood_gf(restricted, clique_size).shifted(1);
  if (clique_was_maximal) delta += Polynomial::monomial(clique_size);
  return delta;
}

CliqueRecord spawn_record(const AnchorMap& restricted, const VertexSet& clique, int v) {
  CliqueRecord rec;
  rec.clique = with_vertex(clique, v);
  rec.anchors = restricted;
  auto it = rec.anchors.find(clique);
  if (it == rec.anchors.end())
    throw std::invalid_argument("spawn_record: restricted data lacks the clique anchor");
  it->second -= Polynomial::one();  // the empty periphery set now anchors at clique+v
  if (it->second.is_zero()) rec.anchors.erase(it);
  rec.anchors.emplace(rec.clique, Polynomial::one());
  return rec;
}

CliqueRecord refresh_record(const CliqueRecord& rec, const VertexSet& clique) {
  const VertexSet a0 = intersect(rec.clique, clique);
  if (a0.empty())
    throw std::invalid_argument("refresh_record: record does not meet the attachment clique");
  if (a0 == rec.clique)
    throw std::invalid_argument("refresh_record: attachment clique covers the record");
  AnchorMap buckets;  // A'∩A0 -> sum of P(A') over old anchors
  for (const auto& [anchor, poly] : rec.anchors) {
    VertexSet cut = intersect(anchor, a0);
    if (cut.empty()) continue;
    buckets[std::move(cut)] += poly;
  }
  CliqueRecord out{rec.clique, rec.anchors};
  for (auto& [anchor, sum] : buckets) out.anchors[anchor] += sum.shifted(1);
  return out;
}

namespace {

int max_family_size(const std::vector<CliqueRecord>& records) {
  int best = 0;
  for (const CliqueRecord& r : records) best = std::max(best, static_cast<int>(r.anchors.size()));
  return best;
}

void check_record(const CliqueRecord& rec) {
  auto self = rec.anchors.find(rec.clique);
  if (self == rec.anchors.end() || self->second.constant_term() != 1)
    throw std::logic_error("engine: record clique anchor missing or constant term != 1");
  for (const auto& [anchor, poly] : rec.anchors) {
    if (anchor.empty() || !is_subset(anchor, rec.clique))
      throw std::logic_error("engine: anchor is not a non-empty sub-clique");
    if (poly.is_zero()) throw std::logic_error("engine: zero periphery polynomial stored");
    for (const auto& c : poly.coefficients())
      if (c < 0) throw std::logic_error("engine: negative periphery coefficient");
  }
}

Polynomial anchor_total(const AnchorMap& anchors) {
  Polynomial total;
  for (const auto& [anchor, poly] : anchors) total += poly;
  return total;
}

struct ComponentOutcome {
  Polynomial poly;
  int anchor_width = 0;
  int peak_width = 0;
};

// Runs the incremental construction on one connected component. `order` is
// the component's perfect elimination order; vertices are attached in
// reverse, each to its already-present neighbors (a clique). `original`
// maps component labels to input-graph ids for the stats.
ComponentOutcome run_component(const Graph& comp, const EliminationOrder& order,
                               const std::vector<int>& original, const ComputeOptions& opts,
                               std::vector<StepStats>& steps) {
  const int n = comp.vertex_count();

  // Relabel by attachment index: vertex attached at step t gets label t, so
  // every engine vertex set is sorted by attachment order and the clique of
  // step t lies entirely below t.
  std::vector<int> attach_of(static_cast<std::size_t>(n), -1);
  std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
  for (int t = 0; t < n; ++t) {
    const int cv = order.order[static_cast<std::size_t>(n - 1 - t)];
    attach_of[static_cast<std::size_t>(cv)] = t;
    comp_of[static_cast<std::size_t>(t)] = cv;
  }

  std::vector<std::vector<int>> grown;  // adjacency under attachment labels
  grown.resize(static_cast<std::size_t>(n));

  std::vector<CliqueRecord> records;
  Polynomial poly = Polynomial::one();
  records.push_back(CliqueRecord{VertexSet{0}, AnchorMap{{VertexSet{0}, Polynomial::one()}}});
  int peak = 1;

  auto notify = [&](int step, int vertex) {
    if (!opts.observer) return;
    std::vector<std::vector<int>> prefix(grown.begin(),
                                         grown.begin() + static_cast<std::ptrdiff_t>(step) + 1);
    Graph snapshot_graph = Graph::from_adjacency(std::move(prefix));
    opts.observer(EngineSnapshot{snapshot_graph, records, poly, step, vertex});
  };
  notify(0, 0);

  for (int t = 1; t < n; ++t) {
    // Attachment clique: already-placed neighbors of the new vertex.
    std::vector<int> cl;
    for (int u : comp.neighbors(comp_of[static_cast<std::size_t>(t)])) {
      const int au = attach_of[static_cast<std::size_t>(u)];
      if (au < t) cl.push_back(au);
    }
    VertexSet clique = VertexSet::from_unsorted(std::move(cl));
    if (clique.empty())
      throw std::logic_error("engine: disconnected component order");

    std::size_t host = records.size();
    for (std::size_t i = 0; i < records.size(); ++i)
      if (is_subset(clique, records[i].clique)) {
        host = i;
        break;
      }
    if (host == records.size())
      throw std::logic_error("engine: no maximal clique contains the attachment clique");
    const bool was_maximal = records[host].clique == clique;
    const int host_size = records[host].clique.size();

    AnchorMap restricted = restrict_record(records[host], clique);
    poly += attachment_delta(restricted, clique.size(), was_maximal);
    CliqueRecord fresh = spawn_record(restricted, clique, t);

    if (was_maximal) records.erase(records.begin() + static_cast<std::ptrdiff_t>(host));

    int touched = 0;
    for (CliqueRecord& rec : records) {
      if (!intersects(rec.clique, clique)) continue;
      ++touched;
      if (opts.validate) {
        const Polynomial before = anchor_total(rec.anchors);
        Polynomial meet;  // sum of P(A') over anchors meeting A0
        const VertexSet a0 = intersect(rec.clique, clique);
        for (const auto& [anchor, p] : rec.anchors)
          if (intersects(anchor, a0)) meet += p;
        rec = refresh_record(rec, clique);
        if (anchor_total(rec.anchors) != before + meet.shifted(1))
          throw std::logic_error("engine: refresh conservation violated");
      } else {
        rec = refresh_record(rec, clique);
      }
    }
    records.push_back(std::move(fresh));

    for (int u : comp.neighbors(comp_of[static_cast<std::size_t>(t)])) {
      const int au = attach_of[static_cast<std::size_t>(u)];
      if (au < t) {
        grown[static_cast<std::size_t>(au)].push_back(t);
        grown[static_cast<std::size_t>(t)].push_back(au);
      }
    }

    if (opts.validate)
      for (const CliqueRecord& rec : records) check_record(rec);

    const int family_now = max_family_size(records);
    peak = std::max(peak, family_now);
    steps.push_back(StepStats{original[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(t)])],
                              clique.size(), host_size, touched,
                              static_cast<int>(records.size()), family_now});
    if (opts.trace) {
      const StepStats& s = steps.back();
      *opts.trace << "step=" << t << " vertex=" << s.vertex << " clique=" << s.clique_size
                  << " host=" << s.host_size << " touched=" << s.records_touched
                  << " records=" << s.record_count << " max_family=" << s.max_family_size
                  << '\n';
    }
    notify(t, t);
  }

  return ComponentOutcome{std::move(poly), max_family_size(records), peak};
}

}  // namespace

ComputeOutcome compute(const Graph& g, const ComputeOptions& opts) {
  ComputationResult result;
  if (g.vertex_count() == 0) return result;  // zero polynomial, width 0

  struct PreparedComponent {
    InducedSubgraph sub;
    EliminationOrder order;
  };
  std::vector<PreparedComponent> prepared;
  std::vector<int> candidate;
  candidate.reserve(static_cast<std::size_t>(g.vertex_count()));
  std::optional<int> failing;
  for (const VertexSet& comp : connected_components(g)) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    EliminationOrder order = lex_bfs(sub.graph, opts.tie_seed);
    if (!failing) {
      if (auto bad = first_peo_violation(sub.graph, order))
        failing = sub.original[static_cast<std::size_t>(*bad)];
    }
    for (int v : order.order) candidate.push_back(sub.original[static_cast<std::size_t>(v)]);
    prepared.push_back(PreparedComponent{std::move(sub), std::move(order)});
  }
  if (failing) return NotChordal{EliminationOrder{std::move(candidate)}, *failing};

  bool first = true;
  for (const PreparedComponent& pc : prepared) {
    ComponentOutcome out =
        run_component(pc.sub.graph, pc.order, pc.sub.original, opts, result.steps);
    if (first) {
      result.poly = std::move(out.poly);
      first = false;
    } else {
      // disjoint union: only the empty set is shared between the complexes
      result.poly += out.poly;
      result.poly -= Polynomial::one();
    }
    result.anchor_width = std::max(result.anchor_width, out.anchor_width);
    result.peak_width = std::max(result.peak_width, out.peak_width);
  }
  return result;
}

std::variant<int, NotChordal> anchor_width(const Graph& g, const ComputeOptions& opts) {
  ComputeOutcome outcome = compute(g, opts);
  if (auto* bad = std::get_if<NotChordal>(&outcome)) return std::move(*bad);
  return std::get<ComputationResult>(outcome).anchor_width;
}

}  // namespace nbpoly
