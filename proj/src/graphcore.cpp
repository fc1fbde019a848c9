#include "kneser/graphcore.hpp"

#include <algorithm>
#include <limits>

namespace kneser {

const char* family_name(Family f) {
  switch (f) {
    case Family::kneser: return "kneser";
    case Family::exact_kneser: return "exact-kneser";
    case Family::gen_kneser: return "gen-kneser";
    case Family::gen_johnson: return "gen-johnson";
    case Family::external: return "external";
  }
  return "?";
}

Graph Graph::family_graph(Family family, int n, int k, std::uint64_t s_mask,
                          std::int64_t budget) {
  const std::int64_t count = binomial(n, k);
  if (budget < 1) throw std::invalid_argument("vertex budget must be at least 1");
  if (count > budget)
    throw BudgetExceeded("vertex count " + std::to_string(count) +
                         " exceeds budget " + std::to_string(budget));
  Graph g;
  g.family_ = family;
  g.n_ = n;
  g.k_ = k;
  g.s_mask_ = s_mask;
  g.vcount_ = count;
  g.verts_.reserve(static_cast<std::size_t>(count));
  std::uint64_t mask = first_k_subset_mask(k);
  for (std::int64_t rank = 0; rank < count; ++rank) {
    g.verts_.push_back(mask);
    if (rank + 1 < count) mask = next_k_subset_mask(mask);
  }
  return g;
}

Graph Graph::kneser(const KneserParams& params, std::int64_t budget) {
  Graph g = family_graph(Family::kneser, params.n, params.k, 1u, budget);
  g.r_ = params.r;
  return g;
}

Graph Graph::exact_formula(const KneserParams& base, int d, std::int64_t budget) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  std::uint64_t mask = 0;
  if (d == 1) {
    mask = 1u;
  } else if (d <= base.D) {
    const AdjInterval iv = exact_adjacency_interval(ExactParams(base, d));
    for (int s = iv.lo; s <= iv.hi; ++s) mask |= std::uint64_t{1} << s;
  }
  // d past the diameter leaves the mask empty: an edgeless graph.
  Graph g = family_graph(Family::exact_kneser, base.n, base.k, mask, budget);
  g.r_ = base.r;
  g.d_ = d;
  return g;
}

Graph Graph::exact_formula(const ExactParams& params, std::int64_t budget) {
  return exact_formula(params.base, params.d, budget);
}

Graph Graph::exact_from_mask(const KneserParams& base, int d,
                             std::uint64_t allowed_s, std::int64_t budget) {
  Graph g = family_graph(Family::exact_kneser, base.n, base.k, allowed_s, budget);
  g.r_ = base.r;
  g.d_ = d;
  return g;
}

Graph Graph::exact_by_bfs(const KneserParams& base, int d, std::int64_t budget) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  const Graph base_graph = kneser(base, budget);
  const DistanceProfile profile = distance_profile(base_graph, 0);
  std::uint64_t mask = 0;
  for (int s = 0; s < base.k; ++s) {
    if (profile[static_cast<std::size_t>(s)].size() != 1)
      throw std::runtime_error(
          "base-graph distance is not a function of the intersection size at s = " +
          std::to_string(s));
    if (*profile[static_cast<std::size_t>(s)].begin() == Distance::finite(d))
      mask |= std::uint64_t{1} << s;
  }
  return exact_from_mask(base, d, mask, budget);
}

Graph Graph::gen_kneser(const GenParams& params, std::int64_t budget,
                        bool strict_adjacency) {
  if (params.family != GenFamily::kneser)
    throw std::invalid_argument("expected kneser-flavour parameters");
  std::uint64_t mask = 0;
  const int top = strict_adjacency ? params.i - 1 : params.i;
  for (int s = 0; s <= top; ++s) mask |= std::uint64_t{1} << s;
  Graph g = family_graph(Family::gen_kneser, params.n, params.k, mask, budget);
  g.i_ = params.i;
  return g;
}

Graph Graph::gen_johnson(const GenParams& params, std::int64_t budget) {
  if (params.family != GenFamily::johnson)
    throw std::invalid_argument("expected johnson-flavour parameters");
  Graph g = family_graph(Family::gen_johnson, params.n, params.k,
                         std::uint64_t{1} << params.i, budget);
  g.i_ = params.i;
  return g;
}

Graph Graph::from_edges(std::int64_t vertex_count,
                        const std::vector<std::pair<std::int64_t, std::int64_t>>& edges) {
  if (vertex_count < 0 || vertex_count > std::numeric_limits<std::int32_t>::max())
    throw std::invalid_argument("vertex count out of range");
  Graph g;
  g.family_ = Family::external;
  g.vcount_ = vertex_count;
  g.materialized_ = true;
  std::vector<std::int64_t> deg(static_cast<std::size_t>(vertex_count), 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  g.offsets_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (std::int64_t u = 0; u < vertex_count; ++u)
    g.offsets_[static_cast<std::size_t>(u) + 1] =
        g.offsets_[static_cast<std::size_t>(u)] + deg[static_cast<std::size_t>(u)];
  g.nbrs_.assign(static_cast<std::size_t>(g.offsets_.back()), 0);
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.nbrs_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] =
        static_cast<std::int32_t>(v);
    g.nbrs_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] =
        static_cast<std::int32_t>(u);
  }
  for (std::int64_t u = 0; u < vertex_count; ++u) {
    const auto b = g.nbrs_.begin() + g.offsets_[static_cast<std::size_t>(u)];
    const auto e = g.nbrs_.begin() + g.offsets_[static_cast<std::size_t>(u) + 1];
    std::sort(b, e);
    if (std::adjacent_find(b, e) != e)
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(u));
  }
  return g;
}

std::int64_t Graph::degree(std::int64_t u) const {
  if (u < 0 || u >= vcount_) throw std::invalid_argument("vertex rank out of range");
  if (materialized_)
    return offsets_[static_cast<std::size_t>(u) + 1] - offsets_[static_cast<std::size_t>(u)];
  std::int64_t total = 0;
  for (int s = 0; s <= k_; ++s) {
    if (!((s_mask_ >> s) & 1u)) continue;
    if (k_ - s > n_ - k_) continue;
    total += detail::binom_raw(k_, s) * detail::binom_raw(n_ - k_, k_ - s);
  }
  return total;
}

std::int64_t Graph::edge_count() const {
  if (materialized_) return static_cast<std::int64_t>(nbrs_.size()) / 2;
  if (vcount_ == 0) return 0;
  return vcount_ * degree(0) / 2;  // family graphs are regular
}

bool Graph::adjacent(std::int64_t u, std::int64_t v) const {
  if (u < 0 || v < 0 || u >= vcount_ || v >= vcount_)
    throw std::invalid_argument("vertex rank out of range");
  if (u == v) return false;
  if (!materialized_) {
    const int s = std::popcount(verts_[static_cast<std::size_t>(u)] &
                                verts_[static_cast<std::size_t>(v)]);
    return ((s_mask_ >> s) & 1u) != 0;
  }
  const auto b = nbrs_.begin() + offsets_[static_cast<std::size_t>(u)];
  const auto e = nbrs_.begin() + offsets_[static_cast<std::size_t>(u) + 1];
  return std::binary_search(b, e, static_cast<std::int32_t>(v));
}

std::vector<std::int64_t> Graph::neighbors(std::int64_t u) const {
  if (u < 0 || u >= vcount_) throw std::invalid_argument("vertex rank out of range");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(degree(u)));
  for_each_neighbor(u, [&](std::int64_t v) { out.push_back(v); });
  if (!materialized_) std::sort(out.begin(), out.end());
  return out;
}

void Graph::materialize() {
  if (materialized_) return;
  if (vcount_ > std::numeric_limits<std::int32_t>::max())
    throw std::invalid_argument("graph too large to materialize");
  const std::int64_t deg = vcount_ > 0 ? degree(0) : 0;
  offsets_.assign(static_cast<std::size_t>(vcount_) + 1, 0);
  for (std::int64_t u = 0; u < vcount_; ++u)
    offsets_[static_cast<std::size_t>(u) + 1] = offsets_[static_cast<std::size_t>(u)] + deg;
  nbrs_.assign(static_cast<std::size_t>(offsets_.back()), 0);
  for (std::int64_t u = 0; u < vcount_; ++u) {
    std::int64_t at = offsets_[static_cast<std::size_t>(u)];
    for_each_neighbor(u, [&](std::int64_t v) {
      nbrs_[static_cast<std::size_t>(at++)] = static_cast<std::int32_t>(v);
    });
    std::sort(nbrs_.begin() + offsets_[static_cast<std::size_t>(u)],
              nbrs_.begin() + offsets_[static_cast<std::size_t>(u) + 1]);
  }
  materialized_ = true;
}

Graph build_family_graph(const FamilySpec& spec, std::int64_t budget) {
  return std::visit(
      [&](const auto& params) -> Graph {
        using T = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<T, KneserParams>) {
          return Graph::kneser(params, budget);
        } else if constexpr (std::is_same_v<T, ExactParams>) {
          return Graph::exact_formula(params, budget);
        } else {
          return params.family == GenFamily::kneser
                     ? Graph::gen_kneser(params, budget)
                     : Graph::gen_johnson(params, budget);
        }
      },
      spec);
}

DistanceField bfs_from(const Graph& g, std::int64_t source) {
  if (source < 0 || source >= g.vertex_count())
    throw std::invalid_argument("source rank out of range");
  DistanceField field;
  field.source = source;
  field.raw.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<std::int64_t> queue;
  queue.reserve(static_cast<std::size_t>(g.vertex_count()));
  field.raw[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int64_t u = queue[head];
    const std::int32_t next = field.raw[static_cast<std::size_t>(u)] + 1;
    g.for_each_neighbor(u, [&](std::int64_t v) {
      if (field.raw[static_cast<std::size_t>(v)] < 0) {
        field.raw[static_cast<std::size_t>(v)] = next;
        queue.push_back(v);
      }
    });
  }
  return field;
}

Distance eccentricity(const DistanceField& field) {
  std::int32_t best = 0;
  for (const std::int32_t v : field.raw) {
    if (v < 0) return Distance::infinite();
    best = std::max(best, v);
  }
  return Distance::finite(best);
}

Distance graph_diameter_bfs(const Graph& g, bool transitive_hint,
                            std::int64_t budget) {
  if (g.vertex_count() == 0) return Distance::finite(0);
  if (transitive_hint) return eccentricity(bfs_from(g, 0));
  if (g.vertex_count() > budget)
    throw BudgetExceeded("all-source diameter on " + std::to_string(g.vertex_count()) +
                         " vertices exceeds budget " + std::to_string(budget));
  Distance best = Distance::finite(0);
  for (std::int64_t u = 0; u < g.vertex_count(); ++u) {
    const Distance ecc = eccentricity(bfs_from(g, u));
    if (!ecc.is_finite()) return Distance::infinite();
    best = std::max(best, ecc);
  }
  return best;
}

DistanceProfile distance_profile(const Graph& g, std::int64_t source) {
  if (!g.has_subset_vertices())
    throw std::invalid_argument("distance profile requires subset-structured vertices");
  return distance_profile(g, bfs_from(g, source));
}

DistanceProfile distance_profile(const Graph& g, const DistanceField& field) {
  if (!g.has_subset_vertices())
    throw std::invalid_argument("distance profile requires subset-structured vertices");
  DistanceProfile profile(static_cast<std::size_t>(g.subset_k()) + 1);
  const std::uint64_t src_bits = g.vertex_bits(field.source);
  for (std::int64_t rank = 0; rank < g.vertex_count(); ++rank) {
    const int s = std::popcount(src_bits & g.vertex_bits(rank));
    profile[static_cast<std::size_t>(s)].insert(field.at(rank));
  }
  return profile;
}

Graph exact_distance_transform(const Graph& g, int d, std::int64_t budget) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if (g.vertex_count() > budget)
    throw BudgetExceeded("all-pairs transform on " + std::to_string(g.vertex_count()) +
                         " vertices exceeds budget " + std::to_string(budget));
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (std::int64_t u = 0; u < g.vertex_count(); ++u) {
    const DistanceField field = bfs_from(g, u);
    for (std::int64_t v = u + 1; v < g.vertex_count(); ++v)
      if (field.raw[static_cast<std::size_t>(v)] == d) edges.emplace_back(u, v);
  }
  Graph out = Graph::from_edges(g.vertex_count(), edges);
  // Carry the subset structure so profiles and labeled exports keep working.
  out.n_ = g.n_;
  out.k_ = g.k_;
  out.verts_ = g.verts_;
  out.d_ = d;
  return out;
}

}  // namespace kneser
