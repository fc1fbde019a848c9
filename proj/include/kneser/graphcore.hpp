#pragma once
// Desk-scale graphs over k-subset vertices indexed by colex rank, with BFS
// ground truth, distance-d transforms, and diameter computation. Family
// graphs keep adjacency implicit -- a set of allowed intersection sizes --
// so neighbor streams cost O(#neighbors) and no edge table is ever needed.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kneser/combinatorics.hpp"
#include "kneser/formulas.hpp"

namespace kneser {

inline constexpr std::int64_t kDefaultVertexBudget = 2'000'000;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family { kneser, exact_kneser, gen_kneser, gen_johnson, external };

const char* family_name(Family f);

class Graph {
 public:
  static Graph kneser(const KneserParams& params,
                      std::int64_t budget = kDefaultVertexBudget);

  // Adjacency from the closed-form interval. Total in d: d = 1 is the base
  // graph, d past the base diameter is edgeless.
  static Graph exact_formula(const ExactParams& params,
                             std::int64_t budget = kDefaultVertexBudget);
  static Graph exact_formula(const KneserParams& base, int d,
                             std::int64_t budget = kDefaultVertexBudget);

  // Adjacency from an explicit set of allowed intersection sizes (bit s of
  // `allowed_s` set means pairs with |A∩B| = s are edges).
  static Graph exact_from_mask(const KneserParams& base, int d,
                               std::uint64_t allowed_s,
                               std::int64_t budget = kDefaultVertexBudget);

  // Ground-truth distance-d graph: BFS the base Kneser graph from the
  // canonical vertex, bucket distances by intersection size (buckets must be
  // singletons), and take the sizes whose distance equals d. Equivalent to
  // the generic transform on these vertex-transitive families without the
  // all-pairs cost.
  static Graph exact_by_bfs(const KneserParams& base, int d,
                            std::int64_t budget = kDefaultVertexBudget);

  static Graph gen_kneser(const GenParams& params,
                          std::int64_t budget = kDefaultVertexBudget,
                          bool strict_adjacency = false);
  static Graph gen_johnson(const GenParams& params,
                           std::int64_t budget = kDefaultVertexBudget);

  // Arbitrary undirected graph from an edge list (no self-loops, no
  // duplicate edges). Always materialized.
  static Graph from_edges(std::int64_t vertex_count,
                          const std::vector<std::pair<std::int64_t, std::int64_t>>& edges);

  Family family() const { return family_; }
  std::int64_t vertex_count() const { return vcount_; }
  std::int64_t edge_count() const;
  std::int64_t degree(std::int64_t u) const;

  // Subset structure (absent on external graphs).
  bool has_subset_vertices() const { return k_ >= 0; }
  int ground_n() const { return n_; }
  int subset_k() const { return k_; }
  std::uint64_t vertex_bits(std::int64_t rank) const { return verts_[static_cast<std::size_t>(rank)]; }
  std::uint64_t s_mask() const { return s_mask_; }

  // Optional family parameters for export headers; -1 when absent.
  int param_r() const { return r_; }
  int param_d() const { return d_; }
  int param_i() const { return i_; }

  bool materialized() const { return materialized_; }
  void materialize();

  bool adjacent(std::int64_t u, std::int64_t v) const;
  std::vector<std::int64_t> neighbors(std::int64_t u) const;  // sorted ascending

  template <class Fn>
  void for_each_neighbor(std::int64_t u, Fn&& fn) const {
    if (materialized_) {
      for (std::int64_t idx = offsets_[static_cast<std::size_t>(u)];
           idx < offsets_[static_cast<std::size_t>(u) + 1]; ++idx)
        fn(static_cast<std::int64_t>(nbrs_[static_cast<std::size_t>(idx)]));
      return;
    }
    const std::uint64_t a = verts_[static_cast<std::size_t>(u)];
    int own[kMaxGroundSet];
    int other[kMaxGroundSet];
    int rest = 0;
    {
      int filled = 0;
      for (int pos = 0; pos < n_; ++pos) {
        if ((a >> pos) & 1u)
          own[filled++] = pos;
        else
          other[rest++] = pos;
      }
    }
    for (int s = 0; s <= k_; ++s) {
      if (!((s_mask_ >> s) & 1u)) continue;
      const int take = k_ - s;
      if (take > rest) continue;  // intersection size s not realizable
      const std::int64_t shared_patterns = detail::binom_raw(k_, s);
      const std::int64_t fresh_patterns = detail::binom_raw(rest, take);
      std::uint64_t sm = first_k_subset_mask(s);
      for (std::int64_t a_idx = 0; a_idx < shared_patterns; ++a_idx) {
        std::uint64_t shared = 0;
        for (std::uint64_t m = sm; m;) {
          const int b = std::countr_zero(m);
          m &= m - 1;
          shared |= std::uint64_t{1} << own[b];
        }
        std::uint64_t tm = first_k_subset_mask(take);
        for (std::int64_t b_idx = 0; b_idx < fresh_patterns; ++b_idx) {
          std::uint64_t nb = shared;
          for (std::uint64_t m = tm; m;) {
            const int b = std::countr_zero(m);
            m &= m - 1;
            nb |= std::uint64_t{1} << other[b];
          }
          fn(rank_of_bits(nb));
          if (b_idx + 1 < fresh_patterns) tm = next_k_subset_mask(tm);
        }
        if (a_idx + 1 < shared_patterns) sm = next_k_subset_mask(sm);
      }
    }
  }

 private:
  Graph() = default;
  static Graph family_graph(Family family, int n, int k, std::uint64_t s_mask,
                            std::int64_t budget);

  Family family_ = Family::external;
  int n_ = 0;
  int k_ = -1;
  int r_ = -1;
  int d_ = -1;
  int i_ = -1;
  std::uint64_t s_mask_ = 0;
  std::int64_t vcount_ = 0;
  std::vector<std::uint64_t> verts_;
  bool materialized_ = false;
  std::vector<std::int64_t> offsets_;
  std::vector<std::int32_t> nbrs_;

  friend Graph exact_distance_transform(const Graph&, int, std::int64_t);
};

using FamilySpec = std::variant<KneserParams, ExactParams, GenParams>;

Graph build_family_graph(const FamilySpec& spec,
                         std::int64_t budget = kDefaultVertexBudget);

// Single-source hop counts indexed by rank; -1 marks unreached vertices.
struct DistanceField {
  std::int64_t source = 0;
  std::vector<std::int32_t> raw;

  Distance at(std::int64_t rank) const {
    const std::int32_t v = raw[static_cast<std::size_t>(rank)];
    return v < 0 ? Distance::infinite() : Distance::finite(v);
  }
  std::int64_t size() const { return static_cast<std::int64_t>(raw.size()); }
};

DistanceField bfs_from(const Graph& g, std::int64_t source);

Distance eccentricity(const DistanceField& field);

// Exact diameter. With transitive_hint the eccentricity of the canonical
// vertex (rank 0) is the answer -- all built-in families are
// vertex-transitive under the symmetric-group action -- otherwise every
// source is scanned, gated by the vertex budget.
Distance graph_diameter_bfs(const Graph& g, bool transitive_hint,
                            std::int64_t budget = kDefaultVertexBudget);

// For each intersection size s against the source vertex, the set of BFS
// distances observed among vertices with that s. Singleton sets certify that
// distance is a function of s alone.
using DistanceProfile = std::vector<std::set<Distance>>;
DistanceProfile distance_profile(const Graph& g, std::int64_t source);
DistanceProfile distance_profile(const Graph& g, const DistanceField& field);

// Generic distance-d transform: same vertex set, edges exactly between pairs
// at BFS distance d, computed by all-pairs BFS. Subset structure of the
// input, when present, carries over to the result.
Graph exact_distance_transform(const Graph& g, int d,
                               std::int64_t budget = kDefaultVertexBudget);

}  // namespace kneser
