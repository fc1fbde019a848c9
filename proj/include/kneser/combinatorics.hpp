#pragma once
// k-subsets of a ground set [1..n] (n <= 64) stored as one-word bitsets,
// with colexicographic ranking/unranking, Gosper enumeration, and the
// validated parameter records shared by every graph family in this project.

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace kneser {

inline constexpr int kMaxGroundSet = 64;

namespace detail {

// Pascal triangle up to C(64,32); every entry fits in a signed 64-bit word.
struct Pascal {
  std::int64_t c[kMaxGroundSet + 1][kMaxGroundSet + 1];
};

constexpr Pascal build_pascal() {
  Pascal t{};
  for (int n = 0; n <= kMaxGroundSet; ++n) {
    t.c[n][0] = 1;
    for (int k = 1; k <= n; ++k) t.c[n][k] = t.c[n - 1][k - 1] + t.c[n - 1][k];
  }
  return t;
}

inline constexpr Pascal kPascal = build_pascal();

// Unchecked table lookup for hot loops; callers guarantee 0 <= k <= n <= 64.
inline constexpr std::int64_t binom_raw(int n, int k) { return kPascal.c[n][k]; }

}  // namespace detail

// C(n, k); zero outside the triangle. Throws only when n exceeds the
// 64-element ground-set cap.
std::int64_t binomial(int n, int k);

// A k-subset of [1..n]: element i is present iff bit i-1 of `bits` is set.
struct Vertex {
  std::uint64_t bits = 0;
  int n = 0;

  int popcount() const { return std::popcount(bits); }
  bool contains(int element) const {
    return element >= 1 && element <= n && ((bits >> (element - 1)) & 1u);
  }
  std::vector<int> elements() const;  // ascending, 1-based

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

Vertex vertex_from_elements(const std::vector<int>& elements, int n);

// |a ∩ b| via popcount; both vertices must live on the same ground set.
int intersection_size(const Vertex& a, const Vertex& b);

// Colexicographic rank of a subset bit pattern: sum of C(e, j) over the set
// positions e (0-based, ascending) with j the 1-based index of e. Colex order
// coincides with numeric order of the bit patterns, which the enumeration and
// export code relies on.
inline std::int64_t rank_of_bits(std::uint64_t bits) {
  std::int64_t rank = 0;
  int idx = 0;
  while (bits) {
    const int e = std::countr_zero(bits);
    bits &= bits - 1;
    rank += detail::binom_raw(e, ++idx);
  }
  return rank;
}

std::int64_t rank_colex(const Vertex& v, int k);
Vertex unrank_colex(std::int64_t rank, int n, int k);

// Smallest k-subset bit pattern and the Gosper step to the next one in colex
// order. Callers stop after C(n,k) steps; stepping the final pattern is
// undefined (and stepping 0 would divide by zero).
inline std::uint64_t first_k_subset_mask(int k) {
  return k == 0 ? 0 : (~std::uint64_t{0} >> (64 - k));
}
inline std::uint64_t next_k_subset_mask(std::uint64_t mask) {
  const std::uint64_t c = mask & (~mask + 1);
  const std::uint64_t r = mask + c;
  return r | (((mask ^ r) >> 2) / c);
}

// The fixed pair A = {1..k}, B = {1..s} ∪ {k+1..2k-s} realizing intersection
// size s. All verification runs use it so that results are reproducible.
std::pair<Vertex, Vertex> canonical_pair(int n, int k, int s);

// Kneser graph K(2k+r,k): k-subsets of [1..2k+r], disjoint pairs adjacent.
struct KneserParams {
  int k = 0;
  int r = 0;
  int n = 0;  // 2k + r
  int D = 0;  // diameter: ceil((k-1)/r) + 1, which is 1 when k = 1

  KneserParams(int k, int r);
};

// Distance-d graph derived from K(2k+r,k): same vertices, edges between
// pairs at base-graph distance exactly d.
struct ExactParams {
  KneserParams base;
  int d = 0;
  int p = 0;  // d = 2p (even) or d = 2p+1 (odd)
  bool odd = false;

  ExactParams(const KneserParams& base, int d);
  ExactParams(int k, int r, int d);
};

enum class GenFamily { kneser, johnson };

// Generalized families on k-subsets of [1..n]: the kneser flavour joins
// pairs with intersection at most i, the johnson flavour pairs with
// intersection exactly i.
struct GenParams {
  int n = 0;
  int k = 0;
  int i = 0;
  GenFamily family = GenFamily::kneser;

  GenParams(int n, int k, int i, GenFamily family);

  // Excess of the kneser flavour: n = 2k - i + r.
  int r() const { return n - 2 * k + i; }
};

}  // namespace kneser
