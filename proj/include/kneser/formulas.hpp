#pragma once
// Closed-form adjacency, distance, and diameter oracles for K(2k+r,k), its
// distance-d derived graphs, and the generalized K(n,k,i) / J(n,k,i)
// families. Exact integer arithmetic throughout; every ceiling is an integer
// division, never a float.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "kneser/combinatorics.hpp"

namespace kneser {

// ceil(a/b) for a >= 0, b > 0.
inline constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return (a + b - 1) / b;
}

// A hop count or Infinite (disconnected pair). Finite values order below
// Infinite so diameters and profile sets compare naturally.
class Distance {
 public:
  static constexpr Distance finite(std::int64_t hops) { return Distance(hops); }
  static constexpr Distance infinite() { return Distance(-1); }

  constexpr bool is_finite() const { return v_ >= 0; }
  constexpr std::int64_t hops() const {
    if (v_ < 0) throw std::logic_error("infinite distance has no hop count");
    return v_;
  }
  std::string str() const { return is_finite() ? std::to_string(v_) : "inf"; }

  friend constexpr bool operator==(Distance, Distance) = default;
  friend constexpr auto operator<=>(Distance a, Distance b) {
    return a.key() <=> b.key();
  }

 private:
  constexpr explicit Distance(std::int64_t v) : v_(v) {}
  constexpr std::uint64_t key() const {
    return v_ < 0 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(v_);
  }
  std::int64_t v_;
};

// Inclusive interval of intersection sizes s for which two vertices are
// adjacent in the distance-d graph; Empty means no s qualifies.
struct AdjInterval {
  int lo = 0;
  int hi = -1;

  static constexpr AdjInterval empty() { return {0, -1}; }
  constexpr bool is_empty() const { return lo > hi; }
  constexpr bool contains(int s) const { return s >= lo && s <= hi; }

  friend bool operator==(const AdjInterval&, const AdjInterval&) = default;
};

// The three diameter routes kept deliberately separate: the literal case
// formula, the maximum of the distance formula over s, and (when computed)
// BFS ground truth. The harness compares them; the library never reconciles.
struct DiameterTriple {
  Distance theorem = Distance::infinite();
  Distance max_over_s = Distance::infinite();
  std::optional<Distance> bfs;
};

enum class BoundKind { lower, upper };

// Parity bound on the intersection size along a walk in K(2k+r,k): an even
// walk of length 2p forces s >= k-rp, an odd walk of length 2p+1 forces
// s <= rp.
struct StahlBound {
  BoundKind kind = BoundKind::lower;
  int value = 0;

  friend bool operator==(const StahlBound&, const StahlBound&) = default;
};

// Distance in K(2k+r,k) between vertices with intersection size s. The
// min-of-two-routes formula is applied for every r >= 1; in the r >= k-1
// regime it degenerates to the diameter-2 pattern.
Distance kneser_distance(int k, int r, int s);

// ceil((k-1)/r) + 1; requires k >= 2.
Distance kneser_diameter(int k, int r);

// The adjacency interval of the distance-d graph of K(2k+r,k). Selected by
// the parity of d, by d < D versus d = D, and by whether r divides k-1; the
// r >= k-1 regime (where d = 2 is the only derived graph) yields [1, k-1].
// Requires d >= 2: d = 1 is plain Kneser adjacency (s = 0).
AdjInterval exact_adjacency_interval(const ExactParams& params);

bool exact_is_adjacent(const ExactParams& params, int s);

// Distance in the distance-d graph between vertices with intersection size
// s: 0 at s = k, 1 when adjacent, then the parity formula (even d:
// max(2, ceil((k-s)/rp)); odd d < D: min of the two ceiling routes over
// 2rp+r; odd d = D: 2, where the min-of-routes expression misreports s = rp
// when r does not divide k-1).
Distance exact_distance(const ExactParams& params, int s);

// The literal six-case diameter value. Half-integer expressions k +- r/2 are
// realized by doubling numerator and denominator, and the case-(v) test
// "k - r/2 is an even integer" as (2k - r) mod 4 = 0.
Distance exact_diameter_theorem(const ExactParams& params);

// Independent diameter route: max of exact_distance over s in 0..k-1 (every
// such s is realized by some pair since n >= 2k).
Distance exact_diameter_max_over_s(const ExactParams& params);

// Generalized Kneser distance for n = 2k-i+r with 0 <= r < k-2i-1 and
// i + r > 0; adjacency is intersection at most i, which makes the formula
// reduce to kneser_distance at i = 0.
Distance gen_kneser_distance(int n, int k, int i, int s);

// ceil((k-i-1)/(i+r)) + 1 for r >= 1.
Distance gen_kneser_diameter(int n, int k, int i);

// Generalized Johnson distance for n >= 2k, (n,k,i) != (2k,k,0).
Distance gen_johnson_distance(int n, int k, int i, int s);

Distance gen_johnson_diameter(int n, int k, int i);

// Intersection-size bound implied by a walk of the given length.
StahlBound stahl_bound(int k, int r, int path_length);

}  // namespace kneser
