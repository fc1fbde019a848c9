#include "kneser/formulas.hpp"

#include <algorithm>
#include <cstdlib>

namespace kneser {

namespace {

void check_s_range(int s, int k) {
  if (s < 0 || s > k)
    throw std::invalid_argument("intersection size must be in 0..k");
}

}  // namespace

Distance kneser_distance(int k, int r, int s) {
  if (k < 1 || r < 1) throw std::invalid_argument("k and r must be positive");
  check_s_range(s, k);
  if (s == k) return Distance::finite(0);
  const std::int64_t even_route = 2 * ceil_div(k - s, r);
  const std::int64_t odd_route = 2 * ceil_div(s, r) + 1;
  return Distance::finite(std::min(even_route, odd_route));
}

Distance kneser_diameter(int k, int r) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  return Distance::finite(ceil_div(k - 1, r) + 1);
}

AdjInterval exact_adjacency_interval(const ExactParams& params) {
  if (params.d < 2)
    throw std::invalid_argument("d must be at least 2; d = 1 is plain Kneser adjacency");
  const int k = params.base.k;
  const int r = params.base.r;
  const int D = params.base.D;
  if (r >= k - 1) {
    // Diameter-2 regime: the distance-2 graph is the complement, so any
    // proper non-empty intersection is an edge.
    return {1, k - 1};
  }
  const int p = params.p;
  const bool divides = (k - 1) % r == 0;
  if (!params.odd) {
    if (params.d < D || divides) return {k - r * p, k - r * p + r - 1};
    return {r * p - r + 1, k - r * p + r - 1};
  }
  if (params.d < D || divides) return {r * p - r + 1, r * p};
  return {r * p - r + 1, k - r * p - 1};
}

bool exact_is_adjacent(const ExactParams& params, int s) {
  check_s_range(s, params.base.k);
  if (s == params.base.k) return false;
  if (params.d == 1) return s == 0;
  return exact_adjacency_interval(params).contains(s);
}

Distance exact_distance(const ExactParams& params, int s) {
  const int k = params.base.k;
  check_s_range(s, k);
  if (s == k) return Distance::finite(0);
  if (params.d == 1) return kneser_distance(k, params.base.r, s);
  if (exact_is_adjacent(params, s)) return Distance::finite(1);
  const int r = params.base.r;
  if (r >= k - 1) return Distance::finite(2);  // d == 2, non-adjacent distinct pair
  const std::int64_t rp = std::int64_t{r} * params.p;
  if (!params.odd)
    return Distance::finite(std::max<std::int64_t>(2, ceil_div(k - s, rp)));
  // Odd d = D: every non-adjacent distinct pair sits at distance 2. The
  // min-of-routes expression below would wrongly report 1 at s = rp when r
  // does not divide k-1 (that s falls outside the adjacency interval), so
  // the d = D case is answered directly.
  if (params.d == params.base.D) return Distance::finite(2);
  const std::int64_t m = 2 * rp + r;
  const std::int64_t via_odd = 1 + 2 * ceil_div(std::abs(s - rp), m);
  const std::int64_t via_even = 2 * ceil_div(k - s, m);
  return Distance::finite(std::min(via_odd, via_even));
}

Distance exact_diameter_theorem(const ExactParams& params) {
  if (params.d < 2) throw std::invalid_argument("d must be at least 2");
  const int k = params.base.k;
  const int r = params.base.r;
  const int D = params.base.D;
  if (r >= k - 1) return Distance::finite(2);
  const bool divides = (k - 1) % r == 0;
  if (params.d == D && !divides) return Distance::finite(2);
  const std::int64_t rp = std::int64_t{r} * params.p;
  if (!params.odd) return Distance::finite(ceil_div(k, rp));
  if (params.d == D) return Distance::finite(2);
  // Odd d < D; the two half-integer cases, doubled to stay in integers.
  const std::int64_t m = 2 * rp + r;
  if ((2 * k - r) % 4 == 0) return Distance::finite(ceil_div(2 * k + r, 2 * m));
  return Distance::finite(1 + ceil_div(2 * k + r - 2, 2 * m));
}

Distance exact_diameter_max_over_s(const ExactParams& params) {
  Distance best = Distance::finite(0);
  for (int s = 0; s < params.base.k; ++s)
    best = std::max(best, exact_distance(params, s));
  return best;
}

Distance gen_kneser_distance(int n, int k, int i, int s) {
  GenParams gp(n, k, i, GenFamily::kneser);  // validates n > k > i >= 0, r >= 0
  const int r = gp.r();
  if (r >= k - 2 * i - 1)
    throw std::invalid_argument("distance formula requires r < k - 2i - 1");
  if (i + r == 0)
    throw std::invalid_argument("i + r must be positive (K(2k,k) is disconnected)");
  check_s_range(s, k);
  if (s == k) return Distance::finite(0);
  if (s <= i) return Distance::finite(1);
  const std::int64_t step = i + r;
  const std::int64_t even_route = 2 * ceil_div(k - s, step);
  const std::int64_t odd_route = 2 * ceil_div(s - i, step) + 1;
  return Distance::finite(std::min(even_route, odd_route));
}

Distance gen_kneser_diameter(int n, int k, int i) {
  GenParams gp(n, k, i, GenFamily::kneser);
  const int r = gp.r();
  if (r < 1) throw std::invalid_argument("diameter formula requires r >= 1");
  return Distance::finite(ceil_div(k - i - 1, i + r) + 1);
}

Distance gen_johnson_distance(int n, int k, int i, int s) {
  GenParams gp(n, k, i, GenFamily::johnson);
  check_s_range(s, k);
  if (s == k) return Distance::finite(0);
  if (s < std::min(i, 3 * k - 2 * i - n)) return Distance::finite(3);
  if (s < i) return Distance::finite(ceil_div(k - s, k - i));
  const std::int64_t step = n - 2 * k + 2 * i;
  const std::int64_t even_route = 2 * ceil_div(k - s, step);
  const std::int64_t odd_route = 2 * ceil_div(s - i, step) + 1;
  return Distance::finite(std::min(even_route, odd_route));
}

Distance gen_johnson_diameter(int n, int k, int i) {
  GenParams gp(n, k, i, GenFamily::johnson);
  if (i == 0 || n < 3 * (k - i) - 1)
    return Distance::finite(ceil_div(k - i - 1, n - 2 * k + 2 * i) + 1);
  if (n < 3 * k - 2 * i) return Distance::finite(3);
  return Distance::finite(ceil_div(k, k - i));
}

StahlBound stahl_bound(int k, int r, int path_length) {
  if (k < 1 || r < 1) throw std::invalid_argument("k and r must be positive");
  if (path_length < 0) throw std::invalid_argument("path length must be non-negative");
  const int p = path_length / 2;
  if (path_length % 2 == 0) return {BoundKind::lower, k - r * p};
  return {BoundKind::upper, r * p};
}

}  // namespace kneser
