#include "kneser/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace kneser {

std::int64_t binomial(int n, int k) {
  if (n > kMaxGroundSet)
    throw std::invalid_argument("ground sets are capped at 64 elements");
  if (n < 0 || k < 0 || k > n) return 0;
  return detail::binom_raw(n, k);
}

std::vector<int> Vertex::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount()));
  std::uint64_t b = bits;
  while (b) {
    out.push_back(std::countr_zero(b) + 1);
    b &= b - 1;
  }
  return out;
}

Vertex vertex_from_elements(const std::vector<int>& elements, int n) {
  if (n < 0 || n > kMaxGroundSet)
    throw std::invalid_argument("ground set size must be in 0..64");
  Vertex v{0, n};
  for (int e : elements) {
    if (e < 1 || e > n)
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " outside ground set [1.." + std::to_string(n) + "]");
    const std::uint64_t bit = std::uint64_t{1} << (e - 1);
    if (v.bits & bit)
      throw std::invalid_argument("duplicate element " + std::to_string(e));
    v.bits |= bit;
  }
  return v;
}

int intersection_size(const Vertex& a, const Vertex& b) {
  if (a.n != b.n)
    throw std::invalid_argument("vertices live on different ground sets");
  return std::popcount(a.bits & b.bits);
}

std::int64_t rank_colex(const Vertex& v, int k) {
  if (v.popcount() != k)
    throw std::invalid_argument("vertex does not have exactly k elements");
  return rank_of_bits(v.bits);
}

Vertex unrank_colex(std::int64_t rank, int n, int k) {
  if (n < 0 || n > kMaxGroundSet || k < 0 || k > n)
    throw std::invalid_argument("subset parameters must satisfy 0 <= k <= n <= 64");
  if (rank < 0 || rank >= binomial(n, k))
    throw std::invalid_argument("rank out of range for C(n,k)");
  Vertex v{0, n};
  int e = n - 1;
  for (int i = k; i >= 1; --i) {
    while (detail::binom_raw(e, i) > rank) --e;
    v.bits |= std::uint64_t{1} << e;
    rank -= detail::binom_raw(e, i);
    --e;
  }
  return v;
}

std::pair<Vertex, Vertex> canonical_pair(int n, int k, int s) {
  if (n < 0 || n > kMaxGroundSet || k < 0 || k > n)
    throw std::invalid_argument("subset parameters must satisfy 0 <= k <= n <= 64");
  if (s < 0 || s > k)
    throw std::invalid_argument("intersection size must be in 0..k");
  if (2 * k - s > n)
    throw std::invalid_argument("ground set too small to realize intersection " +
                                std::to_string(s));
  const std::uint64_t low = k == 0 ? 0 : (~std::uint64_t{0} >> (64 - k));
  Vertex a{low, n};
  const std::uint64_t shared = s == 0 ? 0 : (~std::uint64_t{0} >> (64 - s));
  std::uint64_t fresh = 0;
  for (int e = k; e < 2 * k - s; ++e) fresh |= std::uint64_t{1} << e;
  Vertex b{shared | fresh, n};
  return {a, b};
}

namespace {

inline int ceil_div_int(int a, int b) { return (a + b - 1) / b; }

}  // namespace

KneserParams::KneserParams(int k_, int r_) : k(k_), r(r_) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  n = 2 * k + r;
  if (n > kMaxGroundSet)
    throw std::invalid_argument("2k+r exceeds the 64-element ground-set cap");
  D = k == 1 ? 1 : ceil_div_int(k - 1, r) + 1;
}

ExactParams::ExactParams(const KneserParams& base_, int d_) : base(base_), d(d_) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if (d > base.D)
    throw std::invalid_argument("d exceeds diameter " + std::to_string(base.D));
  odd = (d % 2) != 0;
  p = odd ? (d - 1) / 2 : d / 2;
}

ExactParams::ExactParams(int k, int r, int d_) : ExactParams(KneserParams(k, r), d_) {}

GenParams::GenParams(int n_, int k_, int i_, GenFamily family_)
    : n(n_), k(k_), i(i_), family(family_) {
  if (n > kMaxGroundSet)
    throw std::invalid_argument("n exceeds the 64-element ground-set cap");
  if (!(n > k && k > i && i >= 0))
    throw std::invalid_argument("parameters must satisfy n > k > i >= 0");
  if (family == GenFamily::kneser) {
    if (r() < 0)
      throw std::invalid_argument("kneser flavour requires n >= 2k - i");
  } else {
    if (n < 2 * k) throw std::invalid_argument("johnson flavour requires n >= 2k");
    if (n == 2 * k && i == 0)
      throw std::invalid_argument("J(2k,k,0) is excluded (disconnected matching)");
  }
}

}  // namespace kneser
