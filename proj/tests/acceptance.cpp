// Acceptance suite: one criterion per numbered run, printed as a PASS/FAIL
// line with supporting detail, exit code = number of failed criteria.
// Correctness gates are exact; the throughput and wall-clock gates are the
// two stated performance properties.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "kneser/combinatorics.hpp"
#include "kneser/formulas.hpp"
#include "kneser/graphcore.hpp"
#include "kneser/verify.hpp"

using namespace kneser;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class In, class Fn>
std::vector<VerificationReport> parallel_reports(const std::vector<In>& items, Fn fn) {
  std::vector<VerificationReport> out(items.size());
  std::atomic<std::size_t> next{0};
  const std::size_t jobs =
      std::min<std::size_t>(items.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= items.size()) return;
        out[idx] = fn(items[idx]);
      }
    });
  for (std::thread& t : workers) t.join();
  return out;
}

// 2 <= k <= 7, 1 <= r < k-1, n = 2k+r <= 16, 2 <= d <= D.
std::vector<ExactParams> exact_grid() {
  std::vector<ExactParams> grid;
  for (int k = 2; k <= 7; ++k)
    for (int r = 1; r < k - 1 && 2 * k + r <= 16; ++r) {
      const KneserParams base(k, r);
      for (int d = 2; d <= base.D; ++d) grid.emplace_back(base, d);
    }
  return grid;
}

// 2 <= k <= 7, every r >= 1 with n <= 16 (covers the r >= k-1 tuples).
std::vector<KneserParams> base_grid() {
  std::vector<KneserParams> grid;
  for (int k = 2; k <= 7; ++k)
    for (int r = 1; 2 * k + r <= 16; ++r) grid.emplace_back(k, r);
  return grid;
}

std::string params_str(const VerificationReport& rep) {
  std::string out = "(";
  bool first = true;
  for (const auto& [name, value] : rep.params) {
    if (!first) out += ",";
    out += std::to_string(value);
    first = false;
  }
  return out + ")";
}

const Check* find_check(const VerificationReport& rep, const std::string& name) {
  for (const Check& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string labeled(const Check& c, const std::string& label) {
  for (const auto& [key, value] : c.values)
    if (key == label) return value.str();
  return "?";
}

struct Criterion {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

Criterion criterion_adjacency() {
  Criterion c;
  const auto t0 = Clock::now();
  const auto grid = exact_grid();
  const auto reports = parallel_reports(
      grid, [](const ExactParams& p) { return verify_exact_adjacency(p); });
  std::int64_t mismatches = 0;
  for (const auto& rep : reports) {
    if (rep.status() != Status::pass) c.fail("tuple " + params_str(rep) + " not pass");
    if (const Check* adj = find_check(rep, "adjacency"))
      mismatches += static_cast<std::int64_t>(adj->mismatches.size());
  }
  std::ostringstream detail;
  detail << grid.size() << " tuples, " << mismatches << " mismatches, "
         << seconds_since(t0) << " s";
  c.detail = detail.str() + (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

Criterion criterion_distance(std::vector<VerificationReport>& out_reports) {
  Criterion c;
  const auto t0 = Clock::now();
  const auto grid = exact_grid();
  out_reports = parallel_reports(
      grid, [](const ExactParams& p) { return verify_exact_distance(p); });
  for (const auto& rep : out_reports) {
    const Check* dist = find_check(rep, "distance");
    const Check* single = find_check(rep, "profile_singleton");
    if (dist == nullptr || dist->status != Status::pass)
      c.fail("distance mismatch at " + params_str(rep));
    if (single == nullptr || single->status != Status::pass)
      c.fail("non-singleton bucket at " + params_str(rep));
  }
  std::ostringstream detail;
  detail << grid.size() << " tuples, buckets all singletons, " << seconds_since(t0) << " s";
  c.detail = detail.str() + (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

Criterion criterion_diameter_triple() {
  Criterion c;
  const auto t0 = Clock::now();
  auto grid = exact_grid();
  grid.emplace_back(KneserParams(8, 1), 3);  // mandated extra tuple beyond k <= 7
  const auto reports =
      parallel_reports(grid, [](const ExactParams& p) { return verify_diameters(p); });
  std::string verdicts;
  bool saw_723 = false, saw_813 = false;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const auto& rep = reports[idx];
    const Check* diam = find_check(rep, "diameter");
    if (diam == nullptr || diam->status == Status::fail) {
      c.fail("max_over_s != bfs at " + params_str(rep));
      continue;
    }
    const bool is_723 = grid[idx].base.k == 7 && grid[idx].base.r == 2 && grid[idx].d == 3;
    const bool is_813 = grid[idx].base.k == 8 && grid[idx].base.r == 1 && grid[idx].d == 3;
    if (is_723 || is_813) {
      verdicts += " " + params_str(rep) + " theorem=" + labeled(*diam, "theorem") +
                  " maxs=" + labeled(*diam, "max_over_s") + " bfs=" + labeled(*diam, "bfs");
      if (is_723) saw_723 = labeled(*diam, "theorem") == "2" && labeled(*diam, "bfs") != "?";
      if (is_813) saw_813 = labeled(*diam, "theorem") == "4" && labeled(*diam, "bfs") != "?";
    }
  }
  if (!saw_723) c.fail("(7,2,3) with theorem-literal 2 missing from the report");
  if (!saw_813) c.fail("(8,1,3) with theorem-literal 4 missing from the report");
  std::ostringstream detail;
  detail << grid.size() << " tuples;" << verdicts << "; " << seconds_since(t0) << " s";
  c.detail = detail.str() + (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

Criterion criterion_kneser_classics() {
  Criterion c;
  const auto t0 = Clock::now();
  if (kneser_diameter(2, 1) != Distance::finite(2) ||
      graph_diameter_bfs(Graph::kneser(KneserParams(2, 1)), true) != Distance::finite(2))
    c.fail("Petersen diameter is not 2");
  if (kneser_diameter(5, 1) != Distance::finite(5) ||
      graph_diameter_bfs(Graph::kneser(KneserParams(5, 1)), true) != Distance::finite(5))
    c.fail("K(11,5) diameter is not 5");
  const auto grid = base_grid();
  const auto reports = parallel_reports(
      grid, [](const KneserParams& p) { return verify_kneser_base(p); });
  bool covered[4] = {false, false, false, false};
  const std::pair<int, int> degenerate[4] = {{2, 1}, {2, 2}, {3, 2}, {3, 3}};
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    if (reports[idx].status() != Status::pass)
      c.fail("base tuple " + params_str(reports[idx]) + " not pass");
    for (int j = 0; j < 4; ++j)
      if (grid[idx].k == degenerate[j].first && grid[idx].r == degenerate[j].second)
        covered[j] = true;
  }
  for (int j = 0; j < 4; ++j)
    if (!covered[j]) c.fail("diameter-2 regime tuple missing from the grid");
  std::ostringstream detail;
  detail << grid.size() << " base tuples incl. the r >= k-1 regime, " << seconds_since(t0)
         << " s";
  c.detail = detail.str() + (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

Criterion criterion_generalized() {
  Criterion c;
  const auto t0 = Clock::now();
  std::vector<GenParams> grid;
  for (int n = 2; n <= 14; ++n)
    for (int k = 1; k <= 6 && k < n; ++k)
      for (int i = 0; i < k; ++i) {
        if (n >= 2 * k && !(n == 2 * k && i == 0))
          grid.emplace_back(n, k, i, GenFamily::johnson);
        const int r = n - 2 * k + i;
        if (r >= 0 && r < k - 2 * i - 1 && i + r >= 1)
          grid.emplace_back(n, k, i, GenFamily::kneser);
      }
  const auto reports = parallel_reports(
      grid, [](const GenParams& p) { return verify_generalized(p); });
  int strict_flags = 0, strict_matches = 0;
  for (const auto& rep : reports) {
    if (const Check* dist = find_check(rep, "distance"); dist == nullptr || dist->status != Status::pass)
      c.fail("distance mismatch at " + rep.family + params_str(rep));
    if (const Check* diam = find_check(rep, "diameter"); diam == nullptr || diam->status != Status::pass)
      c.fail("diameter mismatch at " + rep.family + params_str(rep));
    if (const Check* red = find_check(rep, "reduction_identity");
        red != nullptr && red->status == Status::fail)
      c.fail("reduction identity broken at " + rep.family + params_str(rep));
    if (const Check* strict = find_check(rep, "distance_strict_convention")) {
      if (strict->status == Status::flagged) ++strict_flags;
      if (strict->status == Status::pass) ++strict_matches;
    }
  }
  // Formula-level reduction identities across the whole (k, r) grid.
  for (int k = 2; k <= 7; ++k)
    for (int r = 1; 2 * k + r <= 16; ++r)
      for (int s = 0; s <= k; ++s) {
        if (gen_johnson_distance(2 * k + r, k, 0, s) != kneser_distance(k, r, s))
          c.fail("johnson reduction differs at k=" + std::to_string(k));
        if (r < k - 1 && gen_kneser_distance(2 * k + r, k, 0, s) != kneser_distance(k, r, s))
          c.fail("kneser reduction differs at k=" + std::to_string(k));
      }
  std::ostringstream detail;
  detail << grid.size() << " tuples; strict convention matched BFS on " << strict_matches
         << " tuples, contradicted on " << strict_flags << "; " << seconds_since(t0) << " s";
  c.detail = detail.str() + (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

Criterion criterion_stahl_and_bounds(const std::vector<VerificationReport>& distance_reports) {
  Criterion c;
  const auto t0 = Clock::now();
  const auto grid = base_grid();
  const auto reports =
      parallel_reports(grid, [](const KneserParams& p) { return verify_stahl(p.k, p.r); });
  for (const auto& rep : reports)
    if (rep.status() != Status::pass) c.fail("walk-parity bound broken at " + params_str(rep));
  std::size_t bound_checks = 0;
  for (const auto& rep : distance_reports) {
    const Check* bounds = find_check(rep, "path_length_bounds");
    if (bounds == nullptr || bounds->status != Status::pass)
      c.fail("walk-length bound broken at " + params_str(rep));
    else
      ++bound_checks;
  }
  std::ostringstream detail;
  detail << grid.size() << " base tuples; length bounds hold on " << bound_checks
         << " derived instances; " << seconds_since(t0) << " s";
  c.detail = detail.str() + (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

Criterion criterion_identities() {
  Criterion c;
  const auto t0 = Clock::now();
  const VerificationReport rep = verify_formula_identities(9);
  const double secs = seconds_since(t0);
  if (rep.status() != Status::pass) c.fail("identity suite reported mismatches");
  if (secs >= 1.0) c.fail("identity suite took " + std::to_string(secs) + " s (limit 1)");
  std::ostringstream detail;
  detail << "partition + adjacency/distance-1 over k <= 9 in " << secs << " s";
  c.detail = detail.str() + (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

Criterion criterion_performance() {
  Criterion c;
  const ExactParams tuples[] = {ExactParams(5, 1, 2), ExactParams(7, 2, 3),
                                ExactParams(6, 2, 4), ExactParams(8, 3, 4)};
  std::mt19937_64 rng(99);
  constexpr std::int64_t kCalls = 2'000'000;
  std::int64_t checksum = 0;
  const auto t0 = Clock::now();
  for (std::int64_t q = 0; q < kCalls; ++q) {
    const ExactParams& p = tuples[q & 3];
    checksum += exact_distance(p, static_cast<int>(rng() % (p.base.k + 1))).hops();
  }
  const double oracle_secs = seconds_since(t0);
  const double rate = static_cast<double>(kCalls) / oracle_secs;
  if (checksum == -1) std::cerr << "";
  if (rate < 1e6) c.fail("oracle rate " + std::to_string(rate) + " below 1e6/s");

  const Graph big = Graph::kneser(KneserParams(7, 2));
  const auto t1 = Clock::now();
  const DistanceField field = bfs_from(big, 0);
  const double bfs_secs = seconds_since(t1);
  if (field.raw.size() != 11440) c.fail("K(16,7) has the wrong vertex count");
  if (bfs_secs >= 10.0) c.fail("BFS on K(16,7) took " + std::to_string(bfs_secs) + " s");

  std::ostringstream detail;
  detail << "oracle " << static_cast<std::int64_t>(rate) << " calls/s; BFS on K(16,7) in "
         << bfs_secs << " s";
  c.detail = detail.str() + (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

Criterion criterion_determinism() {
  Criterion c;
  const auto t0 = Clock::now();
  const auto run_full = [] {
    std::string out;
    const SweepSummary sum =
        sweep(SweepSpec{}, [&](const VerificationReport& r) { out += to_json_line(r); });
    out += to_json_line(sum);
    return out;
  };
  const std::string first = run_full();
  const std::string second = run_full();
  if (first != second) c.fail("two full sweeps differ");

  SweepSpec small;
  small.k_max = 4;
  small.n_max = 10;
  small.gen_n_max = 8;
  small.jobs = 1;
  std::string serial;
  sweep(small, [&](const VerificationReport& r) { serial += to_json_line(r); });
  small.jobs = 4;
  std::string parallel;
  sweep(small, [&](const VerificationReport& r) { parallel += to_json_line(r); });
  if (serial != parallel) c.fail("output depends on the job count");

  std::ostringstream detail;
  detail << "full sweep twice byte-identical (" << first.size() << " bytes); "
         << seconds_since(t0) << " s";
  c.detail = detail.str() + (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    Criterion result;
  };
  std::vector<Entry> entries;
  std::vector<VerificationReport> distance_reports;

  entries.push_back({"1 adjacency theorem sweep", criterion_adjacency()});
  entries.push_back({"2 distance theorem sweep", criterion_distance(distance_reports)});
  entries.push_back({"3 diameter triple", criterion_diameter_triple()});
  entries.push_back({"4 kneser classics", criterion_kneser_classics()});
  entries.push_back({"5 generalized families", criterion_generalized()});
  entries.push_back({"6 stahl and path-length invariants",
                     criterion_stahl_and_bounds(distance_reports)});
  entries.push_back({"7 formula-identity suite", criterion_identities()});
  entries.push_back({"8 performance", criterion_performance()});
  entries.push_back({"9 determinism", criterion_determinism()});

  int failures = 0;
  for (const Entry& e : entries) {
    if (!e.result.pass) ++failures;
    std::cout << (e.result.pass ? "[PASS] " : "[FAIL] ") << "criterion " << e.label << ": "
              << e.result.detail << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
  return failures;
}
