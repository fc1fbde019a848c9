#include "kneser/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <thread>

#include "json.hpp"

namespace kneser {

namespace {

constexpr std::size_t kMismatchCap = 50;

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string set_str(const std::set<Distance>& s) {
  std::string out = "{";
  bool first = true;
  for (const Distance& d : s) {
    if (!first) out += ",";
    out += d.str();
    first = false;
  }
  return out + "}";
}

// Diameter-route comparison shared by every family: fail when the
// independent max-over-s route disagrees with BFS, flagged when only the
// literal case value does.
Check diameter_check(const std::optional<Distance>& theorem,
                     const std::optional<Distance>& max_over_s, Distance bfs) {
  Check c;
  c.name = "diameter";
  if (theorem) c.values.emplace_back("theorem", *theorem);
  if (max_over_s) c.values.emplace_back("max_over_s", *max_over_s);
  c.values.emplace_back("bfs", bfs);
  if (max_over_s && *max_over_s != bfs) {
    c.record({-1, "max_over_s vs bfs", bfs.str(), max_over_s->str()});
  } else if (theorem && *theorem != bfs) {
    c.status = Status::flagged;
    c.mismatches.push_back({-1, "theorem vs bfs", bfs.str(), theorem->str()});
  }
  return c;
}

}  // namespace

void Check::record(Mismatch m) {
  status = Status::fail;
  if (mismatches.size() < kMismatchCap)
    mismatches.push_back(std::move(m));
  else
    note = "mismatch list truncated at " + std::to_string(kMismatchCap);
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::flagged: return "flagged";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

Status VerificationReport::status() const {
  if (!skip_reason.empty()) return Status::skipped;
  bool any_flag = false;
  bool all_skipped = !checks.empty();
  for (const Check& c : checks) {
    if (c.status == Status::fail) return Status::fail;
    if (c.status == Status::flagged) any_flag = true;
    if (c.status != Status::skipped) all_skipped = false;
  }
  if (any_flag) return Status::flagged;
  if (all_skipped) return Status::skipped;
  return Status::pass;
}

namespace {

// ---------------------------------------------------------------------------
// exact-kneser tuples

VerificationReport run_exact(const ExactParams& P, const VerifyOptions& opt,
                             bool with_adj, bool with_dist, bool with_diam) {
  const int k = P.base.k;
  const int r = P.base.r;
  VerificationReport rep;
  rep.family = "exact-kneser";
  rep.params = {{"k", k}, {"r", r}, {"d", P.d}};
  const auto t0 = Clock::now();
  rep.vertex_count = binomial(P.base.n, k);
  if (rep.vertex_count > opt.budget) {
    rep.skip_reason = "budget: " + std::to_string(rep.vertex_count) +
                      " vertices exceed " + std::to_string(opt.budget);
    rep.elapsed_ms = ms_since(t0);
    return rep;
  }

  const Graph base = Graph::kneser(P.base, opt.budget);
  const DistanceField base_field = bfs_from(base, 0);

  if (with_adj) {
    Check c;
    c.name = "adjacency";
    for (int s = 0; s < k; ++s) {
      const Vertex partner = canonical_pair(P.base.n, k, s).second;
      const bool expected = base_field.at(rank_colex(partner, k)) == Distance::finite(P.d);
      const bool actual = exact_is_adjacent(P, s);
      if (expected != actual) c.record({s, "", bool_str(expected), bool_str(actual)});
    }
    rep.checks.push_back(std::move(c));
  }

  if (with_dist || with_diam) {
    // Ground-truth adjacency of the distance-d graph from the base buckets.
    const DistanceProfile base_profile = distance_profile(base, base_field);
    std::uint64_t mask = 0;
    bool base_ok = true;
    Check base_check;
    base_check.name = "base_profile_singleton";
    for (int s = 0; s < k; ++s) {
      const auto& bucket = base_profile[static_cast<std::size_t>(s)];
      if (bucket.size() != 1) {
        base_check.record({s, "", "singleton", set_str(bucket)});
        base_ok = false;
        continue;
      }
      if (*bucket.begin() == Distance::finite(P.d)) mask |= std::uint64_t{1} << s;
    }
    if (!base_ok) {
      rep.checks.push_back(std::move(base_check));
      rep.elapsed_ms = ms_since(t0);
      return rep;
    }

    const Graph exact_g = Graph::exact_from_mask(P.base, P.d, mask, opt.budget);
    const DistanceField field = bfs_from(exact_g, 0);
    const DistanceProfile profile = distance_profile(exact_g, field);
    const std::int64_t rp = std::int64_t{r} * P.p;

    if (with_dist) {
      Check dist_c, single_c;
      dist_c.name = "distance";
      single_c.name = "profile_singleton";
      for (int s = 0; s <= k; ++s) {
        const auto& bucket = profile[static_cast<std::size_t>(s)];
        if (bucket.size() != 1) {
          single_c.record({s, "", "singleton", set_str(bucket)});
          dist_c.record({s, "", "singleton bucket", set_str(bucket)});
          continue;
        }
        const Distance got = *bucket.begin();
        const Distance want = exact_distance(P, s);
        if (got != want) dist_c.record({s, "", got.str(), want.str()});
      }

      Check bounds_c;
      bounds_c.name = "path_length_bounds";
      const std::uint64_t src_bits = exact_g.vertex_bits(0);
      for (std::int64_t rank = 0; rank < rep.vertex_count; ++rank) {
        const std::int32_t len = field.raw[static_cast<std::size_t>(rank)];
        if (len <= 0) continue;
        const std::int64_t L = len;
        const int s = std::popcount(src_bits & exact_g.vertex_bits(rank));
        if (!P.odd) {
          const std::int64_t lo = k - L * rp;
          if (s < lo)
            bounds_c.record({s, "", "s >= " + std::to_string(lo) + " at length " + std::to_string(L),
                             std::to_string(s)});
        } else if (L % 2 == 0) {
          const std::int64_t lo = k - L * rp - r * (L / 2);
          if (s < lo)
            bounds_c.record({s, "", "s >= " + std::to_string(lo) + " at length " + std::to_string(L),
                             std::to_string(s)});
        } else {
          const std::int64_t hi = L * rp + r * ((L - 1) / 2);
          if (s > hi)
            bounds_c.record({s, "", "s <= " + std::to_string(hi) + " at length " + std::to_string(L),
                             std::to_string(s)});
        }
      }

      rep.checks.push_back(std::move(dist_c));
      rep.checks.push_back(std::move(single_c));
      rep.checks.push_back(std::move(bounds_c));

      if (P.odd && P.d < P.base.D && k >= 2 * rp + r + 1) {
        Check forced;
        forced.name = "odd_s0_distance_3";
        const auto& bucket = profile[0];
        if (bucket.size() != 1 || *bucket.begin() != Distance::finite(3))
          forced.record({0, "", "3", set_str(bucket)});
        rep.checks.push_back(std::move(forced));
      }
    }

    if (with_diam) {
      rep.checks.push_back(diameter_check(exact_diameter_theorem(P),
                                          exact_diameter_max_over_s(P),
                                          eccentricity(field)));
    }
  }

  rep.elapsed_ms = ms_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// base Kneser tuples

VerificationReport run_base(const KneserParams& P, const VerifyOptions& opt,
                            bool with_formulas, bool with_stahl) {
  VerificationReport rep;
  rep.family = "kneser";
  rep.params = {{"k", P.k}, {"r", P.r}};
  const auto t0 = Clock::now();
  rep.vertex_count = binomial(P.n, P.k);
  if (rep.vertex_count > opt.budget) {
    rep.skip_reason = "budget: " + std::to_string(rep.vertex_count) +
                      " vertices exceed " + std::to_string(opt.budget);
    rep.elapsed_ms = ms_since(t0);
    return rep;
  }

  const Graph g = Graph::kneser(P, opt.budget);
  const DistanceField field = bfs_from(g, 0);
  const DistanceProfile profile = distance_profile(g, field);

  if (with_formulas) {
    Check dist_c, single_c;
    dist_c.name = "kneser_distance";
    single_c.name = "profile_singleton";
    for (int s = 0; s <= P.k; ++s) {
      const auto& bucket = profile[static_cast<std::size_t>(s)];
      if (bucket.size() != 1) {
        single_c.record({s, "", "singleton", set_str(bucket)});
        dist_c.record({s, "", "singleton bucket", set_str(bucket)});
        continue;
      }
      const Distance got = *bucket.begin();
      const Distance want = kneser_distance(P.k, P.r, s);
      if (got != want) dist_c.record({s, "", got.str(), want.str()});
    }
    rep.checks.push_back(std::move(dist_c));
    rep.checks.push_back(std::move(single_c));

    if (P.k >= 2) {
      Distance maxs = Distance::finite(0);
      for (int s = 0; s < P.k; ++s) maxs = std::max(maxs, kneser_distance(P.k, P.r, s));
      Check diam = diameter_check(kneser_diameter(P.k, P.r), maxs, eccentricity(field));
      diam.name = "kneser_diameter";
      rep.checks.push_back(std::move(diam));
    }
  }

  if (with_stahl) {
    Check c;
    c.name = "stahl";
    const std::uint64_t src_bits = g.vertex_bits(0);
    for (std::int64_t rank = 0; rank < rep.vertex_count; ++rank) {
      const std::int32_t len = field.raw[static_cast<std::size_t>(rank)];
      if (len < 0) continue;
      const int s = std::popcount(src_bits & g.vertex_bits(rank));
      const StahlBound bound = stahl_bound(P.k, P.r, len);
      const bool ok = bound.kind == BoundKind::lower ? s >= bound.value : s <= bound.value;
      if (!ok)
        c.record({s, "",
                  (bound.kind == BoundKind::lower ? "s >= " : "s <= ") +
                      std::to_string(bound.value) + " at length " + std::to_string(len),
                  std::to_string(s)});
    }
    rep.checks.push_back(std::move(c));
  }

  rep.elapsed_ms = ms_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// generalized families

VerificationReport run_generalized(const GenParams& P, const VerifyOptions& opt,
                                   bool compare_strict, bool explore_boundary) {
  const bool is_kneser = P.family == GenFamily::kneser;
  const int k = P.k;
  const int i = P.i;
  VerificationReport rep;
  rep.family = is_kneser ? "gen-kneser" : "gen-johnson";
  rep.params = {{"n", P.n}, {"k", k}, {"i", i}};
  const auto t0 = Clock::now();
  rep.vertex_count = binomial(P.n, k);
  if (rep.vertex_count > opt.budget) {
    rep.skip_reason = "budget: " + std::to_string(rep.vertex_count) +
                      " vertices exceed " + std::to_string(opt.budget);
    rep.elapsed_ms = ms_since(t0);
    return rep;
  }

  const int r = P.r();
  const bool dist_dom = is_kneser ? (r < k - 2 * i - 1 && i + r >= 1) : true;
  const bool diam_dom = is_kneser ? r >= 1 : true;
  const bool boundary =
      is_kneser && explore_boundary && !dist_dom && r == k - 2 * i - 1 && i + r >= 1;
  if (!dist_dom && !diam_dom && !boundary) {
    rep.skip_reason = "outside both theorem domains (r = " + std::to_string(r) + ")";
    rep.elapsed_ms = ms_since(t0);
    return rep;
  }

  const auto formula = [&](int s) -> Distance {
    if (!is_kneser) return gen_johnson_distance(P.n, k, i, s);
    if (boundary) {  // same shape as the in-domain formula, evaluated past it
      if (s == k) return Distance::finite(0);
      if (s <= i) return Distance::finite(1);
      const std::int64_t step = i + r;
      return Distance::finite(std::min(2 * ceil_div(k - s, step),
                                       2 * ceil_div(s - i, step) + 1));
    }
    return gen_kneser_distance(P.n, k, i, s);
  };

  const Graph g = is_kneser ? Graph::gen_kneser(P, opt.budget) : Graph::gen_johnson(P, opt.budget);
  const DistanceField field = bfs_from(g, 0);
  const DistanceProfile profile = distance_profile(g, field);
  const int s_min = std::max(0, 2 * k - P.n);

  Check dist_c, single_c;
  dist_c.name = "distance";
  single_c.name = "profile_singleton";
  for (int s = s_min; s <= k; ++s) {
    const auto& bucket = profile[static_cast<std::size_t>(s)];
    if (bucket.size() != 1) {
      single_c.record({s, "", "singleton", set_str(bucket)});
      if (dist_dom || boundary) dist_c.record({s, "", "singleton bucket", set_str(bucket)});
      continue;
    }
    if (!dist_dom && !boundary) continue;
    const Distance got = *bucket.begin();
    const Distance want = formula(s);
    if (got != want) {
      if (boundary) {
        dist_c.status = Status::flagged;
        if (dist_c.mismatches.size() < kMismatchCap)
          dist_c.mismatches.push_back({s, "", got.str(), want.str()});
      } else {
        dist_c.record({s, "", got.str(), want.str()});
      }
    }
  }
  if (!dist_dom && !boundary) {
    dist_c.status = Status::skipped;
    dist_c.note = "r = " + std::to_string(r) + " outside the distance-theorem domain";
  } else if (boundary) {
    dist_c.note = "exploratory: r = k-2i-1 sits outside the stated domain";
  }
  rep.checks.push_back(std::move(dist_c));
  rep.checks.push_back(std::move(single_c));

  {
    std::optional<Distance> theorem;
    if (diam_dom)
      theorem = is_kneser ? gen_kneser_diameter(P.n, k, i) : gen_johnson_diameter(P.n, k, i);
    std::optional<Distance> maxs;
    if (dist_dom) {
      Distance best = Distance::finite(0);
      for (int s = s_min; s < k; ++s) best = std::max(best, formula(s));
      maxs = best;
    }
    Check diam = diameter_check(theorem, maxs, eccentricity(field));
    if (!diam_dom) diam.note = "r = " + std::to_string(r) + " outside the diameter-theorem domain";
    rep.checks.push_back(std::move(diam));
  }

  if (is_kneser && compare_strict && (dist_dom || boundary)) {
    Check strict_c;
    strict_c.name = "distance_strict_convention";
    if (i == 0) {
      strict_c.status = Status::skipped;
      strict_c.note = "strict reading with i = 0 yields an edgeless graph";
    } else {
      const Graph sg = Graph::gen_kneser(P, opt.budget, /*strict_adjacency=*/true);
      const DistanceProfile sp = distance_profile(sg, 0);
      for (int s = s_min; s <= k; ++s) {
        const auto& bucket = sp[static_cast<std::size_t>(s)];
        // Convention-adapted reading of the same formula.
        const Distance want = s == k   ? Distance::finite(0)
                              : s < i  ? Distance::finite(1)
                                       : formula(s);
        const std::string got = bucket.size() == 1 ? bucket.begin()->str() : set_str(bucket);
        if (bucket.size() != 1 || *bucket.begin() != want) {
          strict_c.status = Status::flagged;
          if (strict_c.mismatches.size() < kMismatchCap)
            strict_c.mismatches.push_back({s, "", got, want.str()});
        }
      }
      strict_c.note = strict_c.status == Status::flagged
                          ? "distance theorem matches the at-most-i convention only"
                          : "strict convention matches as well";
    }
    rep.checks.push_back(std::move(strict_c));
  }

  if (i == 0) {
    Check red_c;
    red_c.name = "reduction_identity";
    if (is_kneser && !dist_dom) {
      red_c.status = Status::skipped;
      red_c.note = "r outside the distance-theorem domain";
    } else {
      const int rr = P.n - 2 * k;  // equals r for the kneser flavour at i = 0
      for (int s = 0; s <= k; ++s) {
        const Distance gen = is_kneser ? gen_kneser_distance(P.n, k, 0, s)
                                       : gen_johnson_distance(P.n, k, 0, s);
        const Distance want = kneser_distance(k, rr, s);
        if (gen != want) red_c.record({s, "", want.str(), gen.str()});
      }
    }
    rep.checks.push_back(std::move(red_c));
  }

  rep.elapsed_ms = ms_since(t0);
  return rep;
}

}  // namespace

VerificationReport verify_exact_adjacency(const ExactParams& params, const VerifyOptions& opt) {
  return run_exact(params, opt, true, false, false);
}

VerificationReport verify_exact_distance(const ExactParams& params, const VerifyOptions& opt) {
  return run_exact(params, opt, false, true, false);
}

VerificationReport verify_diameters(const ExactParams& params, const VerifyOptions& opt) {
  return run_exact(params, opt, false, false, true);
}

VerificationReport verify_exact_tuple(const ExactParams& params, const VerifyOptions& opt) {
  return run_exact(params, opt, true, true, true);
}

VerificationReport verify_kneser_base(const KneserParams& params, const VerifyOptions& opt) {
  return run_base(params, opt, true, true);
}

VerificationReport verify_stahl(int k, int r, const VerifyOptions& opt) {
  return run_base(KneserParams(k, r), opt, false, true);
}

VerificationReport verify_generalized(const GenParams& params, const VerifyOptions& opt,
                                      bool compare_strict) {
  return run_generalized(params, opt, compare_strict, false);
}

VerificationReport verify_formula_identities(int k_max) {
  if (k_max < 2) throw std::invalid_argument("k_max must be at least 2");
  VerificationReport rep;
  rep.family = "formula-identity";
  rep.params = {{"k_max", k_max}};
  const auto t0 = Clock::now();

  Check part_c, adj1_c, mono_c, red_c;
  part_c.name = "partition";
  adj1_c.name = "adjacency_iff_distance_1";
  mono_c.name = "even_case_monotonicity";
  red_c.name = "reduction_identity";

  for (int k = 2; k <= k_max; ++k) {
    for (int r = 1; r <= k - 2; ++r) {
      const KneserParams base(k, r);
      for (int s = 0; s < k; ++s) {
        const std::int64_t via_formula = kneser_distance(k, r, s).hops();
        int hits = 0;
        for (int d = 1; d <= base.D; ++d) {
          const ExactParams P(base, d);
          const bool adj = exact_is_adjacent(P, s);
          if (adj) ++hits;
          if (adj != (d == via_formula))
            part_c.record({s, "k=" + std::to_string(k) + " r=" + std::to_string(r) +
                                  " d=" + std::to_string(d),
                           bool_str(d == via_formula), bool_str(adj)});
          const bool dist_is_1 = exact_distance(P, s) == Distance::finite(1);
          if (dist_is_1 != adj)
            adj1_c.record({s, "k=" + std::to_string(k) + " r=" + std::to_string(r) +
                                  " d=" + std::to_string(d),
                           bool_str(adj), bool_str(dist_is_1)});
        }
        if (hits != 1)
          part_c.record({s, "k=" + std::to_string(k) + " r=" + std::to_string(r),
                         "1 adjacent d", std::to_string(hits)});
      }
      for (int d = 2; d <= base.D; d += 2) {
        const ExactParams P(base, d);
        Distance prev = Distance::infinite();
        for (int s = 0; s < k; ++s) {
          if (exact_is_adjacent(P, s)) continue;
          const Distance cur = exact_distance(P, s);
          if (cur > prev)
            mono_c.record({s, "k=" + std::to_string(k) + " r=" + std::to_string(r) +
                                  " d=" + std::to_string(d),
                           "<= " + prev.str(), cur.str()});
          prev = cur;
        }
      }
      for (int s = 0; s <= k; ++s) {
        if (gen_kneser_distance(2 * k + r, k, 0, s) != kneser_distance(k, r, s))
          red_c.record({s, "gen-kneser k=" + std::to_string(k) + " r=" + std::to_string(r),
                        kneser_distance(k, r, s).str(),
                        gen_kneser_distance(2 * k + r, k, 0, s).str()});
      }
    }
    for (int r = 1; r <= k && 2 * k + r <= kMaxGroundSet; ++r) {
      for (int s = 0; s <= k; ++s) {
        if (gen_johnson_distance(2 * k + r, k, 0, s) != kneser_distance(k, r, s))
          red_c.record({s, "gen-johnson k=" + std::to_string(k) + " r=" + std::to_string(r),
                        kneser_distance(k, r, s).str(),
                        gen_johnson_distance(2 * k + r, k, 0, s).str()});
      }
    }
  }

  rep.checks.push_back(std::move(part_c));
  rep.checks.push_back(std::move(adj1_c));
  rep.checks.push_back(std::move(mono_c));
  rep.checks.push_back(std::move(red_c));
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json distance_json(const Distance& d) {
  if (d.is_finite()) return ordered_json(d.hops());
  return ordered_json("inf");
}

}  // namespace

std::string to_json_line(const VerificationReport& report, bool with_timings) {
  ordered_json j;
  j["family"] = report.family;
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  j["params"] = std::move(params);
  ordered_json checks = ordered_json::array();
  for (const Check& c : report.checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = status_name(c.status);
    ordered_json mm = ordered_json::array();
    for (const Mismatch& m : c.mismatches) {
      ordered_json jm;
      if (m.s >= 0)
        jm["s"] = m.s;
      else
        jm["pair"] = m.pair;
      if (!m.pair.empty() && m.s >= 0) jm["pair"] = m.pair;
      jm["expected"] = m.expected;
      jm["actual"] = m.actual;
      mm.push_back(std::move(jm));
    }
    jc["mismatches"] = std::move(mm);
    for (const auto& [label, value] : c.values) jc[label] = distance_json(value);
    if (!c.note.empty()) jc["note"] = c.note;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["vertex_count"] = report.vertex_count;
  j["elapsed_ms"] = with_timings ? report.elapsed_ms : 0;
  j["status"] = status_name(report.status());
  if (!report.skip_reason.empty()) j["skip_reason"] = report.skip_reason;
  return j.dump() + "\n";
}

std::string to_json_line(const SweepSummary& summary) {
  ordered_json j;
  j["tuples"] = summary.tuples;
  j["passes"] = summary.passes;
  j["flags"] = summary.flags;
  j["fails"] = summary.fails;
  j["skips"] = summary.skips;
  return j.dump() + "\n";
}

// ---------------------------------------------------------------------------
// sweep

namespace {

struct SweepTask {
  enum class Kind { base, exact, gen_kneser, gen_johnson } kind;
  int k = 0, r = 0, d = 0, n = 0, i = 0;
  bool boundary = false;
};

std::vector<SweepTask> enumerate_tasks(const SweepSpec& spec) {
  if (spec.budget < 1) throw std::invalid_argument("budget must be at least 1");
  if (spec.k_min < 1) throw std::invalid_argument("k_min must be at least 1");
  std::vector<SweepTask> tasks;
  const int k_lo = std::max(2, spec.k_min);
  if (spec.include_kneser) {
    for (int k = k_lo; k <= spec.k_max; ++k)
      for (int r = 1; 2 * k + r <= std::min(spec.n_max, kMaxGroundSet); ++r)
        tasks.push_back({SweepTask::Kind::base, k, r, 0, 0, 0, false});
  }
  if (spec.include_exact) {
    for (int k = k_lo; k <= spec.k_max; ++k)
      for (int r = 1; 2 * k + r <= std::min(spec.n_max, kMaxGroundSet); ++r) {
        const KneserParams base(k, r);
        for (int d = 2; d <= base.D; ++d)
          tasks.push_back({SweepTask::Kind::exact, k, r, d, 0, 0, false});
      }
  }
  if (spec.include_gen_kneser) {
    for (int n = 2; n <= std::min(spec.gen_n_max, kMaxGroundSet); ++n)
      for (int k = 1; k <= std::min(spec.gen_k_max, n - 1); ++k)
        for (int i = 0; i < k; ++i) {
          const int r = n - 2 * k + i;
          if (r < 0) continue;
          const bool dist_dom = r < k - 2 * i - 1 && i + r >= 1;
          const bool diam_dom = r >= 1;
          const bool boundary = spec.gen_boundary && !dist_dom && r == k - 2 * i - 1 && i + r >= 1;
          if (dist_dom || diam_dom || boundary)
            tasks.push_back({SweepTask::Kind::gen_kneser, k, 0, 0, n, i, boundary && !diam_dom});
        }
  }
  if (spec.include_gen_johnson) {
    for (int n = 2; n <= std::min(spec.gen_n_max, kMaxGroundSet); ++n)
      for (int k = 1; k <= std::min(spec.gen_k_max, n - 1); ++k) {
        if (n < 2 * k) continue;
        for (int i = 0; i < k; ++i) {
          if (n == 2 * k && i == 0) continue;
          tasks.push_back({SweepTask::Kind::gen_johnson, k, 0, 0, n, i, false});
        }
      }
  }
  return tasks;
}

VerificationReport run_task(const SweepTask& task, const SweepSpec& spec) {
  const VerifyOptions opt{spec.budget};
  try {
    switch (task.kind) {
      case SweepTask::Kind::base:
        return run_base(KneserParams(task.k, task.r), opt, true, true);
      case SweepTask::Kind::exact:
        return run_exact(ExactParams(task.k, task.r, task.d), opt, true, true, true);
      case SweepTask::Kind::gen_kneser:
        return run_generalized(GenParams(task.n, task.k, task.i, GenFamily::kneser), opt,
                               spec.compare_strict_convention, spec.gen_boundary);
      case SweepTask::Kind::gen_johnson:
        return run_generalized(GenParams(task.n, task.k, task.i, GenFamily::johnson), opt,
                               false, false);
    }
  } catch (const std::exception& e) {
    VerificationReport rep;
    rep.family = task.kind == SweepTask::Kind::base ? "kneser"
                 : task.kind == SweepTask::Kind::exact ? "exact-kneser"
                 : task.kind == SweepTask::Kind::gen_kneser ? "gen-kneser"
                                                            : "gen-johnson";
    if (task.kind == SweepTask::Kind::base)
      rep.params = {{"k", task.k}, {"r", task.r}};
    else if (task.kind == SweepTask::Kind::exact)
      rep.params = {{"k", task.k}, {"r", task.r}, {"d", task.d}};
    else
      rep.params = {{"n", task.n}, {"k", task.k}, {"i", task.i}};
    Check c;
    c.name = "exception";
    c.record({-1, "exception", "no exception", e.what()});
    rep.checks.push_back(std::move(c));
    return rep;
  }
  return {};
}

}  // namespace

SweepSummary sweep(const SweepSpec& spec,
                   const std::function<void(const VerificationReport&)>& sink) {
  const std::vector<SweepTask> tasks = enumerate_tasks(spec);
  SweepSummary sum;
  if (tasks.empty()) return sum;

  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t jobs = std::min<std::size_t>(
      tasks.size(), spec.jobs > 0 ? static_cast<std::size_t>(spec.jobs)
                                  : std::max(1u, hw));

  std::vector<std::optional<VerificationReport>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> cancel{false};
  std::mutex mu;
  std::condition_variable cv;

  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      while (!cancel.load(std::memory_order_relaxed)) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= tasks.size()) return;
        VerificationReport rep = run_task(tasks[idx], spec);
        {
          std::lock_guard<std::mutex> lk(mu);
          slots[idx] = std::move(rep);
        }
        cv.notify_all();
      }
    });
  }
  struct Joiner {
    std::vector<std::thread>& workers;
    std::atomic<bool>& cancel;
    ~Joiner() {
      cancel.store(true, std::memory_order_relaxed);
      for (std::thread& t : workers)
        if (t.joinable()) t.join();
    }
  } joiner{workers, cancel};

  // Emit strictly in task order regardless of completion order.
  for (std::size_t idx = 0; idx < tasks.size(); ++idx) {
    std::unique_lock<std::mutex> lk(mu);
    cv.wait(lk, [&] { return slots[idx].has_value(); });
    VerificationReport rep = std::move(*slots[idx]);
    slots[idx].reset();
    lk.unlock();
    ++sum.tuples;
    switch (rep.status()) {
      case Status::pass: ++sum.passes; break;
      case Status::flagged: ++sum.flags; break;
      case Status::fail: ++sum.fails; break;
      case Status::skipped: ++sum.skips; break;
    }
    if (sink) sink(rep);
  }
  return sum;
}

}  // namespace kneser
