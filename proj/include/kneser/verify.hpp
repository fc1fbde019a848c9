#pragma once
// Formula-versus-BFS verification: per-tuple reports with pass/flagged/fail
// checks, a parameter sweep with deterministic JSON-lines serialization, and
// the BFS-free formula-identity suite. Flagged means the literal case value
// disagrees with ground truth while the independent route agrees; fail means
// the implementation disagrees with ground truth.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kneser/combinatorics.hpp"
#include "kneser/formulas.hpp"
#include "kneser/graphcore.hpp"

namespace kneser {

enum class Status { pass, flagged, fail, skipped };

std::string_view status_name(Status s);

struct Mismatch {
  int s = -1;        // bucket key when >= 0 ...
  std::string pair;  // ... otherwise a free-form key
  std::string expected;
  std::string actual;
};

struct Check {
  std::string name;
  Status status = Status::pass;
  std::vector<Mismatch> mismatches;
  std::vector<std::pair<std::string, Distance>> values;  // labeled results (diameter routes)
  std::string note;

  void record(Mismatch m);  // flips pass -> fail and appends (capped)
};

struct VerificationReport {
  std::string family;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::vector<Check> checks;
  std::int64_t vertex_count = 0;
  std::int64_t elapsed_ms = 0;
  std::string skip_reason;  // non-empty means the whole tuple was skipped

  Status status() const;
};

struct VerifyOptions {
  std::int64_t budget = kDefaultVertexBudget;
};

// Theorem adjacency versus base-graph BFS to every canonical-pair partner.
VerificationReport verify_exact_adjacency(const ExactParams& params,
                                          const VerifyOptions& opt = {});

// Distance formula versus BFS buckets in the ground-truth distance-d graph,
// plus the bucket-singleton and walk-length bound checks.
VerificationReport verify_exact_distance(const ExactParams& params,
                                         const VerifyOptions& opt = {});

// The diameter triple: literal case value, max over s, BFS. All three are
// always recorded; pass needs all to agree, flagged means only the literal
// value is off, fail means the max-over-s route disagrees with BFS.
VerificationReport verify_diameters(const ExactParams& params,
                                    const VerifyOptions& opt = {});

// All of the above from one BFS pass; what the sweep runs per tuple.
VerificationReport verify_exact_tuple(const ExactParams& params,
                                      const VerifyOptions& opt = {});

// Base-graph checks: distance formula per bucket, diameter triple, and the
// walk-parity intersection bounds.
VerificationReport verify_kneser_base(const KneserParams& params,
                                      const VerifyOptions& opt = {});

VerificationReport verify_stahl(int k, int r, const VerifyOptions& opt = {});

// Generalized-family checks under the at-most-i adjacency convention; for
// the kneser flavour the strictly-less-than reading is also run and the
// outcome recorded. Tuples outside a theorem's stated domain skip that
// check with a reason rather than evaluating it.
VerificationReport verify_generalized(const GenParams& params,
                                      const VerifyOptions& opt = {},
                                      bool compare_strict = true);

// BFS-free identities over 2 <= k <= k_max: the adjacency intervals of the
// derived graphs partition 0..k-1 across d and agree with the base distance
// formula, distance 1 is equivalent to adjacency, the even-case formula is
// monotone over non-adjacent s, and the i = 0 reductions hold.
VerificationReport verify_formula_identities(int k_max = 9);

// One JSON object per line; elapsed_ms is serialized as 0 unless
// with_timings is set, keeping repeated runs byte-identical.
std::string to_json_line(const VerificationReport& report, bool with_timings = false);

struct SweepSpec {
  int k_min = 2;
  int k_max = 7;
  int n_max = 16;       // cap on 2k+r for base and derived tuples
  int gen_k_max = 6;
  int gen_n_max = 14;
  std::int64_t budget = kDefaultVertexBudget;
  bool include_kneser = true;
  bool include_exact = true;
  bool include_gen_kneser = true;
  bool include_gen_johnson = true;
  bool compare_strict_convention = true;
  bool gen_boundary = false;  // also probe r = k-2i-1, reported as flagged-only
  int jobs = 0;               // 0 = hardware concurrency
};

struct SweepSummary {
  std::int64_t tuples = 0;
  std::int64_t passes = 0;
  std::int64_t flags = 0;
  std::int64_t fails = 0;
  std::int64_t skips = 0;
};

std::string to_json_line(const SweepSummary& summary);

// Runs every tuple in the given ranges -- base (k,r), derived (k,r,d), then
// generalized (n,k,i) per flavour, each lexicographic -- and hands reports to
// the sink in exactly that order. Tuples are evaluated concurrently and
// reordered before emission, so output does not depend on the job count.
SweepSummary sweep(const SweepSpec& spec,
                   const std::function<void(const VerificationReport&)>& sink);

}  // namespace kneser
