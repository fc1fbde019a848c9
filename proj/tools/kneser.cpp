// Command-line surface: distance/diameter queries, graph export, the
// verification sweep, and a micro-benchmark. Exit codes: 0 success (flags
// allowed), 1 verification failure, 2 invalid parameters, 3 budget exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kneser/combinatorics.hpp"
#include "kneser/formulas.hpp"
#include "kneser/graphcore.hpp"
#include "kneser/io.hpp"
#include "kneser/verify.hpp"

namespace {

using namespace kneser;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitBudget = 3;

std::int64_t env_budget() {
  const char* raw = std::getenv("KNESER_BUDGET");
  if (raw == nullptr) return kDefaultVertexBudget;
  std::istringstream in(raw);
  std::int64_t value = 0;
  if (!(in >> value) || !in.eof() || value < 1)
    throw std::invalid_argument("KNESER_BUDGET must be a positive integer");
  return value;
}

struct FamilyFlags {
  int k = -1;
  int r = -1;
  int d = -1;
  int n = -1;
  int i = -1;
  std::string family;
};

enum class Resolved { kneser, exact, gen_kneser, gen_johnson };

Resolved resolve_family(const FamilyFlags& f) {
  std::string name = f.family;
  if (name.empty()) {
    if (f.n >= 0 || f.i >= 0)
      throw std::invalid_argument("generalized families need an explicit --family");
    name = f.d >= 0 ? "exact" : "kneser";
  }
  if (name == "kneser") {
    if (f.k < 0 || f.r < 0) throw std::invalid_argument("kneser family needs --k and --r");
    if (f.d >= 0) throw std::invalid_argument("--d selects the exact-distance family");
    return Resolved::kneser;
  }
  if (name == "exact") {
    if (f.k < 0 || f.r < 0 || f.d < 0)
      throw std::invalid_argument("exact family needs --k, --r and --d");
    return Resolved::exact;
  }
  if (name == "gen-kneser" || name == "gen-johnson") {
    if (f.n < 0 || f.k < 0 || f.i < 0)
      throw std::invalid_argument(name + " family needs --n, --k and --i");
    if (f.r >= 0 || f.d >= 0)
      throw std::invalid_argument(name + " family takes --n/--k/--i only");
    return name == "gen-kneser" ? Resolved::gen_kneser : Resolved::gen_johnson;
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

int cmd_dist(const FamilyFlags& f, int s) {
  Distance out = Distance::infinite();
  switch (resolve_family(f)) {
    case Resolved::kneser: out = kneser_distance(f.k, f.r, s); break;
    case Resolved::exact: out = exact_distance(ExactParams(f.k, f.r, f.d), s); break;
    case Resolved::gen_kneser: out = gen_kneser_distance(f.n, f.k, f.i, s); break;
    case Resolved::gen_johnson: out = gen_johnson_distance(f.n, f.k, f.i, s); break;
  }
  std::cout << out.str() << "\n";
  return kExitOk;
}

Distance max_over_realizable_s(int n, int k, const std::function<Distance(int)>& dist) {
  Distance best = Distance::finite(0);
  for (int s = std::max(0, 2 * k - n); s < k; ++s) best = std::max(best, dist(s));
  return best;
}

int cmd_diam(const FamilyFlags& f, const std::string& mode, std::int64_t budget) {
  const Resolved fam = resolve_family(f);
  std::optional<Distance> theorem, maxs, bfs;
  const bool want_theorem = mode == "theorem" || mode == "all";
  const bool want_maxs = mode == "maxs" || mode == "all";
  const bool want_bfs = mode == "bfs" || mode == "all";
  if (!(want_theorem || want_maxs || want_bfs))
    throw std::invalid_argument("mode must be one of theorem|maxs|bfs|all");
  // The three routes are computed independently and never reconciled here;
  // disagreement is the verify sweep's business.

  switch (fam) {
    case Resolved::kneser: {
      const KneserParams base(f.k, f.r);
      if (want_theorem) theorem = kneser_diameter(f.k, f.r);
      if (want_maxs)
        maxs = max_over_realizable_s(base.n, f.k,
                                     [&](int s) { return kneser_distance(f.k, f.r, s); });
      if (want_bfs) bfs = graph_diameter_bfs(Graph::kneser(base, budget), true);
      break;
    }
    case Resolved::exact: {
      const ExactParams params(f.k, f.r, f.d);
      if (want_theorem) theorem = exact_diameter_theorem(params);
      if (want_maxs) maxs = exact_diameter_max_over_s(params);
      if (want_bfs)
        bfs = graph_diameter_bfs(Graph::exact_by_bfs(params.base, f.d, budget), true);
      break;
    }
    case Resolved::gen_kneser: {
      const GenParams params(f.n, f.k, f.i, GenFamily::kneser);
      if (want_theorem) theorem = gen_kneser_diameter(f.n, f.k, f.i);
      if (want_maxs)
        maxs = max_over_realizable_s(f.n, f.k,
                                     [&](int s) { return gen_kneser_distance(f.n, f.k, f.i, s); });
      if (want_bfs) bfs = graph_diameter_bfs(Graph::gen_kneser(params, budget), true);
      break;
    }
    case Resolved::gen_johnson: {
      const GenParams params(f.n, f.k, f.i, GenFamily::johnson);
      if (want_theorem) theorem = gen_johnson_diameter(f.n, f.k, f.i);
      if (want_maxs)
        maxs = max_over_realizable_s(f.n, f.k,
                                     [&](int s) { return gen_johnson_distance(f.n, f.k, f.i, s); });
      if (want_bfs) bfs = graph_diameter_bfs(Graph::gen_johnson(params, budget), true);
      break;
    }
  }

  if (mode == "all") {
    const DiameterTriple triple{*theorem, *maxs, bfs};
    std::cout << "theorem=" << triple.theorem.str() << " maxs=" << triple.max_over_s.str()
              << " bfs=" << triple.bfs->str() << "\n";
  } else if (mode == "theorem") {
    std::cout << theorem->str() << "\n";
  } else if (mode == "maxs") {
    std::cout << maxs->str() << "\n";
  } else {
    std::cout << bfs->str() << "\n";
  }
  return kExitOk;
}

int cmd_gen(const FamilyFlags& f, const std::string& from, const std::string& format,
            const std::string& out_path, std::int64_t budget) {
  if (format != "edgelist" && format != "dot")
    throw std::invalid_argument("format must be edgelist or dot");

  Graph g = [&]() -> Graph {
    if (!from.empty()) {
      std::ifstream in(from);
      if (!in) throw std::invalid_argument("cannot open " + from);
      Graph loaded = load_edgelist(in);
      if (f.d >= 0) return exact_distance_transform(loaded, f.d, budget);
      return loaded;
    }
    switch (resolve_family(f)) {
      case Resolved::kneser: return Graph::kneser(KneserParams(f.k, f.r), budget);
      case Resolved::exact:
        // Total in d: d = 1 is the base graph, d past the diameter exports an
        // edgeless graph rather than erroring.
        return Graph::exact_formula(KneserParams(f.k, f.r), f.d, budget);
      case Resolved::gen_kneser:
        return Graph::gen_kneser(GenParams(f.n, f.k, f.i, GenFamily::kneser), budget);
      case Resolved::gen_johnson:
        return Graph::gen_johnson(GenParams(f.n, f.k, f.i, GenFamily::johnson), budget);
    }
    throw std::invalid_argument("unreachable");
  }();

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (out_path != "-") {
    file.open(out_path);
    if (!file) throw std::invalid_argument("cannot open " + out_path + " for writing");
    out = &file;
  }
  if (format == "edgelist")
    write_edgelist(*out, g);
  else
    write_dot(*out, g);
  return kExitOk;
}

int cmd_sweep(const SweepSpec& spec, bool identities, bool timings,
              const std::string& out_path) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (out_path != "-") {
    file.open(out_path);
    if (!file) throw std::invalid_argument("cannot open " + out_path + " for writing");
    out = &file;
  }
  SweepSummary total;
  if (identities) {
    const VerificationReport rep = verify_formula_identities();
    *out << to_json_line(rep, timings);
    ++total.tuples;
    switch (rep.status()) {
      case Status::pass: ++total.passes; break;
      case Status::flagged: ++total.flags; break;
      case Status::fail: ++total.fails; break;
      case Status::skipped: ++total.skips; break;
    }
  }
  const SweepSummary swept = sweep(spec, [&](const VerificationReport& rep) {
    *out << to_json_line(rep, timings);
  });
  total.tuples += swept.tuples;
  total.passes += swept.passes;
  total.flags += swept.flags;
  total.fails += swept.fails;
  total.skips += swept.skips;
  *out << to_json_line(total);
  return total.fails > 0 ? kExitVerifyFail : kExitOk;
}

int cmd_bench(const FamilyFlags& f, std::int64_t count, std::uint64_t seed,
              std::int64_t budget) {
  const KneserParams base(f.k, f.r);
  std::optional<ExactParams> exact;
  if (f.d >= 0) exact.emplace(base, f.d);

  if (count == 0) {
    std::cout << "oracle 0 calls in 0 batches\n";
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_s(0, f.k);
    std::int64_t checksum = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::int64_t q = 0; q < count; ++q) {
      const int s = pick_s(rng);
      const Distance d =
          exact ? exact_distance(*exact, s) : kneser_distance(f.k, f.r, s);
      checksum += d.hops();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto rate = static_cast<std::int64_t>(static_cast<double>(count) / std::max(secs, 1e-9));
    if (checksum == std::numeric_limits<std::int64_t>::min()) std::cerr << "";
    std::cout << "oracle " << rate << "\n";
  }

  const Graph g = exact ? Graph::exact_formula(*exact, budget) : Graph::kneser(base, budget);
  const auto t1 = std::chrono::steady_clock::now();
  const DistanceField field = bfs_from(g, 0);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t1)
                      .count();
  if (field.raw.empty()) std::cerr << "";
  std::cout << "bfs " << ms << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance, diameter, and verification tools for Kneser-family graphs"};
  app.require_subcommand(1);

  FamilyFlags flags;
  int s_value = -1;
  std::string mode = "theorem";
  std::string format = "edgelist";
  std::string out_path = "-";
  std::string from_path;
  std::int64_t budget_flag = -1;
  std::int64_t bench_count = 1'000'000;
  std::uint64_t bench_seed = 0x5eed;
  SweepSpec spec;
  bool identities = false;
  bool timings = false;
  bool no_kneser = false, no_exact = false, no_gen_kneser = false, no_gen_johnson = false;
  bool no_strict = false;

  const auto add_family_flags = [&](CLI::App* cmd) {
    cmd->add_option("--k", flags.k, "subset size k");
    cmd->add_option("--r", flags.r, "excess r (ground set 2k+r)");
    cmd->add_option("--d", flags.d, "target exact distance d");
    cmd->add_option("--n", flags.n, "ground-set size n (generalized families)");
    cmd->add_option("--i", flags.i, "intersection parameter i (generalized families)");
    cmd->add_option("--family", flags.family, "kneser|exact|gen-kneser|gen-johnson");
  };
  const auto add_budget_flag = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget_flag, "vertex budget (overrides KNESER_BUDGET)");
  };

  CLI::App* dist = app.add_subcommand("dist", "closed-form distance for intersection size s");
  add_family_flags(dist);
  dist->add_option("--s", s_value, "intersection size")->required();

  CLI::App* diam = app.add_subcommand("diam", "diameter via theorem, max-over-s, or BFS");
  add_family_flags(diam);
  diam->add_option("--mode", mode, "theorem|maxs|bfs|all");
  add_budget_flag(diam);

  CLI::App* gen = app.add_subcommand("gen", "export a graph as edgelist or DOT");
  add_family_flags(gen);
  gen->add_option("--format", format, "edgelist|dot");
  gen->add_option("--out", out_path, "output path, - for stdout");
  gen->add_option("--from", from_path, "edge-list file to load instead of a family");
  add_budget_flag(gen);

  const auto add_sweep_flags = [&](CLI::App* cmd) {
    cmd->add_option("--kmin", spec.k_min, "smallest k (default 2)");
    cmd->add_option("--kmax", spec.k_max, "largest k (default 7)");
    cmd->add_option("--nmax", spec.n_max, "largest ground set 2k+r (default 16)");
    cmd->add_option("--gen-kmax", spec.gen_k_max, "largest k for generalized tuples (default 6)");
    cmd->add_option("--gen-nmax", spec.gen_n_max, "largest n for generalized tuples (default 14)");
    cmd->add_option("--jobs", spec.jobs, "worker threads (default: logical processors)");
    cmd->add_option("--out", out_path, "JSON-lines output path, - for stdout");
    cmd->add_flag("--identities", identities, "prepend the BFS-free formula-identity report");
    cmd->add_flag("--timings", timings, "serialize wall-clock timings (breaks byte determinism)");
    cmd->add_flag("--gen-boundary", spec.gen_boundary, "probe r = k-2i-1 tuples (flagged only)");
    cmd->add_flag("--no-kneser", no_kneser, "skip base Kneser tuples");
    cmd->add_flag("--no-exact", no_exact, "skip exact-distance tuples");
    cmd->add_flag("--no-gen-kneser", no_gen_kneser, "skip generalized Kneser tuples");
    cmd->add_flag("--no-gen-johnson", no_gen_johnson, "skip generalized Johnson tuples");
    cmd->add_flag("--no-strict-comparison", no_strict, "skip the strict-convention comparison");
    add_budget_flag(cmd);
  };
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "formula-vs-BFS sweep; JSON-lines reports");
  add_sweep_flags(sweep_cmd);
  CLI::App* verify_cmd = app.add_subcommand("verify", "alias of sweep");
  add_sweep_flags(verify_cmd);

  CLI::App* bench = app.add_subcommand("bench", "oracle throughput and one BFS timing");
  bench->add_option("--k", flags.k, "subset size k")->required();
  bench->add_option("--r", flags.r, "excess r")->required();
  bench->add_option("--d", flags.d, "target exact distance d");
  bench->add_option("--count", bench_count, "number of oracle calls (default 1e6)");
  bench->add_option("--seed", bench_seed, "RNG seed for the s stream");
  add_budget_flag(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadParams;
  }

  try {
    const std::int64_t budget = budget_flag >= 0 ? budget_flag : env_budget();
    if (budget < 1) throw std::invalid_argument("budget must be at least 1");
    if (dist->parsed()) return cmd_dist(flags, s_value);
    if (diam->parsed()) return cmd_diam(flags, mode, budget);
    if (gen->parsed()) return cmd_gen(flags, from_path, format, out_path, budget);
    if (sweep_cmd->parsed() || verify_cmd->parsed()) {
      spec.budget = budget;
      spec.include_kneser = !no_kneser;
      spec.include_exact = !no_exact;
      spec.include_gen_kneser = !no_gen_kneser;
      spec.include_gen_johnson = !no_gen_johnson;
      spec.compare_strict_convention = !no_strict;
      return cmd_sweep(spec, identities, timings, out_path);
    }
    if (bench->parsed()) return cmd_bench(flags, bench_count, bench_seed, budget);
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitBadParams;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitOk;
}
