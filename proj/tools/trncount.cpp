// trncount — exact and asymptotic counting for Hamilton cycles and paths in
// tournaments.
//
// Subcommands:
//   count FILE WHAT        exact counts for one tournament read from a .trn
//                          file; WHAT is cycles, paths or covers
//   triangular M1 M2 M3    Hamilton cycle count of a triangular composition
//                          with the given part sizes, against its
//                          Stirling-sum lower bound
//   convergence TARGET     exact-vs-asymptotic table; TARGET is wilf,
//                          corollary, integral or internal-free
//   montecarlo KIND N      seeded sampling experiment against a classical
//                          expectation; KIND is szele-paths, szele-cycles or
//                          wormald
//   selftest               exhaustive small-case oracle suite
//
// Exit codes: 0 success, 1 validation error, 2 instance exceeds a cap,
// 3 selftest failure.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trn/cli_format.hpp"
#include "trn/convergence.hpp"
#include "trn/exact.hpp"
#include "trn/formula.hpp"
#include "trn/montecarlo.hpp"
#include "trn/rng.hpp"
#include "trn/selftest.hpp"
#include "trn/tournament.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitCapExceeded = 2;
constexpr int kExitSelftestFailure = 3;

/// Writes `text`, newline-terminated, to `out_path`, or to stdout when the
/// path is empty.
void emit(std::string text, const std::string& out_path) {
  if (text.empty() || text.back() != '\n') text += '\n';
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
  if (!out) throw std::runtime_error("failed writing output file: " + out_path);
}

struct CountArgs {
  std::string file;
  std::string what;
  int cap = trn::kDefaultPathCycleCap;
  bool cap_given = false;
  std::string out;
};

void run_count(const CountArgs& a) {
  const trn::Tournament t = trn::read_trn(a.file);
  std::string text;
  if (a.what == "cycles") {
    text = trn::format_count_json(t.n(), trn::count_hamilton_cycles(t, a.cap));
  } else if (a.what == "paths") {
    text = trn::format_count_json(t.n(), trn::count_hamilton_paths(t, a.cap));
  } else {
    const int cover_cap = a.cap_given ? a.cap : trn::kDefaultCoverCap;
    text = trn::format_covers_json(trn::path_cover_profile(t, cover_cap));
  }
  emit(text, a.out);
}

struct TriangularArgs {
  int m1 = 0, m2 = 0, m3 = 0;
  std::string mode = "transitive";
  std::uint64_t seed = 0;
  bool seed_given = false;
  int cap = trn::kDefaultCoverCap;
  std::string export_path;
  std::string out;
};

void run_triangular(const TriangularArgs& a) {
  if (a.mode == "random" && !a.seed_given)
    throw std::invalid_argument("random mode requires --seed");

  trn::TriangularResult r;
  r.m1 = a.m1;
  r.m2 = a.m2;
  r.m3 = a.m3;
  r.mode = a.mode;
  if (a.mode == "random") r.seed = a.seed;

  // Random parts draw from per-part seeds derived from the master seed
  // (indices 0, 1, 2), matching sample 0 of the wormald experiment.
  const auto make_part = [&](int m, int index) {
    return a.mode == "random"
               ? trn::make_random(m, trn::derive_seed(a.seed, index))
               : trn::make_transitive(m);
  };
  const trn::Tournament t1 = make_part(a.m1, 0);
  const trn::Tournament t2 = make_part(a.m2, 1);
  const trn::Tournament t3 = make_part(a.m3, 2);

  r.count = trn::hamilton_count_triangular(t1, t2, t3, a.cap);
  r.bound = trn::lower_bound(a.m1, a.m2, a.m3);

  const trn::TriangularComposition comp = trn::compose_c3(t1, t2, t3);
  if (comp.n() <= 10) {
    r.brute_force_checked = true;
    r.brute_force_agrees = trn::brute_force_cycles(comp.composed()) == r.count;
  }
  if (!a.export_path.empty()) trn::export_composition(a.export_path, comp);

  emit(trn::format_triangular_json(r), a.out);
}

struct ConvergenceArgs {
  std::string target;
  std::vector<int> sizes;
  std::string format = "csv";
  std::string out;
};

void run_convergence(const ConvergenceArgs& a) {
  const auto target = trn::convergence_target_from_string(a.target);
  const auto rows = trn::convergence_table(target, a.sizes);
  const std::string text = a.format == "json"
                               ? trn::format_convergence_json(rows)
                               : trn::format_convergence_csv(rows);
  emit(text, a.out);
}

struct MonteCarloArgs {
  std::string kind;
  int n = 0;
  long long samples = 10000;
  std::uint64_t seed = 0;
  std::string out;
};

void run_montecarlo_cmd(const MonteCarloArgs& a) {
  const trn::McKind kind = trn::mc_kind_from_string(a.kind);
  const trn::ExperimentReport report =
      trn::run_montecarlo(kind, a.n, a.samples, a.seed);
  emit(trn::format_report_json(kind, report), a.out);
}

int run_selftest_cmd(const std::string& out_path) {
  if (out_path.empty())
    return trn::run_selftest(std::cout) ? kExitOk : kExitSelftestFailure;
  std::ostringstream buffer;
  const bool ok = trn::run_selftest(buffer);
  emit(buffer.str(), out_path);
  return ok ? kExitOk : kExitSelftestFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact and asymptotic counting of Hamilton cycles and paths in "
      "tournaments"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand(
      "count", "Exact counts for a tournament read from a .trn file");
  count->add_option("file", count_args.file, ".trn input file")->required();
  count->add_option("what", count_args.what, "cycles, paths or covers")
      ->required()
      ->check(CLI::IsMember({"cycles", "paths", "covers"}));
  auto* count_cap =
      count->add_option("--cap", count_args.cap, "instance-size cap override");
  count->add_option("--out", count_args.out, "write output to this file");

  TriangularArgs tri_args;
  auto* tri = app.add_subcommand(
      "triangular",
      "Hamilton cycle count of a triangular composition vs its lower bound");
  tri->add_option("m1", tri_args.m1, "size of part 1")
      ->required()
      ->check(CLI::PositiveNumber);
  tri->add_option("m2", tri_args.m2, "size of part 2")
      ->required()
      ->check(CLI::PositiveNumber);
  tri->add_option("m3", tri_args.m3, "size of part 3")
      ->required()
      ->check(CLI::PositiveNumber);
  tri->add_option("--mode", tri_args.mode, "part construction (default transitive)")
      ->check(CLI::IsMember({"transitive", "random"}));
  auto* tri_seed =
      tri->add_option("--seed", tri_args.seed, "master seed for random mode");
  tri->add_option("--cap", tri_args.cap, "per-part size cap override");
  tri->add_option("--export", tri_args.export_path,
                  "write the composed tournament to this .trn file plus a "
                  "JSON sidecar with the part sizes");
  tri->add_option("--out", tri_args.out, "write output to this file");

  ConvergenceArgs conv_args;
  auto* conv = app.add_subcommand(
      "convergence", "Exact-vs-asymptotic table for a convergence target");
  conv->add_option("target", conv_args.target,
                   "wilf, corollary, integral or internal-free")
      ->required()
      ->check(CLI::IsMember({"wilf", "corollary", "integral", "internal-free"}));
  conv->add_option("--sizes", conv_args.sizes,
                   "sizes to evaluate (comma separated)")
      ->required()
      ->delimiter(',');
  conv->add_option("--format", conv_args.format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  conv->add_option("--out", conv_args.out, "write output to this file");

  MonteCarloArgs mc_args;
  auto* mc = app.add_subcommand(
      "montecarlo", "Seeded sampling experiment vs a classical expectation");
  mc->add_option("kind", mc_args.kind, "szele-paths, szele-cycles or wormald")
      ->required()
      ->check(CLI::IsMember({"szele-paths", "szele-cycles", "wormald"}));
  mc->add_option("n", mc_args.n, "tournament size per sample")
      ->required()
      ->check(CLI::PositiveNumber);
  mc->add_option("--samples", mc_args.samples, "number of samples (default 10000)")
      ->check(CLI::PositiveNumber);
  mc->add_option("--seed", mc_args.seed, "master seed (default 0)");
  mc->add_option("--out", mc_args.out, "write output to this file");

  std::string selftest_out;
  auto* selftest = app.add_subcommand(
      "selftest", "Exhaustive small-case oracle suite; nonzero exit on failure");
  selftest->add_option("--out", selftest_out, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return kExitValidation;
  }

  count_args.cap_given = count_cap->count() > 0;
  tri_args.seed_given = tri_seed->count() > 0;

  try {
    if (count->parsed()) run_count(count_args);
    if (tri->parsed()) run_triangular(tri_args);
    if (conv->parsed()) run_convergence(conv_args);
    if (mc->parsed()) run_montecarlo_cmd(mc_args);
    if (selftest->parsed()) return run_selftest_cmd(selftest_out);
  } catch (const trn::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
