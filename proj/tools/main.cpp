#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lllhnf/corpus.hpp"
#include "lllhnf/matrix_io.hpp"
#include "lllhnf/runner.hpp"

using namespace lllhnf;

namespace {

// alpha as "P/Q" (or a bare integer), required to satisfy 1/4 < P/Q <= 1
bool parse_alpha(const std::string& s, long& num, long& den) {
  std::size_t slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      num = std::stol(s, &used);
      if (used != s.size()) return false;
      den = 1;
    } else {
      std::string p = s.substr(0, slash), q = s.substr(slash + 1);
      num = std::stol(p, &used);
      if (used != p.size()) return false;
      den = std::stol(q, &used);
      if (used != q.size()) return false;
    }
  } catch (const std::exception&) {
    return false;
  }
  return num > 0 && den > 0 && 4 * num > den && num <= den;
}

CheckLevel parse_level(const std::string& s) {
  if (s == "none") return CheckLevel::none;
  if (s == "checkpoints") return CheckLevel::checkpoints;
  if (s == "full") return CheckLevel::full;
  throw input_error("unknown check level: " + s);
}

IntMat load_matrix(const std::string& path) {
  if (path == "-") return read_matrix(std::cin);
  return read_matrix_file(path);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write file: " + path);
  out << text;
  if (!out) throw input_error("write failed: " + path);
}

int cmd_hnf(const std::string& file, const std::string& alpha, const std::string& level,
            const std::string& report_path, bool print_transform) {
  long an, ad;
  if (!parse_alpha(alpha, an, ad))
    throw input_error("invalid alpha '" + alpha + "': need 1/4 < P/Q <= 1");
  RunOptions opts;
  opts.engine.alpha_num = an;
  opts.engine.alpha_den = ad;
  opts.level = parse_level(level);
  IntMat G = load_matrix(file);
  RunResult r = run_instance(G, opts);
  write_matrix(std::cout, r.A);
  if (print_transform) {
    std::cout << "# transform\n";
    write_matrix(std::cout, r.b);
  }
  if (!report_path.empty()) write_text(report_path, report_json(file, G, r) + "\n");
  if (!r.ok()) {
    std::cerr << "verification failed";
    if (!r.conditions.witness.empty()) std::cerr << ": " << r.conditions.witness;
    if (!r.hard_messages.empty()) std::cerr << ": " << r.hard_messages.front();
    std::cerr << "\n";
    return 1;
  }
  return 0;
}

int cmd_verify(const std::string& file, const std::string& alpha, const std::string& report_path) {
  long an, ad;
  if (!parse_alpha(alpha, an, ad))
    throw input_error("invalid alpha '" + alpha + "': need 1/4 < P/Q <= 1");
  RunOptions opts;
  opts.engine.alpha_num = an;
  opts.engine.alpha_den = ad;
  opts.level = CheckLevel::full;
  IntMat G = load_matrix(file);
  RunResult r = run_instance(G, opts);
  if (!report_path.empty()) write_text(report_path, report_json(file, G, r) + "\n");
  std::cout << "rank " << r.rank << ", isodim " << r.isodim << ", " << r.metrics.total_ops
            << " ops, " << r.checkpoints.size() << " checkpoints, " << r.phases.size()
            << " phases, " << r.soft_violations << " soft violations\n";
  if (!r.ok()) {
    std::cerr << "verification failed";
    if (!r.verify.all()) std::cerr << ": normal-form certification";
    if (!r.conditions.all()) std::cerr << ": " << r.conditions.witness;
    for (const auto& msg : r.hard_messages) std::cerr << "\n  hard: " << msg;
    for (const auto& msg : r.consistency_messages) std::cerr << "\n  consistency: " << msg;
    std::cerr << "\n";
    return 1;
  }
  std::cout << "ok\n";
  return 0;
}

int cmd_gen(const std::string& kind, int m, int n, long bound, int rank, std::uint64_t seed,
            const std::string& out_path) {
  GenSpec spec;
  spec.kind = kind_from_name(kind);
  spec.m = m;
  spec.n = n;
  spec.bound = bound;
  spec.rank = rank;
  spec.seed = seed;
  IntMat G = generate(spec);
  if (out_path.empty())
    write_matrix(std::cout, G);
  else
    write_matrix_file(out_path, G);
  return 0;
}

int cmd_bench(const std::string& corpus_dir, const std::string& report_path,
              const std::string& level, int jobs) {
  std::ifstream man(corpus_dir + "/manifest.tsv");
  if (!man) throw input_error("cannot read manifest: " + corpus_dir + "/manifest.tsv");
  std::vector<CorpusEntry> entries = read_manifest(man);
  std::vector<NamedMatrix> items;
  items.reserve(entries.size());
  for (const auto& e : entries) items.push_back({e.name, read_matrix_file(corpus_dir + "/" + e.name + ".mat")});

  RunOptions opts;
  opts.level = parse_level(level);
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> errors;
  std::vector<RunResult> results = run_corpus(items, opts, jobs, errors);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CorpusStats stats = summarize(items, results, errors);
  if (!report_path.empty())
    write_text(report_path, bench_report_json(items, results, errors, stats, wall, jobs) + "\n");
  std::cout << stats.total << " runs, " << stats.failed << " failed, " << stats.ops << " ops, "
            << stats.hard_violations << " hard violations, " << stats.soft_violations
            << " soft, wall " << format_ratio(wall) << " s, max empirical_c "
            << format_ratio(stats.max_empirical_c) << "\n";
  for (const auto& f : stats.failures) std::cerr << "failed: " << f << "\n";
  return stats.failed == 0 && stats.hard_violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite normal form with transformation matrix, by the LLL-based HMM algorithm"};
  app.require_subcommand(1);

  std::string file, alpha = "3/4", level = "checkpoints", report_path, out_path;
  bool print_transform = false;

  CLI::App* hnf = app.add_subcommand("hnf", "compute the normal form of a matrix file");
  hnf->add_option("file", file, "input matrix ('-' for stdin)")->required();
  hnf->add_option("--alpha", alpha, "Lovasz parameter P/Q, 1/4 < P/Q <= 1");
  hnf->add_option("--check", level, "check level: none, checkpoints, full");
  hnf->add_option("--report", report_path, "write the run report to this path");
  hnf->add_flag("--print-transform", print_transform, "also print the transformation matrix");

  CLI::App* verify = app.add_subcommand("verify", "run the full check pipeline on a matrix file");
  verify->add_option("file", file, "input matrix ('-' for stdin)")->required();
  verify->add_option("--alpha", alpha, "Lovasz parameter P/Q, 1/4 < P/Q <= 1");
  verify->add_option("--report", report_path, "write the run report to this path");

  std::string kind = "random";
  int gm = 4, gn = 4, grank = 0;
  long gbound = 10;
  std::uint64_t gseed = 1;
  CLI::App* gen = app.add_subcommand("gen", "generate a reproducible test matrix");
  gen->add_option("kind", kind, "random, rank_deficient, gcd_vector, duplicate_rows, scaled")
      ->required();
  gen->add_option("--m", gm, "rows")->required();
  gen->add_option("--n", gn, "columns")->required();
  gen->add_option("--bound", gbound, "entry bound")->required();
  gen->add_option("--rank", grank, "target rank (kind-dependent)");
  gen->add_option("--seed", gseed, "generator seed")->required();
  gen->add_option("-o,--output", out_path, "output path (default stdout)");

  std::string corpus_dir;
  int jobs = 0;
  CLI::App* bench = app.add_subcommand("bench", "run a materialized corpus and aggregate");
  bench->add_option("--corpus", corpus_dir, "directory with manifest.tsv and .mat files")
      ->required();
  bench->add_option("--report", report_path, "write the aggregate report to this path");
  bench->add_option("--check", level, "check level: none, checkpoints, full");
  bench->add_option("--jobs", jobs, "parallel runs (0 = library default, 1 = serial)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(hnf)) return cmd_hnf(file, alpha, level, report_path, print_transform);
    if (app.got_subcommand(verify)) return cmd_verify(file, alpha, report_path);
    if (app.got_subcommand(gen)) return cmd_gen(kind, gm, gn, gbound, grank, gseed, out_path);
    if (app.got_subcommand(bench)) return cmd_bench(corpus_dir, report_path, level, jobs);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
