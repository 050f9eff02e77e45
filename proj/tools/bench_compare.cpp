// Timing comparison between the serial reference corpus driver (jobs = 1)
// and the OpenMP-parallel one, on the in-memory canonical corpus. Both paths
// run the identical per-matrix pipeline; the serial path is the reference
// the parallel path is checked against, result by result.

#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lllhnf/corpus.hpp"
#include "lllhnf/runner.hpp"

using namespace lllhnf;

namespace {

double now_wall(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compare the serial reference corpus driver against the parallel one"};
  int jobs = 0;
  int limit = 0;
  std::string level = "checkpoints";
  app.add_option("--jobs", jobs, "parallel width (0 = OpenMP default)");
  app.add_option("--limit", limit, "run only the first N corpus entries (0 = all)");
  app.add_option("--check", level, "check level: none, checkpoints, full");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  RunOptions opts;
  if (level == "none")
    opts.level = CheckLevel::none;
  else if (level == "full")
    opts.level = CheckLevel::full;
  else
    opts.level = CheckLevel::checkpoints;

  std::vector<CorpusEntry> entries = canonical_corpus();
  if (limit > 0 && limit < int(entries.size())) entries.resize(limit);
  std::vector<NamedMatrix> items;
  items.reserve(entries.size());
  for (const auto& e : entries) items.push_back({e.name, generate(e.spec)});

  std::vector<std::string> err_serial, err_parallel;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<RunResult> serial = run_corpus(items, opts, 1, err_serial);
  double t_serial = now_wall(t0);

  t0 = std::chrono::steady_clock::now();
  std::vector<RunResult> parallel = run_corpus(items, opts, jobs, err_parallel);
  double t_parallel = now_wall(t0);

  // The parallel driver must reproduce the serial reference exactly.
  int mismatches = 0;
  for (size_t i = 0; i < items.size(); ++i) {
    bool same = err_serial[i] == err_parallel[i];
    if (same && err_serial[i].empty())
      same = serial[i].A == parallel[i].A && serial[i].b == parallel[i].b &&
             serial[i].metrics.total_ops == parallel[i].metrics.total_ops;
    if (!same) {
      ++mismatches;
      std::cerr << "mismatch on " << items[i].name << "\n";
    }
  }

  CorpusStats stats = summarize(items, serial, err_serial);
#ifdef LLLHNF_HAVE_OPENMP
  const char* mode = "OpenMP enabled";
#else
  const char* mode = "OpenMP not available; both drivers ran serially";
#endif
  std::cout << items.size() << " matrices, check level " << level << " (" << mode << ")\n"
            << "serial reference: " << format_ratio(t_serial) << " s\n"
            << "parallel driver:  " << format_ratio(t_parallel) << " s (jobs="
            << (jobs == 0 ? std::string("default") : std::to_string(jobs)) << ")\n"
            << "speedup: " << format_ratio(t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n"
            << "result mismatches: " << mismatches << ", failed runs: " << stats.failed << "\n";
  return mismatches == 0 && stats.failed == 0 ? 0 : 1;
}
