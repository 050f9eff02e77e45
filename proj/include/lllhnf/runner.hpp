#pragma once

#include <string>
#include <vector>

#include "lllhnf/bounds.hpp"
#include "lllhnf/certify.hpp"
#include "lllhnf/consistency.hpp"
#include "lllhnf/engine.hpp"
#include "lllhnf/metrics.hpp"

namespace lllhnf {

struct RunOptions {
  EngineConfig engine;
  CheckLevel level = CheckLevel::checkpoints;
  bool with_certify = true;
};

// Everything observed in one end-to-end run: engine outputs, metrics, the
// bounds monitor's checkpoint/phase records, per-operation consistency
// findings (full level), and the certification verdicts.
struct RunResult {
  IntMat A, b;
  int det_sign = 1;
  RunMetrics metrics;
  std::vector<CheckpointRecord> checkpoints;
  std::vector<PhaseRecord> phases;
  std::vector<std::string> hard_messages;
  int soft_violations = 0;
  std::vector<std::string> consistency_messages;
  VerifyReport verify;
  OutputConditionReport conditions;
  BigInt B, Bp;
  int rank = 0, isodim = 0;
  int lovasz_seen = 0, lovasz_checked = 0;  // full-level descent accounting
  double seconds = 0.0;

  bool hard_ok() const { return hard_messages.empty() && consistency_messages.empty(); }
  bool ok() const { return hard_ok() && verify.all() && conditions.all(); }
};

RunResult run_instance(const IntMat& G, const RunOptions& opts = {});

// Exact-value JSON report for a run. Integer quantities appear as decimal
// strings; the two descriptive ratios carry four fractional digits.
std::string report_json(const std::string& name, const IntMat& G, const RunResult& r);

struct NamedMatrix {
  std::string name;
  IntMat G;
};

// Runs every item. jobs = 1 forces the serial reference path; jobs = 0 uses
// the OpenMP default width; jobs > 1 caps it. Exceptions are captured per
// item in `errors` (empty string = no error).
std::vector<RunResult> run_corpus(const std::vector<NamedMatrix>& items, const RunOptions& opts,
                                  int jobs, std::vector<std::string>& errors);

struct CorpusStats {
  int total = 0;
  int failed = 0;  // errored, failed certification, or hard violations
  unsigned long long ops = 0;
  int hard_violations = 0;
  int soft_violations = 0;
  unsigned long long checkpoints = 0;
  unsigned long long phases = 0;
  double max_empirical_c = 0.0;
  double mean_empirical_c = 0.0;
  double max_op_ratio = 0.0;
  std::vector<std::string> failures;
};
CorpusStats summarize(const std::vector<NamedMatrix>& items,
                      const std::vector<RunResult>& results,
                      const std::vector<std::string>& errors);

std::string bench_report_json(const std::vector<NamedMatrix>& items,
                              const std::vector<RunResult>& results,
                              const std::vector<std::string>& errors, const CorpusStats& stats,
                              double wall_seconds, int jobs);

}  // namespace lllhnf
