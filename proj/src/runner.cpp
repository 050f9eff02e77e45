#include "lllhnf/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "json.hpp"

#ifdef LLLHNF_HAVE_OPENMP
#include <omp.h>
#endif

namespace lllhnf {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

RunResult run_instance(const IntMat& G, const RunOptions& opts) {
  RunResult out;
  out.B = gram_bound(G);
  out.Bp = clamped_gram_bound(G);

  MetricsObserver metrics;
  std::unique_ptr<BoundsMonitor> monitor;
  std::unique_ptr<ConsistencyChecker> consistency;

  HnfEngine eng(G, opts.engine);
  eng.add_observer(&metrics);
  if (opts.level != CheckLevel::none) {
    monitor = std::make_unique<BoundsMonitor>(G, opts.level, opts.engine.alpha_num,
                                              opts.engine.alpha_den);
    eng.add_observer(monitor.get());
  }
  if (opts.level == CheckLevel::full) {
    consistency = std::make_unique<ConsistencyChecker>();
    eng.add_observer(consistency.get());
  }

  auto t0 = std::chrono::steady_clock::now();
  eng.run();
  out.seconds = seconds_since(t0);

  const EngineState& st = eng.state();
  out.A = st.A;
  out.b = st.b;
  out.det_sign = st.det_sign;
  out.metrics = metrics.metrics;
  out.metrics.finalize(st.m, st.n, out.Bp);
  if (monitor) {
    out.checkpoints = monitor->checkpoints();
    out.phases = monitor->phases();
    out.hard_messages = monitor->hard_messages();
    out.soft_violations = monitor->soft_violation_count();
    out.lovasz_seen = monitor->lovasz_swaps_seen();
    out.lovasz_checked = monitor->lovasz_descent_checked();
  }
  if (consistency)
    out.consistency_messages = consistency->messages();

  out.rank = 0;
  for (int i = 0; i < out.A.rows(); ++i)
    if (!out.A.row_is_zero(i)) ++out.rank;
  out.isodim = out.A.rows() - out.rank;

  if (opts.with_certify) {
    out.verify = verify_result(G, out.b, out.A);
    if (out.verify.unimodular_ok) {
      out.conditions =
          check_output_conditions(G, out.b, opts.engine.alpha_num, opts.engine.alpha_den);
    } else {
      out.conditions.witness = "transform is not unimodular";
    }
  }
  return out;
}

namespace {

using nlohmann::json;

json mat_json(const IntMat& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(to_string(M(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json checkpoint_json(const CheckpointRecord& c) {
  json j;
  j["op_index"] = std::to_string(c.op_index);
  j["kmax"] = std::to_string(c.kmax);
  j["isodim"] = std::to_string(c.isodim);
  j["rank"] = std::to_string(c.rank);
  j["det_gram"] = c.det_gram;
  j["det_integral"] = c.det_integral;
  j["hadamard_ok"] = c.hadamard_ok;
  j["sequences_ok"] = c.sequences_ok;
  j["norm_range_ok"] = c.norm_range_ok;
  j["norm_ratio_ok"] = c.norm_ratio_ok;
  json items = json::array();
  for (bool x : c.stage.item) items.push_back(x);
  j["stage_items"] = std::move(items);
  if (!c.stage.first_violation.empty()) j["stage_first_violation"] = c.stage.first_violation;
  j["hard_violations"] = c.hard_violations;
  return j;
}

json phase_json(const PhaseRecord& p) {
  json j;
  j["begin_op"] = std::to_string(p.begin_op);
  j["end_op"] = std::to_string(p.end_op);
  j["kmax_start"] = std::to_string(p.kmax_start);
  j["isodim_start"] = std::to_string(p.isodim_start);
  j["rank_start"] = std::to_string(p.rank_start);
  j["steps"] = std::to_string(p.steps);
  j["swaps"] = std::to_string(p.swaps);
  j["r_log"] = p.r_log;
  json rat = json::object();
  for (const auto& [pos, r] : p.r_at) rat[std::to_string(pos)] = to_string(r);
  j["r_at"] = std::move(rat);
  j["end_event"] = p.end_event;
  j["end_row"] = std::to_string(p.end_row);
  if (p.end_event == "new_pivot") j["end_col"] = std::to_string(p.end_col);
  j["product_bound_ok"] = p.product_bound_ok;
  j["soft_violations"] = std::to_string(p.soft_violations);
  j["soft_samples"] = p.soft_samples;
  j["hard_violations"] = p.hard_violations;
  return j;
}

json result_json(const std::string& name, const IntMat& G, const RunResult& r) {
  json j;
  j["schema_version"] = "1";
  j["name"] = name;
  j["input"] = {{"m", std::to_string(G.rows())},
                {"n", std::to_string(G.cols())},
                {"B", to_string(r.B)},
                {"Bp", to_string(r.Bp)}};
  j["hnf"] = mat_json(r.A);
  j["transform"] = mat_json(r.b);
  j["det_sign"] = std::to_string(r.det_sign);
  j["rank"] = std::to_string(r.rank);
  j["isodim"] = std::to_string(r.isodim);

  json m;
  m["max_bits_A"] = std::to_string(r.metrics.max_bits_A);
  m["max_bits_transform"] = std::to_string(r.metrics.max_bits_b);
  m["max_bits_lambda"] = std::to_string(r.metrics.max_bits_lambda);
  m["max_bits_D"] = std::to_string(r.metrics.max_bits_D);
  m["reduce_calls"] = std::to_string(r.metrics.reduce_calls);
  m["reduce_applied"] = std::to_string(r.metrics.reduce_applied);
  m["swaps"] = std::to_string(r.metrics.swaps);
  m["negations"] = std::to_string(r.metrics.minus_count);
  m["checkpoints"] = std::to_string(r.metrics.checkpoints);
  m["total_ops"] = std::to_string(r.metrics.total_ops);
  m["bit_bound_ok"] = r.metrics.bit_bound_ok;
  m["empirical_c"] = format_ratio(r.metrics.empirical_c);
  m["op_ratio"] = format_ratio(r.metrics.op_ratio);
  json tl = json::array();
  for (const auto& [op, kmax] : r.metrics.kmax_timeline)
    tl.push_back({std::to_string(op), std::to_string(kmax)});
  m["kmax_timeline"] = std::move(tl);
  j["metrics"] = std::move(m);

  json cps = json::array();
  for (const auto& c : r.checkpoints) cps.push_back(checkpoint_json(c));
  j["checkpoints"] = std::move(cps);
  json phs = json::array();
  for (const auto& p : r.phases) phs.push_back(phase_json(p));
  j["phases"] = std::move(phs);

  j["certify"] = {{"product_ok", r.verify.product_ok},
                  {"unimodular_ok", r.verify.unimodular_ok},
                  {"hnf_ok", r.verify.hnf_ok},
                  {"oracle_ok", r.verify.oracle_ok},
                  {"iso_first", r.conditions.iso_first},
                  {"iso_reduced", r.conditions.iso_reduced},
                  {"basis_ok", r.conditions.basis_ok},
                  {"size_reduced", r.conditions.size_reduced},
                  {"witness", r.conditions.witness}};

  j["violations"] = {{"hard", r.hard_messages},
                     {"soft_count", std::to_string(r.soft_violations)},
                     {"consistency", r.consistency_messages}};
  j["seconds"] = format_ratio(r.seconds);
  j["ok"] = r.ok();
  return j;
}

}  // namespace

std::string report_json(const std::string& name, const IntMat& G, const RunResult& r) {
  return result_json(name, G, r).dump(2);
}

std::vector<RunResult> run_corpus(const std::vector<NamedMatrix>& items, const RunOptions& opts,
                                  int jobs, std::vector<std::string>& errors) {
  const int n = int(items.size());
  std::vector<RunResult> results(n);
  errors.assign(n, std::string());

#ifdef LLLHNF_HAVE_OPENMP
  if (jobs != 1) {
    int width = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(width)
    for (int i = 0; i < n; ++i) {
      try {
        results[i] = run_instance(items[i].G, opts);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
    return results;
  }
#else
  (void)jobs;
#endif
  for (int i = 0; i < n; ++i) {
    try {
      results[i] = run_instance(items[i].G, opts);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  return results;
}

CorpusStats summarize(const std::vector<NamedMatrix>& items, const std::vector<RunResult>& results,
                      const std::vector<std::string>& errors) {
  CorpusStats s;
  s.total = int(items.size());
  double c_sum = 0.0;
  int c_count = 0;
  for (int i = 0; i < s.total; ++i) {
    if (!errors[i].empty()) {
      ++s.failed;
      s.failures.push_back(items[i].name + ": " + errors[i]);
      continue;
    }
    const RunResult& r = results[i];
    s.ops += r.metrics.total_ops;
    s.hard_violations += int(r.hard_messages.size()) + int(r.consistency_messages.size());
    s.soft_violations += r.soft_violations;
    s.checkpoints += r.metrics.checkpoints;
    s.phases += r.phases.size();
    s.max_empirical_c = std::max(s.max_empirical_c, r.metrics.empirical_c);
    s.max_op_ratio = std::max(s.max_op_ratio, r.metrics.op_ratio);
    c_sum += r.metrics.empirical_c;
    ++c_count;
    if (!r.ok()) {
      ++s.failed;
      std::string why;
      if (!r.verify.all())
        why = "certification failed";
      else if (!r.conditions.all())
        why = "output conditions failed: " + r.conditions.witness;
      else if (!r.hard_messages.empty())
        why = "hard bound violated: " + r.hard_messages.front();
      else if (!r.consistency_messages.empty())
        why = "consistency violated: " + r.consistency_messages.front();
      else
        why = "unknown failure";
      s.failures.push_back(items[i].name + ": " + why);
    }
  }
  if (c_count > 0) s.mean_empirical_c = c_sum / c_count;
  return s;
}

std::string bench_report_json(const std::vector<NamedMatrix>& items,
                              const std::vector<RunResult>& results,
                              const std::vector<std::string>& errors, const CorpusStats& stats,
                              double wall_seconds, int jobs) {
  json j;
  j["schema_version"] = "1";
  j["jobs"] = std::to_string(jobs);
  j["wall_seconds"] = format_ratio(wall_seconds);
  j["total"] = std::to_string(stats.total);
  j["failed"] = std::to_string(stats.failed);
  j["ops"] = std::to_string(stats.ops);
  j["hard_violations"] = std::to_string(stats.hard_violations);
  j["soft_violations"] = std::to_string(stats.soft_violations);
  j["checkpoints"] = std::to_string(stats.checkpoints);
  j["phases"] = std::to_string(stats.phases);
  j["max_empirical_c"] = format_ratio(stats.max_empirical_c);
  j["mean_empirical_c"] = format_ratio(stats.mean_empirical_c);
  j["max_op_ratio"] = format_ratio(stats.max_op_ratio);
  j["failures"] = stats.failures;
  json runs = json::array();
  for (size_t i = 0; i < items.size(); ++i) {
    json r;
    r["name"] = items[i].name;
    r["m"] = std::to_string(items[i].G.rows());
    r["n"] = std::to_string(items[i].G.cols());
    if (!errors[i].empty()) {
      r["error"] = errors[i];
    } else {
      r["ops"] = std::to_string(results[i].metrics.total_ops);
      r["max_bits"] = std::to_string(results[i].metrics.max_bits());
      r["empirical_c"] = format_ratio(results[i].metrics.empirical_c);
      r["op_ratio"] = format_ratio(results[i].metrics.op_ratio);
      r["seconds"] = format_ratio(results[i].seconds);
      r["ok"] = results[i].ok();
    }
    runs.push_back(std::move(r));
  }
  j["runs"] = std::move(runs);
  return j.dump(2);
}

}  // namespace lllhnf
