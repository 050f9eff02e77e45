#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lllhnf/engine.hpp"

namespace lllhnf {

// Size and work accounting for a single run. Bit maxima are taken over every
// table of the engine state after every event; empirical_c and op_ratio are
// descriptive floating-point ratios, everything else is exact.
struct RunMetrics {
  std::size_t max_bits_A = 0, max_bits_b = 0, max_bits_lambda = 0, max_bits_D = 0;
  unsigned long long reduce_calls = 0, reduce_applied = 0, swaps = 0, minus_count = 0,
                     checkpoints = 0;
  unsigned long long total_ops = 0;  // mutating operations
  std::vector<std::pair<unsigned long long, int>> kmax_timeline;  // (op_index, kmax)

  // Filled by finalize():
  bool bit_bound_ok = false;  // 2^{max_bits - 16} <= (4 m Bp)^{3m}, exactly
  double empirical_c = 0.0;   // max_bits / (m log2(m Bp))
  double op_ratio = 0.0;      // total_ops / ((m+n)^4 log2(m Bp))

  std::size_t max_bits() const;
  void observe(const EngineState& st);
  void finalize(int m, int n, const BigInt& Bp);
};

class MetricsObserver : public EngineObserver {
 public:
  void on_event(const TraceEvent& ev, const EngineState& st) override;
  RunMetrics metrics;
};

// Fixed-point style formatting with four fractional digits, used for the two
// descriptive ratios in reports.
std::string format_ratio(double x);

}  // namespace lllhnf
