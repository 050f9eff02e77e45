#include "lllhnf/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace lllhnf {

std::size_t RunMetrics::max_bits() const {
  return std::max({max_bits_A, max_bits_b, max_bits_lambda, max_bits_D});
}

void RunMetrics::observe(const EngineState& st) {
  for (int i = 0; i < st.m; ++i)
    for (int j = 0; j < st.n; ++j) max_bits_A = std::max(max_bits_A, bit_length(st.A(i, j)));
  for (int i = 0; i < st.m; ++i)
    for (int j = 0; j < st.m; ++j) max_bits_b = std::max(max_bits_b, bit_length(st.b(i, j)));
  for (int i = 0; i < st.m; ++i)
    for (int j = 0; j < i; ++j)
      max_bits_lambda = std::max(max_bits_lambda, bit_length(st.lam[i][j]));
  for (const BigInt& d : st.D) max_bits_D = std::max(max_bits_D, bit_length(d));
}

void RunMetrics::finalize(int m, int n, const BigInt& Bp) {
  std::size_t bits = max_bits();
  if (bits <= 16) {
    bit_bound_ok = true;
  } else {
    BigInt lhs = ipow(BigInt(2), static_cast<unsigned long>(bits - 16));
    BigInt rhs = ipow(4 * m * Bp, 3 * unsigned(m));
    bit_bound_ok = lhs <= rhs;
  }
  if (m == 0) {
    empirical_c = 0.0;
    op_ratio = 0.0;
    return;
  }
  BigInt mBp = m * Bp;
  double lg = mpz_get_d(mBp.get_mpz_t());
  double log2mB = std::isfinite(lg) && lg > 0 ? std::log2(lg) : double(bit_length(mBp));
  if (log2mB < 1.0) log2mB = 1.0;
  empirical_c = double(bits) / (double(m) * log2mB);
  double denom = std::pow(double(m + n), 4) * log2mB;
  op_ratio = denom > 0 ? double(total_ops) / denom : 0.0;
}

void MetricsObserver::on_event(const TraceEvent& ev, const EngineState& st) {
  switch (ev.kind) {
    case EventKind::reduce:
      ++metrics.reduce_calls;
      if (ev.applied) ++metrics.reduce_applied;
      ++metrics.total_ops;
      break;
    case EventKind::swap:
      ++metrics.swaps;
      ++metrics.total_ops;
      break;
    case EventKind::minus:
      ++metrics.minus_count;
      ++metrics.total_ops;
      break;
    case EventKind::checkpoint:
      ++metrics.checkpoints;
      break;
    case EventKind::kmax_advance:
      metrics.kmax_timeline.emplace_back(ev.op_index, ev.kmax);
      break;
    default:
      break;
  }
  metrics.observe(st);
}

std::string format_ratio(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

}  // namespace lllhnf
