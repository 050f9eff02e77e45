#include "lllhnf/engine.hpp"

#include <algorithm>

namespace lllhnf {

int col1(const IntMat& A, int i) {
  for (int j = 0; j < A.cols(); ++j)
    if (A(i, j) != 0) return j;
  return A.cols();
}

HnfEngine::HnfEngine(const IntMat& G, EngineConfig cfg) : cfg_(cfg) {
  if (cfg_.alpha_num <= 0 || cfg_.alpha_den <= 0 || 4 * cfg_.alpha_num <= cfg_.alpha_den ||
      cfg_.alpha_num > cfg_.alpha_den)
    throw input_error("alpha must satisfy 1/4 < alpha <= 1");
  st_.G = G;
  st_.A = G;
  st_.m = G.rows();
  st_.n = G.cols();
  st_.b = IntMat::identity(st_.m);
  st_.lam.resize(st_.m);
  for (int i = 0; i < st_.m; ++i) st_.lam[i].assign(i, BigInt(0));
  st_.D.assign(st_.m + 1, BigInt(1));
  st_.k = 1;
  st_.kmax = std::min(1, st_.m);
}

void HnfEngine::bump_op() {
  ++st_.op_index;
  if (st_.op_index > cfg_.max_ops) throw budget_error("engine operation budget exceeded");
}

void HnfEngine::notify(TraceEvent ev) {
  ev.kmax = st_.kmax;
  ev.op_index = st_.op_index;
  if (cfg_.record_trace) trace_.push_back(ev);
  for (EngineObserver* obs : observers_) obs->on_event(ev, st_);
}

void HnfEngine::emit(EventKind kind, int k, int i, bool applied, bool lovasz) {
  TraceEvent ev;
  ev.kind = kind;
  ev.k = k;
  ev.i = i;
  ev.applied = applied;
  ev.lovasz = lovasz;
  notify(ev);
}

void HnfEngine::minus_row(int i) {
  st_.A.negate_row(i);
  st_.b.negate_row(i);
  for (int j = 0; j < i; ++j) st_.lam[i][j] = -st_.lam[i][j];
  for (int l = i + 1; l < st_.m; ++l) st_.lam[l][i] = -st_.lam[l][i];
  st_.det_sign = -st_.det_sign;
  bump_op();
  emit(EventKind::minus, i);
  watch_check();
}

bool HnfEngine::reduce2(int k, int i) {
  int c = col1(st_.A, i);
  BigInt q;
  if (c < st_.n) {
    if (st_.A(i, c) < 0) minus_row(i);
    q = floor_div(st_.A(k, c), st_.A(i, c));
  } else {
    // Row i of A is zero; size-reduce the Euclidean coefficient of b_k
    // against b_i instead: q = nearest integer to lam[k][i] / D[i+1].
    q = round_nearest(st_.lam[k][i], st_.D[i + 1]);
  }
  bool applied = q != 0;
  if (applied) {
    st_.A.row_submul(k, i, q);
    st_.b.row_submul(k, i, q);
    for (int j = 0; j < i; ++j) st_.lam[k][j] -= q * st_.lam[i][j];
    st_.lam[k][i] -= q * st_.D[i + 1];
  }
  bump_op();
  emit(EventKind::reduce, k, i, applied);
  watch_check();
  return applied;
}

bool HnfEngine::swap_wanted(int k) const {
  int c1 = col1(st_.A, k - 1);
  int c2 = col1(st_.A, k);
  if (c1 < st_.n) return c1 <= c2;
  if (c2 < st_.n) return false;  // zero row already above nonzero row
  // Both rows of A are zero: integer Lovasz condition on the rows of b.
  const BigInt& lam_kk = st_.lam[k][k - 1];
  BigInt lhs = BigInt(cfg_.alpha_den) * (st_.D[k - 1] * st_.D[k + 1] + lam_kk * lam_kk);
  BigInt rhs = BigInt(cfg_.alpha_num) * (st_.D[k] * st_.D[k]);
  return lhs < rhs;
}

void HnfEngine::swap2(int k) {
  bool lovasz = col1(st_.A, k - 1) == st_.n && col1(st_.A, k) == st_.n;
  st_.A.swap_rows(k - 1, k);
  st_.b.swap_rows(k - 1, k);
  for (int j = 0; j < k - 1; ++j) std::swap(st_.lam[k][j], st_.lam[k - 1][j]);
  const BigInt lam_kk = st_.lam[k][k - 1];
  // All divisions below are exact; D[k] is updated only after the loop that
  // still needs its old value.
  BigInt newD = exact_div(st_.D[k - 1] * st_.D[k + 1] + lam_kk * lam_kk, st_.D[k]);
  for (int i = k + 1; i < st_.m; ++i) {
    BigInt t = st_.lam[i][k - 1] * st_.D[k + 1] - st_.lam[i][k] * lam_kk;
    st_.lam[i][k - 1] =
        exact_div(st_.lam[i][k - 1] * lam_kk + st_.lam[i][k] * st_.D[k - 1], st_.D[k]);
    st_.lam[i][k] = exact_div(t, st_.D[k]);
  }
  st_.D[k] = newD;
  st_.det_sign = -st_.det_sign;
  bump_op();
  emit(EventKind::swap, k, -1, false, lovasz);
  watch_check();
}

void HnfEngine::watch_start() {
  if (watch_active_)
    throw internal_error("incorporation watch still active at next kmax advance");
  watch_active_ = true;
  watch_limit_ = st_.kmax;  // rows 0..kmax inclusive (the fresh row included)
  watch_zero_base_ = 0;
  watch_incol_.assign(st_.n, 0);
  for (int i = 0; i < st_.kmax; ++i) {
    int c = col1(st_.A, i);
    if (c == st_.n)
      ++watch_zero_base_;
    else
      watch_incol_[c] = 1;
  }
  watch_check();
}

void HnfEngine::watch_check() {
  if (!watch_active_) return;
  int zeros = 0;
  for (int i = 0; i <= watch_limit_ && i < st_.m; ++i) {
    int c = col1(st_.A, i);
    if (c == st_.n) {
      if (++zeros > watch_zero_base_) {
        watch_active_ = false;
        emit(EventKind::new_isotropic, i);
        return;
      }
    } else if (!watch_incol_[c]) {
      watch_active_ = false;
      emit(EventKind::new_pivot, i, c);
      return;
    }
  }
}

void HnfEngine::run() {
  if (st_.m >= 1) {
    emit(EventKind::kmax_advance);
    emit(EventKind::checkpoint);
    if (st_.kmax < st_.m) watch_start();
  }
  while (st_.k <= st_.m - 1) {
    int k = st_.k;
    reduce2(k, k - 1);
    if (swap_wanted(k)) {
      swap2(k);
      st_.k = std::max(k - 1, 1);
    } else {
      for (int i = k - 2; i >= 0; --i) reduce2(k, i);
      st_.k = k + 1;
      emit(EventKind::k_advance);
      if (st_.k > st_.kmax) {
        st_.kmax = st_.k;
        emit(EventKind::kmax_advance);
        emit(EventKind::checkpoint);
        if (st_.kmax < st_.m) watch_start();
      }
    }
  }
  final_sweep();
  emit(EventKind::checkpoint);
  emit(EventKind::done);
}

void HnfEngine::final_sweep() {
  if (watch_active_) throw internal_error("incorporation watch active at final sweep");
  for (int i = 0; i < st_.m; ++i) {
    int c = col1(st_.A, i);
    if (c < st_.n && st_.A(i, c) < 0) minus_row(i);
  }
  // Decreasing i reduces against the smallest leading column first, so each
  // pivot column receives its final [0, pivot) reduction after every row that
  // could disturb it has been used.
  for (int k = 1; k < st_.m; ++k)
    for (int i = k - 1; i >= 0; --i) reduce2(k, i);
}

EngineResult run_hnf(const IntMat& G, const EngineConfig& cfg,
                     const std::vector<EngineObserver*>& observers) {
  EngineConfig c = cfg;
  HnfEngine eng(G, c);
  for (EngineObserver* obs : observers) eng.add_observer(obs);
  eng.run();
  EngineResult res;
  res.A = eng.state().A;
  res.b = eng.state().b;
  res.det_sign = eng.state().det_sign;
  res.ops = eng.state().op_index;
  res.trace = eng.trace();
  return res;
}

}  // namespace lllhnf
