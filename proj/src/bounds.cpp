#include "lllhnf/bounds.hpp"

#include <algorithm>

#include "lllhnf/linalg.hpp"

namespace lllhnf {

BigInt gram_bound(const IntMat& G) {
  IntMat g = gram_of(G);
  BigInt B = 0;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if (g(i, j) > B) B = g(i, j);
  return B;
}

BigInt clamped_gram_bound(const IntMat& G) {
  BigInt B = gram_bound(G);
  return B < 2 ? BigInt(2) : B;
}

namespace {

// m^m (Bp+1)^{2m}, the squared Hadamard-style constant reused everywhere.
BigInt mB_const(int m, const BigInt& Bp) {
  return ipow(BigInt(m), m) * ipow(Bp + 1, 2 * unsigned(m));
}

// (4 m Bp)^{5m}
BigInt C_const(int m, const BigInt& Bp) { return ipow(4 * m * Bp, 5 * unsigned(m)); }

bool rat_sq_le(const BigRat& x, const BigInt& bound) {
  // x^2 <= bound, exactly
  return x * x <= BigRat(bound);
}

}  // namespace

NormRatioVerdict check_norm_ratio(const MixedInnerProduct& mx, const RatVec& v, const BigInt& Bp,
                                  bool v_in_span) {
  NormRatioVerdict verdict;
  BigRat mix_norm = mx.mix(v, v);
  BigRat euc_norm = dot(v, v);
  verdict.upper_ok = mix_norm <= BigRat(mx.m * (Bp + 1)) * euc_norm;
  if (v_in_span) {
    BigInt mB = mB_const(mx.m, Bp);
    verdict.lower_ok =
        euc_norm * euc_norm <= BigRat(BigInt(mx.m) * mx.m * mB) * mix_norm * mix_norm;
  }
  return verdict;
}

StageBoundsReport check_stage_bounds(const MixedInnerProduct& mx, const GramSchmidtData& gs,
                                     int k_row, const BigInt& Bp) {
  StageBoundsReport rep;
  int m = mx.m, kmax = mx.kmax;
  auto note = [&rep](int item, const std::string& s) {
    rep.item[item] = false;
    if (rep.first_violation.empty())
      rep.first_violation = "item " + std::to_string(item + 1) + ": " + s;
  };
  if (m == 0) return rep;
  BigInt mB = mB_const(m, Bp);
  BigInt C = C_const(m, Bp);

  if (gs.sequences_valid) {
    for (size_t i = 0; i < gs.diso.size(); ++i)
      if (gs.diso[i] * gs.diso[i] > mB)
        note(0, "diso_" + std::to_string(i + 1) + " = " + to_string(gs.diso[i]));
    BigInt dbound = ipow(Bp, unsigned(mx.rank()));
    for (size_t i = 0; i < gs.d.size(); ++i)
      if (gs.d[i] > dbound) note(1, "d_" + std::to_string(i + 1) + " = " + to_string(gs.d[i]));
  }

  // Row norms under the form, recomposed from the Gram-Schmidt data:
  // (b_i, b_i)_mix = (b*_i, b*_i)_mix + sum_j mu_{i,j}^2 (b*_j, b*_j)_mix.
  BigInt row_bound = BigInt(m) * C;
  row_bound *= row_bound;
  row_bound *= mB;  // (mC)^2 mB
  BigInt active_bound = ipow(BigInt(m), 4) * ipow(BigInt(9), 2 * unsigned(m)) * C * C * mB * mB * mB;
  for (int i = 0; i < kmax; ++i) {
    BigRat norm = gs.norms[i];
    for (int j = 0; j < i; ++j) norm += gs.mu[i][j] * gs.mu[i][j] * gs.norms[j];
    int row1 = i + 1;
    if (row1 != k_row) {
      if (!rat_sq_le(norm, row_bound))
        note(2, "(b_" + std::to_string(row1) + ", b_" + std::to_string(row1) + ")_mix = " +
                    to_string(norm));
    } else {
      if (!rat_sq_le(norm, active_bound))
        note(3, "(b_k, b_k)_mix = " + to_string(norm) + " at k = " + std::to_string(k_row));
    }
  }

  for (int i = 0; i < kmax; ++i) {
    int row1 = i + 1;
    for (int j = 0; j < i; ++j) {
      const BigRat& mu = gs.mu[i][j];
      if (row1 < k_row) {
        if (abs(mu) > 1)
          note(4, "|mu_{" + std::to_string(row1) + "," + std::to_string(j + 1) + "}| = " +
                      to_string(abs(mu)));
      } else if (row1 == k_row) {
        BigInt bound6 = ipow(BigInt(9), unsigned(m - k_row)) * m * C * mB;
        if (!rat_sq_le(mu, bound6))
          note(5, "mu_{k," + std::to_string(j + 1) + "} = " + to_string(mu));
      } else {
        BigInt bound7 = BigInt(m) * C * mB;
        if (!rat_sq_le(mu, bound7))
          note(6, "mu_{" + std::to_string(row1) + "," + std::to_string(j + 1) + "} = " +
                      to_string(mu));
      }
    }
  }
  return rep;
}

NormRangeReport check_gs_norm_range(const GramSchmidtData& gs, int m, const BigInt& Bp) {
  NormRangeReport rep;
  if (m == 0) return rep;
  BigInt mB = mB_const(m, Bp);
  for (size_t i = 0; i < gs.norms.size(); ++i) {
    const BigRat& norm = gs.norms[i];
    bool upper = norm * norm <= BigRat(mB);
    bool lower = norm * norm * BigRat(mB) >= 1;
    if (!upper || !lower) {
      rep.ok = false;
      if (rep.first_violation.empty())
        rep.first_violation = "(b*_" + std::to_string(i + 1) + ", b*_" + std::to_string(i + 1) +
                              ")_mix = " + to_string(norm) + " outside range";
    }
  }
  return rep;
}

BoundsMonitor::BoundsMonitor(const IntMat& G, CheckLevel level, long alpha_num, long alpha_den)
    : G_(G),
      m_(G.rows()),
      n_(G.cols()),
      Bp_(clamped_gram_bound(G)),
      level_(level),
      alpha_num_(alpha_num),
      alpha_den_(alpha_den) {}

void BoundsMonitor::hard(std::vector<std::string>& sink, const std::string& msg) {
  sink.push_back(msg);
  hard_msgs_.push_back(msg);
}

void BoundsMonitor::soft(PhaseRecord* rec, const std::string& msg) {
  ++soft_total_;
  if (rec) {
    ++rec->soft_violations;
    if (rec->soft_samples.size() < 8) rec->soft_samples.push_back(msg);
  }
}

void BoundsMonitor::on_event(const TraceEvent& ev, const EngineState& st) {
  if (level_ == CheckLevel::none) return;
  switch (ev.kind) {
    case EventKind::kmax_advance:
      if (st.kmax < st.m) begin_phase(ev, st);
      break;
    case EventKind::checkpoint:
      do_checkpoint(ev, st);
      break;
    case EventKind::new_pivot:
    case EventKind::new_isotropic:
      end_phase(ev, st);
      break;
    case EventKind::reduce:
    case EventKind::swap:
    case EventKind::minus:
      if (phase_) phase_step(ev, st);
      if (level_ == CheckLevel::full) full_level_op(ev, st);
      if (level_ == CheckLevel::full) {
        prev_D_ = st.D;
        have_prev_D_ = true;
      }
      break;
    default:
      break;
  }
}

void BoundsMonitor::do_checkpoint(const TraceEvent& ev, const EngineState& st) {
  CheckpointRecord ck;
  ck.op_index = ev.op_index;
  ck.kmax = st.kmax;
  int idx = int(checkpoints_.size()) + 1;
  std::string where = "checkpoint " + std::to_string(idx) + " (op " + std::to_string(ev.op_index) +
                      ", kmax " + std::to_string(st.kmax) + "): ";
  try {
    MixedInnerProduct mx = build_mixed(st.G, st.b, st.A, st.kmax);
    ck.isodim = mx.isodim;
    ck.rank = mx.rank();
    ck.det_gram = to_string(mx.det_gram);
    ck.det_integral = is_integer(mx.det_gram);
    if (!ck.det_integral) hard(ck.hard_violations, where + "det(gram_mix) = " + ck.det_gram +
                                                      " is not an integer");
    BigInt had = ipow(BigInt(st.kmax), unsigned(st.kmax)) * ipow(Bp_ + 1, 2 * unsigned(st.kmax));
    ck.hadamard_ok = mx.det_gram * mx.det_gram <= BigRat(had);
    if (!ck.hadamard_ok)
      hard(ck.hard_violations, where + "det(gram_mix)^2 exceeds the Hadamard bound");

    GramSchmidtData gs = gram_schmidt_mixed(st.b, mx, true, &st.A);
    ck.sequences_ok = gs.sequences_valid && gs.diso_integral && gs.d_integral &&
                      gs.pivots_squared && gs.bracket_match;
    if (!ck.sequences_ok)
      hard(ck.hard_violations,
           where + "subdeterminant sequences: " + (gs.issue.empty() ? "not evaluable" : gs.issue));

    NormRangeReport nr = check_gs_norm_range(gs, m_, Bp_);
    ck.norm_range_ok = nr.ok;
    if (!nr.ok) hard(ck.hard_violations, where + "norm range: " + nr.first_violation);

    ck.norm_ratio_ok = true;
    for (int i = 0; i < st.kmax; ++i) {
      NormRatioVerdict v = check_norm_ratio(mx, to_rat(st.b.row_vec(i)), Bp_, true);
      if (!v.upper_ok || !v.lower_ok) {
        ck.norm_ratio_ok = false;
        hard(ck.hard_violations,
             where + "norm ratio bound fails on row " + std::to_string(i + 1) + " of b");
        break;
      }
    }

    ck.stage = check_stage_bounds(mx, gs, st.kmax + 1, Bp_);
    if (!ck.stage.all()) hard(ck.hard_violations, where + "stage bounds: " + ck.stage.first_violation);

    if (level_ == CheckLevel::full) stage_mix_ = std::make_unique<MixedInnerProduct>(mx);
  } catch (const internal_error& e) {
    hard(ck.hard_violations, where + e.what());
  }
  checkpoints_.push_back(std::move(ck));
}

void BoundsMonitor::begin_phase(const TraceEvent& ev, const EngineState& st) {
  if (phase_) throw internal_error("bounds monitor: phase already active at kmax advance");
  auto ph = std::make_unique<ActivePhase>();
  ph->rec.begin_op = ev.op_index;
  ph->rec.kmax_start = st.kmax;
  try {
    ph->mix = build_mixed(st.G, st.b, st.A, st.kmax);
    ph->gs = gram_schmidt_mixed(st.b, ph->mix, false);
  } catch (const internal_error& e) {
    hard(ph->rec.hard_violations, std::string("phase begin: ") + e.what());
    phases_.push_back(std::move(ph->rec));
    return;
  }
  ph->rec.isodim_start = ph->mix.isodim;
  ph->rec.rank_start = ph->mix.rank();

  // dual[j] = form * b*_j / norm_j, so that mu_{i,j} = b_i . dual[j].
  int K = st.kmax;
  ph->dual.resize(K);
  for (int j = 0; j < K; ++j) {
    RatVec w(m_, BigRat(0));
    RatVec bs = ph->gs.bstar.row_vec(j);
    for (int a = 0; a < m_; ++a) {
      BigRat s = 0;
      for (int c = 0; c < m_; ++c)
        if (bs[c] != 0) s += ph->mix.form(a, c) * bs[c];
      w[a] = s / ph->gs.norms[j];
    }
    ph->dual[j] = std::move(w);
  }

  // Entry expectations (soft): incorporated rows arrive size-reduced, and the
  // fresh row has coefficients of squared size at most Bp.
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < i; ++j)
      if (abs(ph->gs.mu[i][j]) > 1)
        soft(&ph->rec, "phase begin: |mu_{" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + "}| > 1: " + to_string(ph->gs.mu[i][j]));
  IntVec fresh = st.b.row_vec(K);
  for (int j = 0; j < K; ++j) {
    BigRat mu = dot(fresh, ph->dual[j]);
    if (mu * mu > BigRat(Bp_))
      soft(&ph->rec, "phase begin: mu_{fresh," + std::to_string(j + 1) + "}^2 > Bp: " +
                         to_string(mu));
  }
  phase_ = std::move(ph);
}

void BoundsMonitor::phase_step(const TraceEvent& ev, const EngineState& st) {
  PhaseRecord& rec = phase_->rec;
  ++rec.steps;
  if (ev.kind != EventKind::swap) return;
  ++rec.swaps;
  int p = ev.k;  // swapped rows p-1, p; the moving content is now at p-1
  int K = rec.kmax_start;
  const auto& gs = phase_->gs;

  BigRat mu_move = dot(st.b.row_vec(p - 1), phase_->dual[p - 1]);
  BigInt r = mu_move.get_den();
  rec.r_log.push_back(to_string(r));
  rec.r_at[p + 1] = r;  // the moving row just left 1-based position p+1

  // Soft estimates relative to the frozen Gram-Schmidt frame; the moving row
  // currently sits at 1-based position p.
  auto mu_ij = [&](int i_int, int j_pos) -> BigRat {
    // j_pos = 0 refers to the fresh coordinate axis e_{K+1}
    if (j_pos == 0) return BigRat(st.b(i_int, K));
    return dot(st.b.row_vec(i_int), phase_->dual[j_pos - 1]);
  };
  for (int i_pos = 1; i_pos < p; ++i_pos)
    for (int j = 0; j < i_pos; ++j) {
      BigRat mu = mu_ij(i_pos - 1, j);
      if (abs(mu) > 1)
        soft(&rec, "phase step (op " + std::to_string(ev.op_index) + "): |mu_{" +
                       std::to_string(i_pos) + "," + std::to_string(j) + "}| > 1: " +
                       to_string(mu));
    }
  BigInt prod = 1;
  for (const auto& [pos, rv] : rec.r_at)
    if (pos > p) prod *= 4 * rv * rv;
  BigInt moving_bound = Bp_ * prod;
  for (int j = 0; j < p; ++j) {
    BigRat mu = mu_ij(p - 1, j);
    if (mu * mu > BigRat(moving_bound))
      soft(&rec, "phase step (op " + std::to_string(ev.op_index) + "): moving-row mu_{" +
                     std::to_string(p) + "," + std::to_string(j) +
                     "}^2 exceeds Bp * prod(2 r)^2");
  }
  BigInt below_bound = ipow(BigInt(4), unsigned(m_)) * ipow(Bp_, unsigned(rec.rank_start) + 1);
  for (int i_int = p; i_int <= K; ++i_int)
    for (int j = 0; j <= i_int; ++j) {
      BigRat mu = mu_ij(i_int, j);
      if (mu * mu > BigRat(below_bound))
        soft(&rec, "phase step (op " + std::to_string(ev.op_index) + "): mu_{" +
                       std::to_string(i_int + 1) + "," + std::to_string(j) +
                       "}^2 exceeds 4^m Bp^{rank+1}");
    }
}

void BoundsMonitor::end_phase(const TraceEvent& ev, const EngineState& st) {
  if (!phase_) throw internal_error("bounds monitor: phase end without active phase");
  PhaseRecord rec = std::move(phase_->rec);
  phase_.reset();
  rec.end_op = ev.op_index;
  rec.end_event = ev.kind == EventKind::new_pivot ? "new_pivot" : "new_isotropic";
  rec.end_row = ev.k + 1;
  rec.end_col = ev.kind == EventKind::new_pivot ? ev.i + 1 : 0;

  BigInt rprod = 1;
  for (const auto& [pos, rv] : rec.r_at) rprod *= rv;
  rec.product_bound_ok = rprod * rprod <= ipow(Bp_, unsigned(rec.rank_start));
  if (!rec.product_bound_ok) soft(&rec, "phase end: (prod r)^2 exceeds Bp^rank");

  std::string where = "phase ending at op " + std::to_string(ev.op_index) + ": ";
  int knew = rec.kmax_start + 1;
  try {
    MixedInnerProduct mx = build_mixed_loose(st.G, st.b, st.A, knew);
    BigInt row_bound = ipow(4 * m_ * Bp_, 4 * unsigned(m_));
    for (int i = 0; i < m_; ++i) {
      BigInt nrm = dot(st.b.row_vec(i), st.b.row_vec(i));
      if (nrm > row_bound)
        hard(rec.hard_violations,
             where + "(b_" + std::to_string(i + 1) + ", b_" + std::to_string(i + 1) +
                 ") exceeds (4 m Bp)^{4m}");
    }
    GramSchmidtData gs = gram_schmidt_mixed(st.b, mx, false);
    BigInt mu_bound = C_const(m_, Bp_);
    for (int i = 0; i < knew; ++i)
      for (int j = 0; j < i; ++j)
        if (!rat_sq_le(gs.mu[i][j], mu_bound))
          hard(rec.hard_violations, where + "mu_{" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + "}^2 exceeds (4 m Bp)^{5m}");
    if (level_ == CheckLevel::full) stage_mix_ = std::make_unique<MixedInnerProduct>(mx);
  } catch (const internal_error& e) {
    hard(rec.hard_violations, where + e.what());
  }
  phases_.push_back(std::move(rec));
}

void BoundsMonitor::full_level_op(const TraceEvent& ev, const EngineState& st) {
  if (m_ > 5) return;
  if (ev.kind == EventKind::swap && ev.lovasz) {
    ++lovasz_seen_;
    int k = ev.k;
    // Route 1: strict descent of the engine's own subdeterminant table.
    if (have_prev_D_ && !(st.D[k] < prev_D_[k]))
      hard(hard_msgs_, "op " + std::to_string(ev.op_index) + ": Lovasz swap did not decrease D[" +
                           std::to_string(k) + "]: " + to_string(prev_D_[k]) + " -> " +
                           to_string(st.D[k]));
    // Route 2: the mixed subdeterminant sequences must be non-increasing. The
    // swap is an involution on b and A, so the pre-swap state is recoverable
    // exactly; compare when both sides are evaluable under the stage form.
    if (!phase_ && stage_mix_) {
      try {
        IntMat b_pre = st.b, A_pre = st.A;
        b_pre.swap_rows(k - 1, k);
        A_pre.swap_rows(k - 1, k);
        GramSchmidtData pre = gram_schmidt_mixed(b_pre, *stage_mix_, true, &A_pre);
        GramSchmidtData post = gram_schmidt_mixed(st.b, *stage_mix_, true, &st.A);
        if (pre.sequences_valid && post.sequences_valid) {
          ++lovasz_checked_;
          for (std::size_t i = 0; i < post.diso.size() && i < pre.diso.size(); ++i)
            if (post.diso[i] > pre.diso[i])
              hard(hard_msgs_, "op " + std::to_string(ev.op_index) + ": diso_" +
                                   std::to_string(i + 1) + " increased across a Lovasz swap: " +
                                   to_string(pre.diso[i]) + " -> " + to_string(post.diso[i]));
          for (std::size_t i = 0; i < post.d.size() && i < pre.d.size(); ++i)
            if (post.d[i] > pre.d[i])
              hard(hard_msgs_, "op " + std::to_string(ev.op_index) + ": d_" +
                                   std::to_string(i + 1) + " increased across a Lovasz swap: " +
                                   to_string(pre.d[i]) + " -> " + to_string(post.d[i]));
        }
      } catch (const internal_error&) {
        // Either side may be momentarily outside the evaluable span.
      }
    }
  }
  if (phase_ || !stage_mix_) return;
  // Between phases the stage form is frozen; re-evaluate the stage bounds and
  // the subdeterminant bound whenever the state is structurally evaluable.
  try {
    GramSchmidtData gs = gram_schmidt_mixed(st.b, *stage_mix_, true, &st.A);
    StageBoundsReport rep = check_stage_bounds(*stage_mix_, gs, st.k + 1, Bp_);
    if (!rep.all())
      soft(nullptr, "op " + std::to_string(ev.op_index) + ": stage bounds: " + rep.first_violation);
    if (gs.sequences_valid) {
      BigInt dbound = ipow(Bp_, unsigned(stage_mix_->rank()));
      for (size_t i = 0; i < gs.d.size(); ++i)
        if (gs.d[i] > dbound)
          hard(hard_msgs_, "op " + std::to_string(ev.op_index) + ": d_" + std::to_string(i + 1) +
                               " = " + to_string(gs.d[i]) + " exceeds Bp^rank");
    }
  } catch (const internal_error&) {
    // Mid-stage states may leave the span where the frozen form is positive
    // definite for a moment; those instants are simply not evaluable.
  }
}

}  // namespace lllhnf
