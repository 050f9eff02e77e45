#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lllhnf/engine.hpp"
#include "lllhnf/mixed.hpp"

namespace lllhnf {

// Largest entry of G G^T (0 for an empty matrix). All bound evaluation uses
// Bp = max(B, 2); every bound whose statement carries a square root is
// compared in exactly squared form, so no rounding enters any verdict.
BigInt gram_bound(const IntMat& G);
BigInt clamped_gram_bound(const IntMat& G);

struct NormRatioVerdict {
  bool upper_ok = true;  // (v,v)_mix <= m (Bp+1) (v,v)
  bool lower_ok = true;  // (v,v)^2 <= m^2 m^m (Bp+1)^{2m} ((v,v)_mix)^2, v in span(e_1..e_kmax)
};
NormRatioVerdict check_norm_ratio(const MixedInnerProduct& mx, const RatVec& v, const BigInt& Bp,
                                  bool v_in_span);

// Stage estimates for the Gram-Schmidt data of the incorporated rows, with
// C = (4 m Bp)^{5m} and mB = m^m (Bp+1)^{2m}; k_row is the 1-based working
// row (kmax+1 at checkpoints, making the active-row items vacuous):
//   1. diso_i^2 <= mB                          4. (b_k,b_k)_mix^2 <= m^4 9^{2m} C^2 mB^3
//   2. d_i <= Bp^rank                          5. |mu_{i,j}| <= 1 for j < i < k
//   3. (b_i,b_i)_mix^2 <= (mC)^2 mB, i != k    6. mu_{k,j}^2 <= 9^{m-k} m C mB
//                                              7. mu_{i,j}^2 <= m C mB for i > k
struct StageBoundsReport {
  bool item[7] = {true, true, true, true, true, true, true};
  std::string first_violation;
  bool all() const {
    for (bool x : item)
      if (!x) return false;
    return true;
  }
};
StageBoundsReport check_stage_bounds(const MixedInnerProduct& mx, const GramSchmidtData& gs,
                                     int k_row, const BigInt& Bp);

// Two-sided range for the mixed Gram-Schmidt norms:
// (sqrt(m)(Bp+1))^{-m} <= (b*_i, b*_i)_mix <= (sqrt(m)(Bp+1))^m.
struct NormRangeReport {
  bool ok = true;
  std::string first_violation;
};
NormRangeReport check_gs_norm_range(const GramSchmidtData& gs, int m, const BigInt& Bp);

struct CheckpointRecord {
  unsigned long long op_index = 0;
  int kmax = 0;
  int isodim = 0;
  int rank = 0;
  std::string det_gram;  // exact value of det(gram_mix)
  bool det_integral = false;
  bool hadamard_ok = false;  // det^2 <= kmax^kmax (Bp+1)^{2 kmax}
  bool sequences_ok = false;
  bool norm_range_ok = false;
  bool norm_ratio_ok = false;
  StageBoundsReport stage;
  std::vector<std::string> hard_violations;
  bool ok() const { return hard_violations.empty(); }
};

struct PhaseRecord {
  unsigned long long begin_op = 0, end_op = 0;
  int kmax_start = 0;  // rows incorporated when the row above began trickling in
  int isodim_start = 0;
  int rank_start = 0;
  int steps = 0;  // mutating operations observed while the phase was active
  int swaps = 0;
  std::vector<std::string> r_log;  // denominator r of the moving coefficient, per swap
  std::map<int, BigInt> r_at;      // last r per 1-based position
  std::string end_event;           // "new_pivot" or "new_isotropic"
  int end_row = 0, end_col = 0;    // 1-based; end_col only for new_pivot
  bool product_bound_ok = true;    // (prod r)^2 <= Bp^rank  (soft)
  int soft_violations = 0;
  std::vector<std::string> soft_samples;
  std::vector<std::string> hard_violations;  // end-of-phase row-norm and mu bounds
  bool ok() const { return hard_violations.empty(); }
};

// Engine observer evaluating everything above. At CheckLevel::checkpoints it
// runs the checkpoint suite at every checkpoint event and tracks each
// incorporation phase; at CheckLevel::full it additionally re-evaluates stage
// bounds after every operation outside phases, enforces the subdeterminant
// bound d_i <= Bp^rank at every evaluable moment, and checks strict descent
// of the Lovasz-swapped subdeterminant (the last three only for m <= 5, where
// the per-operation recomputation stays cheap).
class BoundsMonitor : public EngineObserver {
 public:
  BoundsMonitor(const IntMat& G, CheckLevel level, long alpha_num = 3, long alpha_den = 4);
  void on_event(const TraceEvent& ev, const EngineState& st) override;

  const std::vector<CheckpointRecord>& checkpoints() const { return checkpoints_; }
  const std::vector<PhaseRecord>& phases() const { return phases_; }
  const std::vector<std::string>& hard_messages() const { return hard_msgs_; }
  int hard_violation_count() const { return int(hard_msgs_.size()); }
  int soft_violation_count() const { return soft_total_; }
  const BigInt& Bp() const { return Bp_; }
  // Lovasz-swap descent accounting at full level: swaps seen, and how many
  // could be checked through the mixed subdeterminant sequences (both sides
  // evaluable). The engine-table descent check covers every swap regardless.
  int lovasz_swaps_seen() const { return lovasz_seen_; }
  int lovasz_descent_checked() const { return lovasz_checked_; }

 private:
  void do_checkpoint(const TraceEvent& ev, const EngineState& st);
  void begin_phase(const TraceEvent& ev, const EngineState& st);
  void phase_step(const TraceEvent& ev, const EngineState& st);
  void end_phase(const TraceEvent& ev, const EngineState& st);
  void full_level_op(const TraceEvent& ev, const EngineState& st);
  void hard(std::vector<std::string>& sink, const std::string& msg);
  void soft(PhaseRecord* rec, const std::string& msg);

  IntMat G_;
  int m_ = 0, n_ = 0;
  BigInt Bp_;
  CheckLevel level_;
  long alpha_num_, alpha_den_;

  std::vector<CheckpointRecord> checkpoints_;
  std::vector<PhaseRecord> phases_;
  std::vector<std::string> hard_msgs_;
  int soft_total_ = 0;

  struct ActivePhase {
    PhaseRecord rec;
    MixedInnerProduct mix;
    GramSchmidtData gs;
    std::vector<RatVec> dual;  // dual[j] = form * b*_j / (b*_j, b*_j)_mix
  };
  std::unique_ptr<ActivePhase> phase_;

  std::unique_ptr<MixedInnerProduct> stage_mix_;  // frozen form of the current stage
  std::vector<BigInt> prev_D_;
  bool have_prev_D_ = false;
  int lovasz_seen_ = 0;
  int lovasz_checked_ = 0;
};

}  // namespace lllhnf
