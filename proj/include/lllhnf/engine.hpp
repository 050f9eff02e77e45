#pragma once

#include <vector>

#include "lllhnf/matrix.hpp"

namespace lllhnf {

// Thrown when the operation budget is exhausted. Distinguishes a runaway
// loop (a bug) from ordinary failures; desk-scale inputs stay far below the
// default budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CheckLevel { none, checkpoints, full };

struct EngineConfig {
  // Lovasz parameter alpha = alpha_num/alpha_den, requires 1/4 < alpha <= 1.
  long alpha_num = 3;
  long alpha_den = 4;
  unsigned long long max_ops = 100'000'000;
  bool record_trace = false;
};

enum class EventKind {
  reduce,         // reduce2(k, i) executed (applied tells whether q != 0)
  swap,           // rows k-1, k swapped (lovasz tells which branch)
  minus,          // row k negated
  k_advance,      // working index k moved up by one
  kmax_advance,   // a new row was incorporated; kmax = rows incorporated
  new_pivot,      // incorporation phase ended: fresh pivot column appeared
  new_isotropic,  // incorporation phase ended: fresh zero row of A appeared
  checkpoint,     // state is echelon-ordered on the first kmax rows
  done
};

struct TraceEvent {
  EventKind kind;
  int k = -1;      // acting row (0-based); for new_pivot/new_isotropic the row that fired
  int i = -1;      // reduce source row; for new_pivot the new column
  bool applied = false;  // reduce: whether q != 0
  bool lovasz = false;   // swap: taken on the Lovasz branch (both A-rows zero)
  int kmax = 0;
  unsigned long long op_index = 0;
};

// Working state of the HNF computation. A = b * G at all times, b unimodular.
// lam[i][j] (j < i) and D[0..m] carry the all-integer LLL bookkeeping of the
// rows of b under the Euclidean inner product: D[i] is the i-th principal
// Gram determinant of b and lam[i][j] = mu_{i,j} * D[j+1] for the
// Gram-Schmidt coefficients mu of b.
struct EngineState {
  IntMat G;
  IntMat A;
  IntMat b;
  std::vector<std::vector<BigInt>> lam;
  std::vector<BigInt> D;
  int m = 0, n = 0;
  int k = 1;      // active row pair is (k-1, k), 0-based
  int kmax = 0;   // number of incorporated rows
  int det_sign = 1;  // sign of det(b), maintained across swaps/negations
  unsigned long long op_index = 0;
};

class EngineObserver {
 public:
  virtual ~EngineObserver() = default;
  virtual void on_event(const TraceEvent& ev, const EngineState& st) = 0;
};

// Index of the first nonzero entry of row i, or A.cols() for a zero row.
int col1(const IntMat& A, int i);

class HnfEngine {
 public:
  HnfEngine(const IntMat& G, EngineConfig cfg = {});

  void add_observer(EngineObserver* obs) { observers_.push_back(obs); }

  // Runs the full algorithm: LLL-driven elimination loop, then a final
  // normalization sweep (positive leading entries, entries above reduced).
  void run();

  const EngineState& state() const { return st_; }
  EngineState& state() { return st_; }  // tests drive single operations on crafted states
  const std::vector<TraceEvent>& trace() const { return trace_; }

  // Elementary operations, public so unit tests can exercise them directly.
  void minus_row(int i);
  bool reduce2(int k, int i);      // returns whether a nonzero multiple was subtracted
  bool swap_wanted(int k) const;   // requires reduce2(k, k-1) done this iteration
  void swap2(int k);

 private:
  void bump_op();
  void notify(TraceEvent ev);
  void emit(EventKind kind, int k = -1, int i = -1, bool applied = false, bool lovasz = false);
  void watch_start();
  void watch_check();
  void final_sweep();

  EngineConfig cfg_;
  EngineState st_;
  std::vector<EngineObserver*> observers_;
  std::vector<TraceEvent> trace_;

  // Incorporation-phase watch: observes rows 0..watch_limit_ after each
  // operation and reports the first structural novelty relative to the
  // baseline taken when the phase began (new zero row, or a leading column
  // outside the baseline pivot set).
  bool watch_active_ = false;
  int watch_limit_ = 0;
  int watch_zero_base_ = 0;
  std::vector<char> watch_incol_;
};

struct EngineResult {
  IntMat A;
  IntMat b;
  int det_sign = 1;
  unsigned long long ops = 0;
  std::vector<TraceEvent> trace;
};

EngineResult run_hnf(const IntMat& G, const EngineConfig& cfg = {},
                     const std::vector<EngineObserver*>& observers = {});

}  // namespace lllhnf
