#pragma once

#include <string>
#include <vector>

#include "lllhnf/engine.hpp"

namespace lllhnf {

// Full-level observer re-deriving the engine's redundant state from scratch
// after every operation: b G == A always, and for m <= 5 additionally
// det_sign == det(b) and the lambda/D tables against a fresh rational
// Gram-Schmidt of the rows of b (lambda_{i,j} = mu_{i,j} D_{j+1} and D_i =
// i-th principal Gram determinant). Violations are recorded, not thrown, so
// a harness can report them.
class ConsistencyChecker : public EngineObserver {
 public:
  explicit ConsistencyChecker(int small_m_limit = 5) : small_m_limit_(small_m_limit) {}
  void on_event(const TraceEvent& ev, const EngineState& st) override;

  int violation_count() const { return int(messages_.size()); }
  const std::vector<std::string>& messages() const { return messages_; }
  unsigned long long ops_checked() const { return ops_checked_; }

 private:
  void check(const EngineState& st, unsigned long long op);
  int small_m_limit_;
  unsigned long long ops_checked_ = 0;
  std::vector<std::string> messages_;
};

}  // namespace lllhnf
