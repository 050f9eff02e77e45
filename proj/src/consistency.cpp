#include "lllhnf/consistency.hpp"

#include "lllhnf/linalg.hpp"

namespace lllhnf {

void ConsistencyChecker::on_event(const TraceEvent& ev, const EngineState& st) {
  switch (ev.kind) {
    case EventKind::reduce:
    case EventKind::swap:
    case EventKind::minus:
    case EventKind::done:
      check(st, ev.op_index);
      break;
    default:
      break;
  }
}

void ConsistencyChecker::check(const EngineState& st, unsigned long long op) {
  ++ops_checked_;
  if (messages_.size() >= 16) return;  // enough witnesses; stop accumulating
  std::string where = "op " + std::to_string(op) + ": ";
  if (!(st.b * st.G == st.A)) {
    messages_.push_back(where + "b * G != A");
    return;
  }
  if (st.m > small_m_limit_) return;

  BigInt det = det_exact(st.b);
  if (det != st.det_sign)
    messages_.push_back(where + "det(b) = " + to_string(det) + " but det_sign = " +
                        std::to_string(st.det_sign));

  // Rational Gram-Schmidt of the rows of b, recomputed from scratch.
  EuclidGS gs;
  try {
    gs = gram_schmidt_euclid(st.b);
  } catch (const internal_error&) {
    messages_.push_back(where + "rows of b dependent");
    return;
  }
  BigRat prod = 1;
  for (int i = 0; i < st.m; ++i) {
    prod *= gs.norms[i];
    if (BigRat(st.D[i + 1]) != prod) {
      messages_.push_back(where + "D[" + std::to_string(i + 1) + "] = " +
                          to_string(st.D[i + 1]) + " but Gram determinant is " + to_string(prod));
      return;
    }
    for (int j = 0; j < i; ++j) {
      if (BigRat(st.lam[i][j]) != gs.mu[i][j] * BigRat(st.D[j + 1])) {
        messages_.push_back(where + "lambda[" + std::to_string(i + 1) + "][" +
                            std::to_string(j + 1) + "] = " + to_string(st.lam[i][j]) +
                            " but mu * D = " + to_string(gs.mu[i][j] * BigRat(st.D[j + 1])));
        return;
      }
    }
  }
}

}  // namespace lllhnf
