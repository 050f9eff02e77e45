#include "lllhnf/mixed.hpp"

#include <algorithm>

#include "lllhnf/engine.hpp"
#include "lllhnf/linalg.hpp"

namespace lllhnf {

BigRat MixedInnerProduct::mix(const RatVec& v, const RatVec& w) const {
  if (int(v.size()) != m || int(w.size()) != m)
    throw input_error("mix: vector dimension mismatch");
  BigRat s = 0;
  for (int i = 0; i < m; ++i) {
    if (v[i] == 0) continue;
    BigRat t = 0;
    for (int j = 0; j < m; ++j)
      if (w[j] != 0) t += form(i, j) * w[j];
    s += v[i] * t;
  }
  return s;
}

BigRat MixedInnerProduct::mix(const IntVec& v, const IntVec& w) const {
  return mix(to_rat(v), to_rat(w));
}

RatMat MixedInnerProduct::gram_mix() const {
  RatMat g(kmax, kmax);
  for (int i = 0; i < kmax; ++i)
    for (int j = 0; j < kmax; ++j) g(i, j) = form(i, j);
  return g;
}

std::vector<int> pivot_columns(const IntMat& A, int kmax) {
  int n = A.cols();
  std::vector<int> cols;
  bool in_nonzero = false;
  int prev = n;
  for (int i = 0; i < kmax; ++i) {
    int c = col1(A, i);
    if (c == n) {
      if (in_nonzero) throw internal_error("pivot_columns: zero row below a nonzero row");
      continue;
    }
    if (in_nonzero && c >= prev)
      throw internal_error("pivot_columns: leading columns not strictly decreasing");
    in_nonzero = true;
    prev = c;
    cols.push_back(c);
  }
  std::sort(cols.begin(), cols.end());
  return cols;
}

namespace {

MixedInnerProduct build_core(const IntMat& G, const IntMat& b, const IntMat& A, int kmax,
                             std::vector<int> pcols) {
  int m = b.rows();
  if (b.cols() != m || A.rows() != m || G.rows() != m || A.cols() != G.cols() || kmax < 0 ||
      kmax > m)
    throw input_error("build_mixed: dimension mismatch");
  MixedInnerProduct mx;
  mx.m = m;
  mx.kmax = kmax;
  mx.pivot_cols = std::move(pcols);
  int r = mx.rank();
  mx.Gr = IntMat(m, r);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < r; ++j) mx.Gr(i, j) = G(i, mx.pivot_cols[j]);

  std::vector<int> iso_rows;
  for (int i = 0; i < kmax; ++i)
    if (A.row_is_zero(i)) iso_rows.push_back(i);
  mx.isodim = int(iso_rows.size());
  mx.iso_basis = IntMat(mx.isodim, m);
  for (int t = 0; t < mx.isodim; ++t)
    for (int j = 0; j < m; ++j) mx.iso_basis(t, j) = b(iso_rows[t], j);

  // form = S^T (S S^T)^{-1} S + Gr Gr^T with S = iso_basis.
  IntMat grg = mx.Gr * mx.Gr.transpose();
  mx.form = RatMat(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) mx.form(i, j) = BigRat(grg(i, j));
  if (mx.isodim > 0) {
    IntMat sg = mx.iso_basis * mx.iso_basis.transpose();
    RatMat sgr(sg);
    // X = (S S^T)^{-1} S, solved column by column; singular would mean the
    // rows of b are dependent, impossible for a unimodular b.
    RatMat X(mx.isodim, m);
    for (int c = 0; c < m; ++c) {
      RatVec rhs(mx.isodim);
      for (int t = 0; t < mx.isodim; ++t) rhs[t] = BigRat(mx.iso_basis(t, c));
      RatVec x;
      try {
        x = solve_square(sgr, rhs);
      } catch (const internal_error&) {
        throw internal_error("build_mixed: isotropic rows dependent");
      }
      for (int t = 0; t < mx.isodim; ++t) X(t, c) = x[t];
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        BigRat p = 0;
        for (int t = 0; t < mx.isodim; ++t) p += BigRat(mx.iso_basis(t, i)) * X(t, j);
        mx.form(i, j) += p;
      }
  }
  mx.det_gram = det_rat(mx.gram_mix());
  return mx;
}

}  // namespace

MixedInnerProduct build_mixed(const IntMat& G, const IntMat& b, const IntMat& A, int kmax) {
  return build_core(G, b, A, kmax, pivot_columns(A, kmax));
}

MixedInnerProduct build_mixed_loose(const IntMat& G, const IntMat& b, const IntMat& A, int kmax) {
  std::vector<int> cols;
  for (int i = 0; i < kmax; ++i) {
    int c = col1(A, i);
    if (c < A.cols()) cols.push_back(c);
  }
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
    throw internal_error("build_mixed_loose: duplicate leading columns");
  return build_core(G, b, A, kmax, std::move(cols));
}

GramSchmidtData gram_schmidt_mixed(const IntMat& b, const MixedInnerProduct& mx,
                                   bool with_sequences, const IntMat* A) {
  int kmax = mx.kmax, m = mx.m;
  GramSchmidtData gs;
  gs.bstar = RatMat(kmax, m);
  gs.mu.resize(kmax);
  gs.norms.resize(kmax);
  for (int i = 0; i < kmax; ++i) {
    RatVec v = to_rat(b.row_vec(i));
    gs.mu[i].resize(i);
    for (int j = 0; j < i; ++j) {
      BigRat mu = mx.mix(v, gs.bstar.row_vec(j)) / gs.norms[j];
      gs.mu[i][j] = mu;
      if (mu != 0)
        for (int l = 0; l < m; ++l) v[l] -= mu * gs.bstar(j, l);
    }
    BigRat norm = mx.mix(v, v);
    if (norm <= 0)
      throw internal_error("gram_schmidt_mixed: nonpositive norm at row " + std::to_string(i + 1));
    for (int l = 0; l < m; ++l) gs.bstar(i, l) = v[l];
    gs.norms[i] = norm;
  }

  if (!with_sequences) return gs;
  if (!A) throw input_error("gram_schmidt_mixed: sequences requested without A");

  // Sequences are defined only when the zero rows of A occupy exactly the
  // first isodim positions and the leading columns match the form.
  std::vector<int> cur_cols;
  bool stratified = true;
  for (int i = 0; i < kmax; ++i) {
    bool z = A->row_is_zero(i);
    if (z != (i < mx.isodim)) stratified = false;
    if (!z) cur_cols.push_back(col1(*A, i));
  }
  std::sort(cur_cols.begin(), cur_cols.end());
  if (!stratified || cur_cols != mx.pivot_cols) {
    gs.sequences_valid = false;
    return gs;
  }
  gs.sequences_valid = true;

  auto note = [&gs](const std::string& s) {
    if (gs.issue.empty()) gs.issue = s;
  };

  BigRat acc = 1;
  for (int i = 0; i < mx.isodim; ++i) {
    acc *= gs.norms[i];
    if (!is_integer(acc)) {
      gs.diso_integral = false;
      note("diso_" + std::to_string(i + 1) + " not an integer: " + to_string(acc));
      break;
    }
    gs.diso.push_back(acc.get_num());
  }
  acc = 1;
  for (int t = mx.isodim; t < kmax; ++t) {
    acc *= gs.norms[t];
    if (!is_integer(acc)) {
      gs.d_integral = false;
      note("d_" + std::to_string(t - mx.isodim + 1) + " not an integer: " + to_string(acc));
      break;
    }
    gs.d.push_back(acc.get_num());
  }
  for (const BigInt& di : gs.d) {
    if (!is_perfect_square(di)) {
      gs.pivots_squared = false;
      note("d value not a perfect square: " + to_string(di));
      break;
    }
  }
  // Pivot-block norms: equal to both the <,> norm of b*_i and the square of
  // the leading entry of the corresponding A-row.
  for (int t = mx.isodim; t < kmax; ++t) {
    RatVec v = gs.bstar.row_vec(t);
    RatVec vg(mx.rank(), BigRat(0));
    for (int j = 0; j < mx.rank(); ++j)
      for (int l = 0; l < m; ++l) vg[j] += v[l] * BigRat(mx.Gr(l, j));
    BigRat bracket = dot(vg, vg);
    if (bracket != gs.norms[t]) {
      gs.bracket_match = false;
      note("mix norm differs from <,> norm at pivot row " + std::to_string(t + 1));
    }
    int c = col1(*A, t);
    BigInt p = (*A)(t, c);
    if (gs.norms[t] != BigRat(p * p)) {
      gs.pivots_squared = false;
      note("pivot-block norm at row " + std::to_string(t + 1) + " is not the squared pivot");
    }
  }
  return gs;
}

}  // namespace lllhnf
