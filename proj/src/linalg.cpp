#include "lllhnf/linalg.hpp"

namespace lllhnf {

IntMat gram_of(const IntMat& G) {
  int m = G.rows(), n = G.cols();
  IntMat g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      BigInt s = 0;
      for (int l = 0; l < n; ++l) s += G(i, l) * G(j, l);
      g(i, j) = s;
      if (i != j) g(j, i) = s;
    }
  return g;
}

BigInt det_exact(const IntMat& M) {
  if (M.rows() != M.cols()) throw input_error("det_exact: matrix not square");
  int n = M.rows();
  if (n == 0) return 1;
  IntMat W = M;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (W(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      W.swap_rows(piv, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        W(i, j) = exact_div(W(i, j) * W(k, k) - W(i, k) * W(k, j), prev);
      W(i, k) = 0;
    }
    prev = W(k, k);
  }
  BigInt d = W(n - 1, n - 1);
  return sign < 0 ? BigInt(-d) : d;
}

BigRat det_rat(const RatMat& M) {
  if (M.rows() != M.cols()) throw input_error("det_rat: matrix not square");
  int n = M.rows();
  RatMat W = M;
  BigRat det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (W(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return BigRat(0);
    if (piv != k) {
      W.swap_rows(piv, k);
      det = -det;
    }
    det *= W(k, k);
    BigRat inv = 1 / W(k, k);
    for (int i = k + 1; i < n; ++i) {
      BigRat f = W(i, k) * inv;
      if (f == 0) continue;
      for (int j = k; j < n; ++j) W(i, j) -= f * W(k, j);
    }
  }
  return det;
}

int rank_rat(const RatMat& M) {
  RatMat W = M;
  int m = W.rows(), n = W.cols();
  int rank = 0;
  for (int c = 0; c < n && rank < m; ++c) {
    int piv = -1;
    for (int i = rank; i < m; ++i)
      if (W(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank) W.swap_rows(piv, rank);
    BigRat inv = 1 / W(rank, c);
    for (int i = rank + 1; i < m; ++i) {
      BigRat f = W(i, c) * inv;
      if (f == 0) continue;
      for (int j = c; j < n; ++j) W(i, j) -= f * W(rank, j);
    }
    ++rank;
  }
  return rank;
}

int rank_exact(const IntMat& M) { return rank_rat(RatMat(M)); }

RatVec solve_square(const RatMat& M, const RatVec& rhs) {
  if (M.rows() != M.cols() || int(rhs.size()) != M.rows())
    throw input_error("solve_square: dimension mismatch");
  int n = M.rows();
  RatMat W = M;
  RatVec b = rhs;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (W(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw internal_error("solve_square: singular system");
    if (piv != k) {
      W.swap_rows(piv, k);
      std::swap(b[k], b[piv]);
    }
    BigRat inv = 1 / W(k, k);
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      BigRat f = W(i, k) * inv;
      if (f == 0) continue;
      for (int j = k; j < n; ++j) W(i, j) -= f * W(k, j);
      b[i] -= f * b[k];
    }
  }
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / W(i, i);
  return x;
}

RatVec project_onto_rowspan(const RatMat& rows, const RatVec& v) {
  int r = rows.rows(), n = rows.cols();
  if (int(v.size()) != n) throw input_error("project_onto_rowspan: dimension mismatch");
  RatVec out(n, BigRat(0));
  if (r == 0) return out;
  // Solve (R R^T) x = R v, projection is x^T R.
  RatMat gram(r, r);
  RatVec rhs(r);
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      BigRat s = dot(rows.row_vec(i), rows.row_vec(j));
      gram(i, j) = s;
      if (i != j) gram(j, i) = s;
    }
    rhs[i] = dot(rows.row_vec(i), v);
  }
  RatVec x;
  try {
    x = solve_square(gram, rhs);
  } catch (const internal_error&) {
    throw internal_error("project_onto_rowspan: dependent rows");
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) out[j] += x[i] * rows(i, j);
  return out;
}

EuclidGS gram_schmidt_euclid(const RatMat& basis, int limit) {
  int m = limit < 0 ? basis.rows() : limit;
  if (m > basis.rows()) throw input_error("gram_schmidt_euclid: limit exceeds rows");
  int n = basis.cols();
  EuclidGS gs;
  gs.bstar = RatMat(m, n);
  gs.mu.resize(m);
  gs.norms.resize(m);
  for (int i = 0; i < m; ++i) {
    RatVec v = basis.row_vec(i);
    gs.mu[i].resize(i);
    for (int j = 0; j < i; ++j) {
      BigRat mu = dot(v, gs.bstar.row_vec(j)) / gs.norms[j];
      gs.mu[i][j] = mu;
      if (mu != 0)
        for (int l = 0; l < n; ++l) v[l] -= mu * gs.bstar(j, l);
    }
    BigRat norm = dot(v, v);
    if (norm == 0) throw internal_error("gram_schmidt_euclid: dependent row " + std::to_string(i));
    for (int l = 0; l < n; ++l) gs.bstar(i, l) = v[l];
    gs.norms[i] = norm;
  }
  return gs;
}

EuclidGS gram_schmidt_euclid(const IntMat& basis, int limit) {
  return gram_schmidt_euclid(RatMat(basis), limit);
}

}  // namespace lllhnf
