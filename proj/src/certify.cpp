#include "lllhnf/certify.hpp"

#include <algorithm>
#include <vector>

#include "lllhnf/engine.hpp"
#include "lllhnf/linalg.hpp"

namespace lllhnf {

namespace {

int cmpabs(const BigInt& a, const BigInt& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

BigInt trunc_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMat oracle_hnf(const IntMat& G) {
  IntMat H = G;
  int m = H.rows(), n = H.cols();
  int top = 0;  // rows above `top` are finished pivot rows
  for (int c = 0; c < n && top < m; ++c) {
    while (true) {
      int best = -1, count = 0;
      for (int i = top; i < m; ++i) {
        if (H(i, c) == 0) continue;
        ++count;
        if (best < 0 || cmpabs(H(i, c), H(best, c)) < 0) best = i;
      }
      if (count == 0) break;
      if (count == 1) {
        if (best != top) H.swap_rows(best, top);
        if (H(top, c) < 0) H.negate_row(top);
        for (int j = 0; j < top; ++j) {
          BigInt q = floor_div(H(j, c), H(top, c));
          if (q != 0) H.row_submul(j, top, q);
        }
        ++top;
        break;
      }
      // Euclidean step: fold everything onto the row of least |entry|.
      for (int i = top; i < m; ++i) {
        if (i == best || H(i, c) == 0) continue;
        H.row_submul(i, best, trunc_div(H(i, c), H(best, c)));
      }
    }
  }
  // The classical form has pivots on top; flip vertically to put zero rows
  // first and leading columns in decreasing order.
  IntMat out(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = H(m - 1 - i, j);
  return out;
}

bool is_upside_down_hnf(const IntMat& A) {
  int m = A.rows(), n = A.cols();
  bool seen_nonzero = false;
  int prev_col = n;
  std::vector<std::pair<int, int>> pivots;
  for (int i = 0; i < m; ++i) {
    int c = col1(A, i);
    if (c == n) {
      if (seen_nonzero) return false;  // zero row below a nonzero one
      continue;
    }
    if (seen_nonzero && c >= prev_col) return false;  // leading columns must strictly decrease
    seen_nonzero = true;
    prev_col = c;
    if (A(i, c) <= 0) return false;
    pivots.emplace_back(i, c);
  }
  for (auto [i, c] : pivots) {
    for (int r = 0; r < i; ++r)
      if (A(r, c) != 0) return false;
    for (int r = i + 1; r < m; ++r)
      if (A(r, c) < 0 || A(r, c) >= A(i, c)) return false;
  }
  return true;
}

VerifyReport verify_result(const IntMat& G, const IntMat& b, const IntMat& A) {
  if (b.rows() != G.rows() || b.cols() != G.rows() || A.rows() != G.rows() ||
      A.cols() != G.cols())
    throw input_error("verify_result: dimension mismatch");
  VerifyReport rep;
  rep.product_ok = (b * G == A);
  rep.unimodular_ok = (abs(det_exact(b)) == 1);
  rep.hnf_ok = is_upside_down_hnf(A);
  rep.oracle_ok = (A == oracle_hnf(G));
  return rep;
}

OutputConditionReport check_output_conditions(const IntMat& G, const IntMat& b, long alpha_num,
                                              long alpha_den) {
  int m = G.rows();
  if (b.rows() != m || b.cols() != m)
    throw input_error("check_output_conditions: dimension mismatch");
  if (abs(det_exact(b)) != 1) throw input_error("check_output_conditions: b not unimodular");

  OutputConditionReport rep;

  // Pivot columns of the canonical form of G; independent of b.
  IntMat H = oracle_hnf(G);
  std::vector<int> pcols;
  for (int i = 0; i < H.rows(); ++i) {
    int c = col1(H, i);
    if (c < H.cols()) pcols.push_back(c);
  }
  std::sort(pcols.begin(), pcols.end());
  int rank = int(pcols.size());
  rep.rank = rank;

  IntMat Gr(m, rank);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < rank; ++j) Gr(i, j) = G(i, pcols[j]);
  IntMat bGr = b * Gr;

  std::vector<char> iso(m, 0);
  int isodim = 0;
  for (int i = 0; i < m; ++i) {
    iso[i] = bGr.row_is_zero(i);
    if (iso[i]) ++isodim;
  }
  rep.isodim = isodim;

  auto fail = [&rep](const std::string& w) {
    if (rep.witness.empty()) rep.witness = w;
  };

  // Condition 1: isotropic rows occupy exactly the leading positions.
  rep.iso_first = true;
  for (int i = 0; i < isodim; ++i)
    if (!iso[i]) {
      rep.iso_first = false;
      fail("condition 1: row " + std::to_string(i + 1) + " of b is not isotropic");
      break;
    }

  // Condition 2: the isotropic block is Euclid-LLL-reduced for alpha.
  rep.iso_reduced = true;
  if (isodim > 0) {
    EuclidGS gs = gram_schmidt_euclid(b, isodim);
    for (int i = 0; i < isodim && rep.iso_reduced; ++i)
      for (int j = 0; j < i; ++j) {
        BigRat a = abs(gs.mu[i][j]);
        if (2 * a.get_num() > a.get_den()) {
          rep.iso_reduced = false;
          fail("condition 2: |mu_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               "}| > 1/2 in isotropic block");
          break;
        }
      }
    for (int i = 1; i < isodim && rep.iso_reduced; ++i) {
      BigRat mu = gs.mu[i][i - 1];
      BigRat lhs = gs.norms[i];
      BigRat rhs = (BigRat(alpha_num, alpha_den) - mu * mu) * gs.norms[i - 1];
      if (lhs < rhs) {
        rep.iso_reduced = false;
        fail("condition 2: Lovasz condition fails at isotropic row " + std::to_string(i + 1));
      }
    }
  }

  // Mixed Gram-Schmidt of the rows of b: orthogonal to the first isodim rows
  // under the Euclidean product, to later rows under <,>.
  RatMat bst(m, m);
  bool gs_ok = true;
  {
    RatMat br(b);
    RatMat bGrr(bGr);
    for (int i = 0; i < m && gs_ok; ++i) {
      RatVec v = br.row_vec(i);
      if (i > 0) {
        RatMat T(i, i);
        RatVec rhs(i);
        for (int j = 0; j < i; ++j) {
          for (int l = 0; l < i; ++l)
            T(j, l) = j < isodim ? dot(br.row_vec(l), br.row_vec(j))
                                 : dot(bGrr.row_vec(l), bGrr.row_vec(j));
          rhs[j] = j < isodim ? dot(v, br.row_vec(j)) : dot(bGrr.row_vec(i), bGrr.row_vec(j));
        }
        RatVec x;
        try {
          x = solve_square(T, rhs);
        } catch (const internal_error&) {
          gs_ok = false;
          fail("mixed Gram-Schmidt system singular at row " + std::to_string(i + 1));
          break;
        }
        for (int l = 0; l < i; ++l)
          for (int j2 = 0; j2 < m; ++j2) v[j2] -= x[l] * br(l, j2);
      }
      for (int j2 = 0; j2 < m; ++j2) bst(i, j2) = v[j2];
    }
  }

  auto grdot = [&](const RatVec& u, const RatVec& w) {
    // <u, w> = (u Gr) . (w Gr)
    RatMat Grr(Gr);
    RatVec ug(rank, BigRat(0)), wg(rank, BigRat(0));
    for (int j = 0; j < rank; ++j)
      for (int l = 0; l < m; ++l) {
        ug[j] += u[l] * Grr(l, j);
        wg[j] += w[l] * Grr(l, j);
      }
    return dot(ug, wg);
  };

  // Condition 3: last `rank` rows of A independent, off-diagonal <,>
  // coefficients of the pivot block at most 1 in absolute value.
  rep.basis_ok = (m - isodim == rank);
  if (!rep.basis_ok) fail("condition 3: isodim + rank != m");
  if (rep.basis_ok && rank > 0) {
    IntMat tail(m - isodim, rank);
    for (int i = isodim; i < m; ++i)
      for (int j = 0; j < rank; ++j) tail(i - isodim, j) = bGr(i, j);
    if (rank_exact(tail) != rank) {
      rep.basis_ok = false;
      fail("condition 3: last rows of A are dependent");
    }
  }
  if (rep.basis_ok && gs_ok) {
    RatMat br(b);
    for (int i = isodim; i < m && rep.basis_ok; ++i)
      for (int j = i + 1; j < m; ++j) {
        BigRat lhs = abs(grdot(bst.row_vec(i), br.row_vec(j)));
        BigRat rhs = grdot(bst.row_vec(i), br.row_vec(i));
        if (lhs > rhs) {
          rep.basis_ok = false;
          fail("condition 3: |<b*_" + std::to_string(i + 1) + ", b_" + std::to_string(j + 1) +
               ">| exceeds <b*_i, b_i>");
          break;
        }
      }
  } else if (!gs_ok) {
    rep.basis_ok = false;
  }

  // Condition 4: Euclidean size-reduction of everything below the isotropic
  // block, with the non-strict boundary.
  rep.size_reduced = gs_ok;
  if (gs_ok) {
    RatMat br(b);
    for (int i = 0; i < isodim && rep.size_reduced; ++i)
      for (int j = i + 1; j < m; ++j) {
        BigRat lhs = abs(dot(bst.row_vec(i), br.row_vec(j)));
        BigRat rhs = BigRat(1, 2) * dot(bst.row_vec(i), br.row_vec(i));
        if (lhs > rhs) {
          rep.size_reduced = false;
          fail("condition 4: |(b*_" + std::to_string(i + 1) + ", b_" + std::to_string(j + 1) +
               ")| exceeds (b*_i, b_i)/2");
          break;
        }
      }
  } else {
    fail("condition 4: mixed Gram-Schmidt unavailable");
  }

  return rep;
}

}  // namespace lllhnf
