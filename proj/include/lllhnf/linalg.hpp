#pragma once

#include <vector>

#include "lllhnf/matrix.hpp"

namespace lllhnf {

// Gram matrix G * G^T (m x m for an m x n input).
IntMat gram_of(const IntMat& G);

// Determinant of a square integer matrix by fraction-free (Bareiss)
// elimination. All intermediate divisions are exact by construction.
BigInt det_exact(const IntMat& M);

// Determinant of a square rational matrix by ordinary Gaussian elimination.
// Deliberately a separate code path from det_exact so the two can be checked
// against each other.
BigRat det_rat(const RatMat& M);

int rank_rat(const RatMat& M);
int rank_exact(const IntMat& M);

// Solves the square system M x = rhs over Q. Throws internal_error if M is
// singular; callers use it only where solvability is an invariant.
RatVec solve_square(const RatMat& M, const RatVec& rhs);

// Orthogonal projection of v onto the row span of `rows` (Euclidean inner
// product). Rows must be linearly independent; an empty row set projects to 0.
RatVec project_onto_rowspan(const RatMat& rows, const RatVec& v);

// Classical Gram-Schmidt data of the first `limit` rows of a basis under the
// Euclidean inner product: b*_i = b_i - sum_{j<i} mu_{i,j} b*_j.
// Throws internal_error if a row is dependent on its predecessors
// (norm of some b*_i would be 0).
struct EuclidGS {
  RatMat bstar;                         // limit x n
  std::vector<std::vector<BigRat>> mu;  // mu[i][j] for j < i
  std::vector<BigRat> norms;            // (b*_i, b*_i)
};
EuclidGS gram_schmidt_euclid(const RatMat& basis, int limit = -1);
EuclidGS gram_schmidt_euclid(const IntMat& basis, int limit = -1);

}  // namespace lllhnf
