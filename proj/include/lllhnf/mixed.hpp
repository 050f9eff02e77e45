#pragma once

#include <string>
#include <vector>

#include "lllhnf/matrix.hpp"

namespace lllhnf {

// Mixed inner product attached to a working state (G, b, A = b G) with kmax
// rows incorporated: for v, w in R^m,
//   (v, w)_mix = (pr v, pr w) + (v G', w G')
// where G' is G restricted to the current pivot columns, (x, y) is Euclidean,
// and pr projects onto the span of the rows of b whose A-row is zero among
// the first kmax rows. The form stays constant between structural changes and
// is positive definite on span(e_1..e_kmax).
struct MixedInnerProduct {
  int m = 0;
  int kmax = 0;
  int isodim = 0;
  std::vector<int> pivot_cols;  // 0-based, ascending
  IntMat Gr;                    // m x rank: G restricted to pivot_cols
  IntMat iso_basis;             // isodim x m rows of b spanning the isotropic part
  RatMat form;                  // m x m matrix of the bilinear form
  BigRat det_gram;              // det of the leading kmax x kmax block

  int rank() const { return int(pivot_cols.size()); }
  BigRat mix(const RatVec& v, const RatVec& w) const;
  BigRat mix(const IntVec& v, const IntVec& w) const;
  RatMat gram_mix() const;  // leading kmax x kmax block of form
};

// Leading columns of the nonzero rows among the first kmax rows of A, which
// must be echelon-ordered there (zero rows first, then strictly decreasing
// leading columns). Throws internal_error otherwise; misordered input means
// the caller asked at the wrong moment.
std::vector<int> pivot_columns(const IntMat& A, int kmax);

// Checkpoint builder (echelon structure required on the first kmax rows).
MixedInnerProduct build_mixed(const IntMat& G, const IntMat& b, const IntMat& A, int kmax);

// Relaxed builder for incorporation-phase ends: rows may appear in any order
// with zero rows anywhere, but the leading columns of the nonzero rows among
// the first kmax rows must be pairwise distinct.
MixedInnerProduct build_mixed_loose(const IntMat& G, const IntMat& b, const IntMat& A, int kmax);

struct GramSchmidtData {
  RatMat bstar;                         // kmax x m
  std::vector<std::vector<BigRat>> mu;  // mu[i][j] for j < i
  std::vector<BigRat> norms;            // (b*_i, b*_i)_mix

  // Subdeterminant sequences; populated only when requested on a state whose
  // zero A-rows form a prefix of the incorporated rows and whose leading
  // columns match the form.
  bool sequences_valid = false;
  std::vector<BigInt> diso;    // running norm products over the isotropic block
  std::vector<BigInt> d;       // running norm products over the pivot block
  bool diso_integral = true;
  bool d_integral = true;
  bool pivots_squared = true;  // pivot-block norms equal the squared pivots of A
  bool bracket_match = true;   // pivot-block mix norms equal their <,> norms
  std::string issue;           // first sequence problem, empty if none
};

// Gram-Schmidt of the first kmax rows of b under the mixed inner product.
// Throws internal_error if some orthogonalized row has nonpositive norm (the
// form is positive definite on the relevant span for every valid state).
GramSchmidtData gram_schmidt_mixed(const IntMat& b, const MixedInnerProduct& mix,
                                   bool with_sequences = false, const IntMat* A = nullptr);

}  // namespace lllhnf
