#pragma once

#include <string>

#include "lllhnf/matrix.hpp"

namespace lllhnf {

// Reference Hermite normal form in the "zero rows on top" convention:
// nonzero rows have strictly decreasing leading columns going down, leading
// entries are positive, and in each pivot column the entries below the pivot
// lie in [0, pivot) while the entries above are zero. Computed by plain gcd
// elimination; deliberately shares no code with the LLL-driven engine so it
// can serve as an equivalence oracle.
IntMat oracle_hnf(const IntMat& G);

// Structural predicate for the normal form described above.
bool is_upside_down_hnf(const IntMat& A);

struct VerifyReport {
  bool product_ok = false;     // b * G == A
  bool unimodular_ok = false;  // |det b| == 1
  bool hnf_ok = false;         // A passes is_upside_down_hnf
  bool oracle_ok = false;      // A == oracle_hnf(G)
  bool all() const { return product_ok && unimodular_ok && hnf_ok && oracle_ok; }
};
VerifyReport verify_result(const IntMat& G, const IntMat& b, const IntMat& A);

// Quality conditions on the transformation matrix itself. G' denotes G
// restricted to its pivot columns (the leading columns of the normal form);
// <u, v> denotes the inner product (u G', v G') and (u, v) the Euclidean one.
// With isodim = number of rows of b annihilated by G', using the mixed
// Gram-Schmidt b*_i of the rows of b (orthogonalized Euclidean against the
// first isodim rows, <,>-orthogonalized against the rest):
//   1. the isotropic rows of b are exactly the first isodim rows,
//   2. rows 1..isodim of b are LLL-reduced for alpha under (,),
//   3. the last rank rows of A are independent, and |<b*_i, b_j>| <= <b*_i, b_i>
//      for isodim < i < j,
//   4. |(b*_i, b_j)| <= (1/2) (b*_i, b_i) for i <= isodim < j (non-strict).
// Throws input_error if b is not unimodular or dimensions mismatch.
struct OutputConditionReport {
  int isodim = 0;
  int rank = 0;
  bool iso_first = false;
  bool iso_reduced = false;
  bool basis_ok = false;
  bool size_reduced = false;
  std::string witness;  // first failure, empty when all conditions hold
  bool all() const { return iso_first && iso_reduced && basis_ok && size_reduced; }
};
OutputConditionReport check_output_conditions(const IntMat& G, const IntMat& b,
                                              long alpha_num = 3, long alpha_den = 4);

}  // namespace lllhnf
