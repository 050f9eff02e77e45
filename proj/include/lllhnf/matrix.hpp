#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "lllhnf/bigint.hpp"

namespace lllhnf {

using IntVec = std::vector<BigInt>;
using RatVec = std::vector<BigRat>;

// Dense row-major matrices over Z and Q. Indices are 0-based internally;
// user-facing output (reports, CLI diagnostics) converts to 1-based.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
    assert(rows >= 0 && cols >= 0);
  }

  static IntMat identity(int n) {
    IntMat I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1;
    return I;
  }

  // Test/fixture convenience: IntMat::from_rows({{1,2},{3,4}}).
  static IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    int m = int(rows.size());
    int n = m == 0 ? 0 : int(rows.begin()->size());
    IntMat M(m, n);
    int i = 0;
    for (const auto& r : rows) {
      assert(int(r.size()) == n);
      int j = 0;
      for (long v : r) M(i, j++) = v;
      ++i;
    }
    return M;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigInt& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return e_[size_t(i) * cols_ + j];
  }
  const BigInt& operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return e_[size_t(i) * cols_ + j];
  }

  bool operator==(const IntMat&) const = default;

  void swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void negate_row(int i) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  // row_dst -= q * row_src
  void row_submul(int dst, int src, const BigInt& q) {
    for (int j = 0; j < cols_; ++j) (*this)(dst, j) -= q * (*this)(src, j);
  }

  bool row_is_zero(int i) const {
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) return false;
    return true;
  }

  IntVec row_vec(int i) const {
    IntVec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  IntMat transpose() const {
    IntMat T(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
    return T;
  }

  friend IntMat operator*(const IntMat& X, const IntMat& Y) {
    if (X.cols() != Y.rows()) throw input_error("matrix product: dimension mismatch");
    IntMat Z(X.rows(), Y.cols());
    for (int i = 0; i < X.rows(); ++i)
      for (int l = 0; l < X.cols(); ++l) {
        const BigInt& x = X(i, l);
        if (x == 0) continue;
        for (int j = 0; j < Y.cols(); ++j) Z(i, j) += x * Y(l, j);
      }
    return Z;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigInt> e_;
};

class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
    assert(rows >= 0 && cols >= 0);
  }

  explicit RatMat(const IntMat& M) : RatMat(M.rows(), M.cols()) {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) (*this)(i, j) = BigRat(M(i, j));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigRat& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return e_[size_t(i) * cols_ + j];
  }
  const BigRat& operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return e_[size_t(i) * cols_ + j];
  }

  bool operator==(const RatMat&) const = default;

  void swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  RatVec row_vec(int i) const {
    RatVec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigRat> e_;
};

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = BigRat(v[i]);
  return r;
}

inline BigInt dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  BigInt s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline BigRat dot(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  BigRat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline BigRat dot(const IntVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  BigRat s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += BigRat(a[i]) * b[i];
  return s;
}

}  // namespace lllhnf
