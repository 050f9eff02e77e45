#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lllhnf {

// Exact scalars. Everything in this project is integer or rational
// arithmetic; no floating point enters any algorithmic decision.
using BigInt = mpz_class;
using BigRat = mpq_class;

// Internal bookkeeping found corrupted (inexact division where exactness is
// guaranteed, observer protocol misuse, singular system that cannot happen
// for valid inputs). Indicates a bug, not bad user data.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed user-facing input: matrix files, generator specs, CLI values.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact quotient a/b; throws internal_error if b does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw internal_error("exact_div: division by zero");
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    throw internal_error("exact_div: " + b.get_str() + " does not divide " + a.get_str());
  return q;
}

// floor(a/b), b != 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Nearest integer to num/den for den > 0, with half-integer ties rounded
// toward zero: round(3/2) = 1, round(-3/2) = -1, round(5/4) = 1.
inline BigInt round_nearest(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw internal_error("round_nearest: nonpositive denominator");
  BigInt a = abs(num);
  if (2 * a <= den) return 0;
  BigInt q = floor_div(2 * a + den - 1, 2 * den);
  return num < 0 ? BigInt(-q) : q;
}

// Bit length of |x|; bit_length(0) = 0, bit_length(1) = 1, bit_length(255) = 8.
inline std::size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

// True iff x is a square in Z; stores the nonnegative root if asked.
inline bool is_perfect_square(const BigInt& x, BigInt* root = nullptr) {
  if (x < 0) return false;
  if (mpz_perfect_square_p(x.get_mpz_t()) == 0) return false;
  if (root) mpz_sqrt(root->get_mpz_t(), x.get_mpz_t());
  return true;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const BigRat& q) { return q.get_str(); }

}  // namespace lllhnf
