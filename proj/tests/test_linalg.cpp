#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lllhnf/corpus.hpp"
#include "lllhnf/linalg.hpp"

using namespace lllhnf;

namespace {

IntMat rnd(int m, int n, long bound, std::uint64_t seed) {
  return generate({GenKind::random, m, n, bound, 0, seed});
}

}  // namespace

TEST_CASE("scalar helpers") {
  CHECK(exact_div(BigInt(12), BigInt(4)) == 3);
  CHECK(exact_div(BigInt(-12), BigInt(4)) == -3);
  CHECK_THROWS_AS(exact_div(BigInt(7), BigInt(2)), internal_error);
  CHECK_THROWS_AS(exact_div(BigInt(1), BigInt(0)), internal_error);

  CHECK(floor_div(BigInt(7), BigInt(2)) == 3);
  CHECK(floor_div(BigInt(-7), BigInt(2)) == -4);
  CHECK(floor_div(BigInt(7), BigInt(-2)) == -4);

  // Ties round toward zero.
  CHECK(round_nearest(BigInt(3), BigInt(2)) == 1);
  CHECK(round_nearest(BigInt(-3), BigInt(2)) == -1);
  CHECK(round_nearest(BigInt(5), BigInt(4)) == 1);
  CHECK(round_nearest(BigInt(-5), BigInt(4)) == -1);
  CHECK(round_nearest(BigInt(1), BigInt(2)) == 0);
  CHECK(round_nearest(BigInt(-1), BigInt(2)) == 0);
  CHECK(round_nearest(BigInt(0), BigInt(5)) == 0);
  CHECK(round_nearest(BigInt(7), BigInt(3)) == 2);
  CHECK(round_nearest(BigInt(8), BigInt(3)) == 3);
  CHECK_THROWS_AS(round_nearest(BigInt(1), BigInt(0)), internal_error);

  CHECK(bit_length(BigInt(0)) == 0);
  CHECK(bit_length(BigInt(1)) == 1);
  CHECK(bit_length(BigInt(255)) == 8);
  CHECK(bit_length(BigInt(256)) == 9);
  CHECK(bit_length(BigInt(-255)) == 8);

  CHECK(ipow(BigInt(3), 4) == 81);
  CHECK(ipow(BigInt(0), 0) == 1);
  CHECK(ipow(BigInt(-2), 3) == -8);

  BigInt root;
  CHECK(is_perfect_square(BigInt(49), &root));
  CHECK(root == 7);
  CHECK(is_perfect_square(BigInt(0)));
  CHECK_FALSE(is_perfect_square(BigInt(50)));
  CHECK_FALSE(is_perfect_square(BigInt(-4)));

  CHECK(is_integer(make_rat(BigInt(6), BigInt(3))));
  CHECK_FALSE(is_integer(make_rat(BigInt(7), BigInt(3))));
  CHECK(make_rat(BigInt(2), BigInt(-4)) == BigRat(-1, 2));
}

TEST_CASE("gram_of") {
  IntMat G = IntMat::from_rows({{1, 2}, {3, 4}});
  IntMat g = gram_of(G);
  CHECK(g == IntMat::from_rows({{5, 11}, {11, 25}}));
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    IntMat M = rnd(4, 6, 9, seed);
    IntMat gm = gram_of(M);
    CHECK(gm == gm.transpose());
    for (int i = 0; i < 4; ++i) CHECK(gm(i, i) == dot(M.row_vec(i), M.row_vec(i)));
  }
}

TEST_CASE("determinants, two routes") {
  CHECK(det_exact(IntMat::from_rows({{2}})) == 2);
  CHECK(det_exact(IntMat::from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(det_exact(IntMat::from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(det_exact(IntMat::from_rows({{2, 0, 1}, {1, 1, 0}, {0, 3, 5}})) == 13);
  CHECK(det_exact(IntMat(0, 0)) == 1);
  CHECK(det_exact(IntMat::identity(5)) == 1);

  for (std::uint64_t seed = 20; seed < 32; ++seed) {
    IntMat M = rnd(5, 5, 8, seed);
    CHECK(BigRat(det_exact(M)) == det_rat(RatMat(M)));
  }
  // Multiplicativity.
  IntMat X = rnd(4, 4, 5, 100), Y = rnd(4, 4, 5, 101);
  CHECK(det_exact(X * Y) == det_exact(X) * det_exact(Y));
}

TEST_CASE("rank, two routes") {
  CHECK(rank_exact(IntMat(3, 3)) == 0);
  CHECK(rank_exact(IntMat::identity(4)) == 4);
  CHECK(rank_exact(IntMat::from_rows({{1, 2}, {2, 4}, {0, 1}})) == 2);
  for (std::uint64_t seed = 40; seed < 52; ++seed) {
    IntMat M = generate({GenKind::rank_deficient, 6, 5, 0, 3, seed});
    int r = rank_exact(M);
    CHECK(r <= 3);
    CHECK(r == rank_rat(RatMat(M)));
  }
  for (std::uint64_t seed = 60; seed < 66; ++seed) {
    IntMat M = rnd(5, 7, 6, seed);
    CHECK(rank_exact(M) == rank_rat(RatMat(M)));
  }
}

TEST_CASE("solve_square") {
  RatMat M(2, 2);
  M(0, 0) = 2;
  M(1, 1) = 3;
  RatVec x = solve_square(M, RatVec{BigRat(4), BigRat(9)});
  CHECK(x[0] == 2);
  CHECK(x[1] == 3);

  for (std::uint64_t seed = 70; seed < 76; ++seed) {
    IntMat Mi = rnd(4, 4, 7, seed);
    if (det_exact(Mi) == 0) continue;
    RatMat Mr(Mi);
    RatVec rhs{BigRat(1), BigRat(-2), BigRat(3, 2), BigRat(0)};
    RatVec sol = solve_square(Mr, rhs);
    for (int i = 0; i < 4; ++i) {
      BigRat s = 0;
      for (int j = 0; j < 4; ++j) s += Mr(i, j) * sol[j];
      CHECK(s == rhs[i]);
    }
  }
  RatMat S(2, 2);
  S(0, 0) = 1;
  S(0, 1) = 2;
  S(1, 0) = 2;
  S(1, 1) = 4;
  CHECK_THROWS_AS(solve_square(S, RatVec{BigRat(1), BigRat(1)}), internal_error);
}

TEST_CASE("project_onto_rowspan") {
  RatMat rows(1, 3);
  rows(0, 0) = 1;
  rows(0, 1) = -2;
  rows(0, 2) = 0;
  RatVec v{BigRat(3), BigRat(1), BigRat(4)};
  RatVec p = project_onto_rowspan(rows, v);
  // Residual orthogonal to the span; projection inside the span.
  BigRat resid_dot = 0;
  for (int j = 0; j < 3; ++j) resid_dot += (v[j] - p[j]) * rows(0, j);
  CHECK(resid_dot == 0);
  CHECK(p[0] * BigRat(-2) == p[1]);  // p is a multiple of (1,-2,0)
  CHECK(p[2] == 0);

  // A vector already in the span projects to itself; projection is idempotent.
  RatVec w{BigRat(5), BigRat(-10), BigRat(0)};
  CHECK(project_onto_rowspan(rows, w) == w);
  CHECK(project_onto_rowspan(rows, p) == p);

  RatMat empty(0, 3);
  RatVec z = project_onto_rowspan(empty, v);
  CHECK(z == RatVec{BigRat(0), BigRat(0), BigRat(0)});
}

TEST_CASE("gram_schmidt_euclid") {
  for (std::uint64_t seed = 80; seed < 86; ++seed) {
    IntMat Mi = rnd(4, 4, 6, seed);
    if (det_exact(Mi) == 0) continue;
    EuclidGS gs = gram_schmidt_euclid(Mi);
    RatMat M(Mi);
    // Orthogonality and the recombination identity b_i = b*_i + sum mu b*_j.
    for (int i = 0; i < 4; ++i) {
      CHECK(gs.norms[i] > 0);
      CHECK(gs.norms[i] == dot(gs.bstar.row_vec(i), gs.bstar.row_vec(i)));
      for (int j = 0; j < i; ++j)
        CHECK(dot(gs.bstar.row_vec(i), gs.bstar.row_vec(j)) == 0);
      RatVec recon = gs.bstar.row_vec(i);
      for (int j = 0; j < i; ++j)
        for (int c = 0; c < 4; ++c) recon[c] += gs.mu[i][j] * gs.bstar(j, c);
      CHECK(recon == M.row_vec(i));
    }
    // Principal-determinant oracle: the running norm product equals the
    // principal Gram determinant computed by the independent Bareiss route.
    IntMat g = gram_of(Mi);
    BigRat prod = 1;
    for (int i = 0; i < 4; ++i) {
      prod *= gs.norms[i];
      IntMat sub(i + 1, i + 1);
      for (int a = 0; a <= i; ++a)
        for (int c = 0; c <= i; ++c) sub(a, c) = g(a, c);
      CHECK(prod == BigRat(det_exact(sub)));
    }
  }

  // limit cuts the computation off cleanly.
  IntMat Mi = rnd(5, 3, 4, 90);
  EuclidGS gs2 = gram_schmidt_euclid(Mi, 2);
  CHECK(gs2.norms.size() == 2);
  CHECK(gs2.bstar.rows() == 2);

  CHECK_THROWS_AS(gram_schmidt_euclid(IntMat::from_rows({{1, 2}, {2, 4}})), internal_error);
  CHECK_THROWS_AS(gram_schmidt_euclid(IntMat::from_rows({{0, 0}})), internal_error);
}
