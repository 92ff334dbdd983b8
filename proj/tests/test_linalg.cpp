#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "mmdescend/matrix.hpp"
#include "mmdescend/scheme_io.hpp"

using namespace mmdescend;

namespace {
const FieldDesc kGauss{-1};
const FieldDesc kRoot2{2};

ExactMat lit(const std::string& s, FieldDesc f = kGauss) {
  return parse_matrix_literal(s, f);
}

ExactMat random_mat(std::mt19937& rng, int n, FieldDesc f) {
  std::uniform_int_distribution<long> coef(-5, 5);
  ExactMat A(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A.at(i, j) = QElem(Rat(coef(rng)), Rat(coef(rng)), f);
  return A;
}
}  // namespace

TEST_CASE("basic matrix operations") {
  ExactMat A = lit("[[1,2],[3,4]]");
  ExactMat B = lit("[[0,1],[1,0]]");
  CHECK(A * B == lit("[[2,1],[4,3]]"));
  CHECK(A + B == lit("[[1,3],[4,4]]"));
  CHECK(A - B == lit("[[1,1],[2,4]]"));
  CHECK(A.transpose() == lit("[[1,3],[2,4]]"));
  CHECK(A.trace() == QElem::rational(Rat(5), kGauss));
  CHECK(QElem::surd(kGauss) * B == lit("[[0,i],[i,0]]"));
  CHECK(ExactMat::identity(2, kGauss) * A == A);
}

TEST_CASE("rectangular multiplication shape checks") {
  ExactMat A = lit("[[1,2,3],[4,5,6]]");   // 2x3
  ExactMat B = lit("[[1],[0],[-1]]");      // 3x1
  ExactMat C = A * B;
  CHECK(C.rows() == 2);
  CHECK(C.cols() == 1);
  CHECK(C == lit("[[-2],[-2]]"));
  CHECK_THROWS_AS((void)(B * A), dimension_error);
  CHECK_THROWS_AS((void)(A + B), dimension_error);
}

TEST_CASE("exact inverse") {
  ExactMat A = lit("[[1,i],[0,1]]");
  CHECK(matinv(A) == lit("[[1,-i],[0,1]]"));
  CHECK(matinv(A) * A == ExactMat::identity(2, kGauss));

  // The 4x4 complex example inverse is exact.
  ExactMat X = lit("[[1,0,0,1],[0,1,i,0],[0,i,1,0],[i,0,0,-i]]");
  ExactMat Xi = matinv(X);
  CHECK(X * Xi == ExactMat::identity(4, kGauss));
  CHECK(Xi * X == ExactMat::identity(4, kGauss));

  ExactMat S = lit("[[1,2],[2,4]]");
  CHECK_THROWS_AS(matinv(S), singular_matrix_error);
  try {
    matinv(S);
  } catch (const singular_matrix_error& e) {
    CHECK(e.rank_found == 1);
  }
}

TEST_CASE("rref and rank") {
  ExactMat A = lit("[[1,2,3],[2,4,6],[1,0,1]]");
  std::vector<int> pivots;
  ExactMat R = rref(A, &pivots);
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(rank(A) == 2);
  CHECK(R == lit("[[1,0,1],[0,1,1],[0,0,0]]"));
  CHECK(rank(ExactMat::identity(3, kRoot2)) == 3);
  CHECK(rank(ExactMat(2, 2, kGauss)) == 0);
}

TEST_CASE("nullspace") {
  ExactMat A = lit("[[1,2,3],[2,4,6],[1,0,1]]");
  auto ns = nullspace(A);
  REQUIRE(ns.size() == 1);
  // Kernel vector for free column 2: (-1, -1, 1).
  CHECK(ns[0][0] == QElem::rational(Rat(-1), kGauss));
  CHECK(ns[0][1] == QElem::rational(Rat(-1), kGauss));
  CHECK(ns[0][2] == QElem::one(kGauss));
  CHECK(nullspace(ExactMat::identity(3, kGauss)).empty());
  CHECK(nullspace(ExactMat(2, 3, kGauss)).size() == 3);
}

TEST_CASE("randomized inverse properties") {
  std::mt19937 rng(99);
  for (const auto& f : {kGauss, kRoot2}) {
    int done = 0;
    while (done < 20) {
      ExactMat A = random_mat(rng, 3, f);
      ExactMat Ai(3, 3, f);
      try {
        Ai = matinv(A);
      } catch (const singular_matrix_error&) {
        continue;
      }
      ++done;
      CHECK(A * Ai == ExactMat::identity(3, f));
      // Conjugation commutes with inversion.
      CHECK(matinv(matconj(A)) == matconj(Ai));
      // (AB)^-1 = B^-1 A^-1 whenever B is invertible too.
      try {
        ExactMat B = random_mat(rng, 3, f);
        ExactMat Bi = matinv(B);
        CHECK(matinv(A * B) == Bi * Ai);
      } catch (const singular_matrix_error&) {
      }
    }
  }
}

TEST_CASE("rank over the base field") {
  // Over Q[i], {(1,0), (i,0)} are Q-independent although proportional
  // over the extension.
  std::vector<std::vector<QElem>> vs{
      {QElem::one(kGauss), QElem::zero(kGauss)},
      {QElem::surd(kGauss), QElem::zero(kGauss)},
      {QElem(Rat(1), Rat(1), kGauss), QElem::zero(kGauss)},  // dependent
      {QElem::zero(kGauss), QElem::one(kGauss)}};
  std::vector<int> sel;
  CHECK(rank_over_base(vs, &sel) == 3);
  CHECK(sel == std::vector<int>{0, 1, 3});
}

TEST_CASE("matrix literal parsing") {
  CHECK_THROWS_AS(lit("[[1,2],[3]]"), parse_error);
  CHECK_THROWS_AS(lit("[1,2]"), parse_error);
  CHECK_THROWS_AS(lit(""), parse_error);
  ExactMat A = lit("[[1/2, -i], [0, 1+i]]");
  CHECK(matrix_to_literal(A) == "[[1/2,-i],[0,1+i]]");
  CHECK(lit(matrix_to_literal(A)) == A);
}
