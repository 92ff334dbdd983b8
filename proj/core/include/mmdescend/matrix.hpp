#pragma once

#include <span>
#include <vector>

#include "mmdescend/qelem.hpp"

namespace mmdescend {

// Dense matrix over Q[sqrt(d)], immutable by convention after construction
// (all operations below are pure). Row-major storage.
class ExactMat {
 public:
  ExactMat(int rows, int cols, FieldDesc field);
  static ExactMat identity(int n, FieldDesc field);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldDesc field() const { return field_; }

  QElem& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const QElem& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const ExactMat& o) const;
  bool operator!=(const ExactMat& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_rational() const;  // every entry has zero sqrt(d)-part
  bool is_square() const { return rows_ == cols_; }

  QElem trace() const;
  ExactMat transpose() const;

  // Row j as a vector.
  std::vector<QElem> row(int i) const;

 private:
  int rows_, cols_;
  FieldDesc field_;
  std::vector<QElem> e_;
};

ExactMat operator+(const ExactMat& A, const ExactMat& B);
ExactMat operator-(const ExactMat& A, const ExactMat& B);
ExactMat operator*(const ExactMat& A, const ExactMat& B);  // matmul
ExactMat operator*(const QElem& c, const ExactMat& A);

ExactMat matconj(const ExactMat& A);  // entrywise conjugate

// Exact inverse by Gaussian elimination, first nonzero pivot per column.
// Throws singular_matrix_error (carrying the rank found) when singular.
ExactMat matinv(const ExactMat& A);

// Reduced row echelon form; pivot column indices appended to *pivots.
ExactMat rref(const ExactMat& A, std::vector<int>* pivots = nullptr);

int rank(const ExactMat& A);

// Basis of the right kernel {v : A v = 0}, in the reduced echelon
// parameterization (one vector per free column, ascending).
std::vector<std::vector<QElem>> nullspace(const ExactMat& A);

// Q-rank of Q[sqrt(d)]-vectors viewed as length-2n vectors over Q
// (a-parts then b-parts). Greedy maximal independent subset in input order;
// indices of the selected vectors are appended to *selected.
int rank_over_base(std::span<const std::vector<QElem>> vectors,
                   std::vector<int>* selected = nullptr);

}  // namespace mmdescend
