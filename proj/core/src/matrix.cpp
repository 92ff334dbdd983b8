#include "mmdescend/matrix.hpp"

namespace mmdescend {

ExactMat::ExactMat(int rows, int cols, FieldDesc field)
    : rows_(rows), cols_(cols), field_(field) {
  if (rows < 0 || cols < 0) throw dimension_error("negative matrix dimension");
  e_.assign(static_cast<size_t>(rows) * cols, QElem::zero(field));
}

ExactMat ExactMat::identity(int n, FieldDesc field) {
  ExactMat I(n, n, field);
  for (int i = 0; i < n; ++i) I.at(i, i) = QElem::one(field);
  return I;
}

bool ExactMat::operator==(const ExactMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  return e_ == o.e_;
}

bool ExactMat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool ExactMat::is_rational() const {
  for (const auto& x : e_)
    if (!x.is_rational()) return false;
  return true;
}

QElem ExactMat::trace() const {
  if (!is_square()) throw dimension_error("trace of non-square matrix");
  QElem t = QElem::zero(field_);
  for (int i = 0; i < rows_; ++i) t = t + at(i, i);
  return t;
}

ExactMat ExactMat::transpose() const {
  ExactMat T(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
  return T;
}

std::vector<QElem> ExactMat::row(int i) const {
  std::vector<QElem> r;
  r.reserve(cols_);
  for (int j = 0; j < cols_; ++j) r.push_back(at(i, j));
  return r;
}

namespace {

void require_same_shape(const ExactMat& A, const ExactMat& B) {
  if (A.field() != B.field())
    throw field_mismatch_error("matrices over different fields");
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw dimension_error("matrix shape mismatch");
}

}  // namespace

ExactMat operator+(const ExactMat& A, const ExactMat& B) {
  require_same_shape(A, B);
  ExactMat C(A.rows(), A.cols(), A.field());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) C.at(i, j) = A.at(i, j) + B.at(i, j);
  return C;
}

ExactMat operator-(const ExactMat& A, const ExactMat& B) {
  require_same_shape(A, B);
  ExactMat C(A.rows(), A.cols(), A.field());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) C.at(i, j) = A.at(i, j) - B.at(i, j);
  return C;
}

ExactMat operator*(const ExactMat& A, const ExactMat& B) {
  if (A.field() != B.field())
    throw field_mismatch_error("matrices over different fields");
  if (A.cols() != B.rows()) throw dimension_error("matmul shape mismatch");
  ExactMat C(A.rows(), B.cols(), A.field());
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      const QElem& a = A.at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < B.cols(); ++j)
        C.at(i, j) = C.at(i, j) + a * B.at(k, j);
    }
  return C;
}

ExactMat operator*(const QElem& c, const ExactMat& A) {
  ExactMat C(A.rows(), A.cols(), A.field());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) C.at(i, j) = c * A.at(i, j);
  return C;
}

ExactMat matconj(const ExactMat& A) {
  ExactMat C(A.rows(), A.cols(), A.field());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) C.at(i, j) = qconj(A.at(i, j));
  return C;
}

ExactMat matinv(const ExactMat& A) {
  if (!A.is_square()) throw dimension_error("inverse of non-square matrix");
  const int n = A.rows();
  ExactMat M = A;
  ExactMat I = ExactMat::identity(n, A.field());
  int r = 0;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (!M.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw singular_matrix_error(r);
    if (piv != r)
      for (int j = 0; j < n; ++j) {
        std::swap(M.at(piv, j), M.at(r, j));
        std::swap(I.at(piv, j), I.at(r, j));
      }
    QElem inv_p = qinv(M.at(r, col));
    for (int j = 0; j < n; ++j) {
      M.at(r, j) = inv_p * M.at(r, j);
      I.at(r, j) = inv_p * I.at(r, j);
    }
    for (int i = 0; i < n; ++i) {
      if (i == r || M.at(i, col).is_zero()) continue;
      QElem f = M.at(i, col);
      for (int j = 0; j < n; ++j) {
        M.at(i, j) = M.at(i, j) - f * M.at(r, j);
        I.at(i, j) = I.at(i, j) - f * I.at(r, j);
      }
    }
    ++r;
  }
  return I;
}

ExactMat rref(const ExactMat& A, std::vector<int>* pivots) {
  ExactMat M = A;
  const int m = M.rows(), n = M.cols();
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (!M.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(r, j));
    QElem inv_p = qinv(M.at(r, col));
    for (int j = 0; j < n; ++j) M.at(r, j) = inv_p * M.at(r, j);
    for (int i = 0; i < m; ++i) {
      if (i == r || M.at(i, col).is_zero()) continue;
      QElem f = M.at(i, col);
      for (int j = 0; j < n; ++j) M.at(i, j) = M.at(i, j) - f * M.at(r, j);
    }
    if (pivots) pivots->push_back(col);
    ++r;
  }
  return M;
}

int rank(const ExactMat& A) {
  std::vector<int> pivots;
  rref(A, &pivots);
  return static_cast<int>(pivots.size());
}

std::vector<std::vector<QElem>> nullspace(const ExactMat& A) {
  std::vector<int> pivots;
  ExactMat R = rref(A, &pivots);
  const int n = A.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<QElem>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<QElem> v(n, QElem::zero(A.field()));
    v[free] = QElem::one(A.field());
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -R.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_over_base(std::span<const std::vector<QElem>> vectors,
                   std::vector<int>* selected) {
  if (vectors.empty()) return 0;
  const size_t n = vectors.front().size();
  // Reduced rational rows with their leading-column positions.
  std::vector<std::pair<size_t, std::vector<Rat>>> basis;

  int count = 0;
  for (size_t idx = 0; idx < vectors.size(); ++idx) {
    const auto& v = vectors[idx];
    if (v.size() != n) throw dimension_error("rank_over_base length mismatch");
    std::vector<Rat> w(2 * n);
    for (size_t k = 0; k < n; ++k) {
      w[k] = v[k].a();
      w[n + k] = v[k].b();
    }
    for (const auto& [lead, row] : basis) {
      if (w[lead] == 0) continue;
      Rat f = w[lead];
      for (size_t k = 0; k < 2 * n; ++k) w[k] -= f * row[k];
    }
    size_t lead = 2 * n;
    for (size_t k = 0; k < 2 * n; ++k)
      if (w[k] != 0) {
        lead = k;
        break;
      }
    if (lead == 2 * n) continue;  // dependent
    Rat inv = 1 / w[lead];
    for (size_t k = 0; k < 2 * n; ++k) w[k] *= inv;
    basis.emplace_back(lead, std::move(w));
    if (selected) selected->push_back(static_cast<int>(idx));
    ++count;
  }
  return count;
}

}  // namespace mmdescend
