#include "mmdescend/scheme.hpp"

#include <sstream>

namespace mmdescend {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::OPQ: return "OPQ";
    case Variant::PQO: return "PQO";
    case Variant::QOP: return "QOP";
  }
  return "?";
}

std::optional<Variant> variant_from_name(std::string_view s) {
  if (s == "OPQ") return Variant::OPQ;
  if (s == "PQO") return Variant::PQO;
  if (s == "QOP") return Variant::QOP;
  return std::nullopt;
}

std::string BrentReport::to_string() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << "violation at (i1,j1,j2,k1,k2,i2)=(" << violation[0];
  for (int i = 1; i < 6; ++i) os << "," << violation[i];
  os << ") with sum " << entry_to_string(*sum);
  return os.str();
}

std::string RingDesc::to_string() const {
  switch (kind) {
    case Kind::Z:
      return "Z";
    case Kind::ZInv:
      return "Z[1/" + lcm_den.get_str() + "]";
    case Kind::QExt:
      return d == -1 ? "Q[i]" : "Q[sqrt(" + std::to_string(d) + ")]";
  }
  return "?";
}

Scheme::Scheme(int m, int n, int p, std::vector<Triple> triples,
               FieldDesc field)
    : m_(m), n_(n), p_(p), triples_(std::move(triples)), field_(field) {
  if (m <= 0 || n <= 0 || p <= 0) throw dimension_error("nonpositive scheme dimension");
  if (triples_.empty()) throw dimension_error("scheme must have rank >= 1");
  for (const auto& t : triples_) {
    if (t.O.rows() != m || t.O.cols() != n || t.P.rows() != n ||
        t.P.cols() != p || t.Q.rows() != p || t.Q.cols() != m)
      throw dimension_error("triple factor shape mismatch");
    if (t.O.field() != field || t.P.field() != field || t.Q.field() != field)
      throw field_mismatch_error("triple factor field mismatch");
  }
}

bool Scheme::operator==(const Scheme& o) const {
  if (m_ != o.m_ || n_ != o.n_ || p_ != o.p_ || field_ != o.field_ ||
      triples_.size() != o.triples_.size())
    return false;
  for (size_t j = 0; j < triples_.size(); ++j)
    if (triples_[j].O != o.triples_[j].O || triples_[j].P != o.triples_[j].P ||
        triples_[j].Q != o.triples_[j].Q)
      return false;
  return true;
}

bool Scheme::is_rational() const {
  for (const auto& t : triples_)
    if (!t.O.is_rational() || !t.P.is_rational() || !t.Q.is_rational())
      return false;
  return true;
}

TransformTriple::TransformTriple(ExactMat X_, ExactMat Y_, ExactMat Z_)
    : X(std::move(X_)), Y(std::move(Y_)), Z(std::move(Z_)) {
  matinv(X);  // throws singular_matrix_error if not invertible
  matinv(Y);
  matinv(Z);
}

BrentReport brent_verify(const Scheme& s) {
  const int m = s.m(), n = s.n(), p = s.p();
  const QElem one = QElem::one(s.field());
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int j2 = 0; j2 < n; ++j2)
        for (int k1 = 0; k1 < p; ++k1)
          for (int k2 = 0; k2 < p; ++k2)
            for (int i2 = 0; i2 < m; ++i2) {
              QElem sum = QElem::zero(s.field());
              for (const auto& t : s.triples())
                sum = sum + t.O.at(i1, j1) * t.P.at(j2, k1) * t.Q.at(k2, i2);
              bool delta = i1 == i2 && j1 == j2 && k1 == k2;
              if ((delta && sum != one) || (!delta && !sum.is_zero())) {
                BrentReport r;
                r.ok = false;
                r.violation = {i1 + 1, j1 + 1, j2 + 1, k1 + 1, k2 + 1, i2 + 1};
                r.sum = sum;
                return r;
              }
            }
  return BrentReport{};
}

EncodingMatrices to_encoding(const Scheme& s) {
  const int m = s.m(), n = s.n(), p = s.p(), r = s.rank();
  ExactMat U(r, m * n, s.field()), V(r, n * p, s.field()),
      W(r, p * m, s.field());
  for (int j = 0; j < r; ++j) {
    const Triple& t = s.triple(j);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < n; ++b) U.at(j, a * n + b) = t.O.at(a, b);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < p; ++b) V.at(j, a * p + b) = t.P.at(a, b);
    ExactMat Qt = t.Q.transpose();  // m x p
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < p; ++b) W.at(j, a * p + b) = Qt.at(a, b);
  }
  return EncodingMatrices{std::move(U), std::move(V), std::move(W)};
}

Scheme from_encoding(const EncodingMatrices& e, int m, int n, int p) {
  const int r = e.U.rows();
  if (e.V.rows() != r || e.W.rows() != r)
    throw dimension_error("encoding matrices row-count mismatch");
  if (e.U.cols() != m * n || e.V.cols() != n * p || e.W.cols() != p * m)
    throw dimension_error("encoding matrices column-count mismatch");
  FieldDesc f = e.U.field();
  std::vector<Triple> triples;
  triples.reserve(r);
  for (int j = 0; j < r; ++j) {
    ExactMat O(m, n, f), P(n, p, f), Qt(m, p, f);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < n; ++b) O.at(a, b) = e.U.at(j, a * n + b);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < p; ++b) P.at(a, b) = e.V.at(j, a * p + b);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < p; ++b) Qt.at(a, b) = e.W.at(j, a * p + b);
    triples.push_back(Triple{std::move(O), std::move(P), Qt.transpose()});
  }
  return Scheme(m, n, p, std::move(triples), f);
}

Scheme apply_transform(const Scheme& s, const TransformTriple& t) {
  if (t.X.rows() != s.m() || t.Y.rows() != s.n() || t.Z.rows() != s.p())
    throw dimension_error("transform size does not match scheme dims");
  ExactMat Yi = matinv(t.Y), Zi = matinv(t.Z), Xi = matinv(t.X);
  std::vector<Triple> out;
  out.reserve(s.rank());
  for (const auto& tr : s.triples())
    out.push_back(Triple{t.X * tr.O * Yi, t.Y * tr.P * Zi, t.Z * tr.Q * Xi});
  return Scheme(s.m(), s.n(), s.p(), std::move(out), s.field());
}

Scheme cyclic_shift(const Scheme& s) {
  std::vector<Triple> out;
  out.reserve(s.rank());
  for (const auto& t : s.triples()) out.push_back(Triple{t.P, t.Q, t.O});
  return Scheme(s.n(), s.p(), s.m(), std::move(out), s.field());
}

Scheme transpose_action(const Scheme& s) {
  std::vector<Triple> out;
  out.reserve(s.rank());
  for (const auto& t : s.triples())
    out.push_back(Triple{t.P.transpose(), t.O.transpose(), t.Q.transpose()});
  return Scheme(s.p(), s.n(), s.m(), std::move(out), s.field());
}

Scheme scalar_redistribute(const Scheme& s, int j, const QElem& alpha,
                           Slot from, Slot to) {
  if (alpha.is_zero()) throw division_by_zero_error("redistribution by zero");
  if (j < 0 || j >= s.rank()) throw dimension_error("triple index out of range");
  if (from == to) throw std::invalid_argument("redistribute needs two slots");
  std::vector<Triple> out = s.triples();
  auto& t = out[j];
  auto factor = [&](Slot sl) -> ExactMat& {
    switch (sl) {
      case Slot::O: return t.O;
      case Slot::P: return t.P;
      default: return t.Q;
    }
  };
  factor(from) = alpha * factor(from);
  factor(to) = qinv(alpha) * factor(to);
  return Scheme(s.m(), s.n(), s.p(), std::move(out), s.field());
}

std::vector<ExactMat> products(const Scheme& s, Variant v) {
  std::vector<ExactMat> out;
  out.reserve(s.rank());
  for (const auto& t : s.triples()) {
    switch (v) {
      case Variant::OPQ: out.push_back(t.O * t.P * t.Q); break;
      case Variant::PQO: out.push_back(t.P * t.Q * t.O); break;
      case Variant::QOP: out.push_back(t.Q * t.O * t.P); break;
    }
  }
  return out;
}

RingDesc detect_ring(const Scheme& s) {
  if (!s.is_rational()) {
    RingDesc r;
    r.kind = RingDesc::Kind::QExt;
    r.d = s.field().d;
    return r;
  }
  Int L = 1;
  for (const auto& t : s.triples())
    for (const ExactMat* M : {&t.O, &t.P, &t.Q})
      for (int i = 0; i < M->rows(); ++i)
        for (int j = 0; j < M->cols(); ++j)
          L = int_lcm(L, M->at(i, j).a().get_den());
  RingDesc r;
  if (L == 1) {
    r.kind = RingDesc::Kind::Z;
  } else {
    r.kind = RingDesc::Kind::ZInv;
    r.lcm_den = L;
    if (auto f = factorize(L)) r.primes = *f;
  }
  return r;
}

Scheme standard_scheme(int n, int m, int p, FieldDesc field) {
  std::vector<Triple> triples;
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = 0; j2 < m; ++j2)
      for (int j3 = 0; j3 < p; ++j3) {
        ExactMat O(n, m, field), P(m, p, field), Q(p, n, field);
        O.at(j1, j2) = QElem::one(field);
        P.at(j2, j3) = QElem::one(field);
        Q.at(j3, j1) = QElem::one(field);
        triples.push_back(Triple{std::move(O), std::move(P), std::move(Q)});
      }
  return Scheme(n, m, p, std::move(triples), field);
}

Scheme strassen_scheme(FieldDesc field) {
  // The seven summands of the <2,2,2,7> tensor.
  const int O[7][4] = {{1, 0, 0, 1}, {0, 0, 1, 1},  {1, 0, 0, 0}, {0, 0, 0, 1},
                       {1, 1, 0, 0}, {-1, 0, 1, 0}, {0, 1, 0, -1}};
  const int P[7][4] = {{1, 0, 0, 1},  {1, 0, 0, 0}, {0, 1, 0, -1}, {-1, 0, 1, 0},
                       {0, 0, 0, 1},  {1, 1, 0, 0}, {0, 0, 1, 1}};
  const int Q[7][4] = {{1, 0, 0, 1},  {0, 1, 0, -1}, {0, 0, 1, 1}, {1, 1, 0, 0},
                       {-1, 0, 1, 0}, {0, 0, 0, 1},  {1, 0, 0, 0}};
  std::vector<Triple> triples;
  for (int j = 0; j < 7; ++j) {
    ExactMat o(2, 2, field), pm(2, 2, field), q(2, 2, field);
    for (int k = 0; k < 4; ++k) {
      o.at(k / 2, k % 2) = QElem::rational(Rat(O[j][k]), field);
      pm.at(k / 2, k % 2) = QElem::rational(Rat(P[j][k]), field);
      q.at(k / 2, k % 2) = QElem::rational(Rat(Q[j][k]), field);
    }
    triples.push_back(Triple{std::move(o), std::move(pm), std::move(q)});
  }
  return Scheme(2, 2, 2, std::move(triples), field);
}

}  // namespace mmdescend
