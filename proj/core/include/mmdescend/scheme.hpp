#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mmdescend/matrix.hpp"

namespace mmdescend {

// One summand O_j (x) P_j (x) Q_j of a bilinear scheme.
struct Triple {
  ExactMat O, P, Q;
};

enum class Variant { OPQ, PQO, QOP };
enum class Slot { O, P, Q };

const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view s);

// Result of Brent verification. Indices are 1-based (i1,j1,j2,k1,k2,i2).
struct BrentReport {
  bool ok = true;
  std::array<int, 6> violation{};  // first violating index tuple
  std::optional<QElem> sum;        // the offending sum
  std::string to_string() const;
};

// Detected coefficient ring of a scheme.
struct RingDesc {
  enum class Kind { Z, ZInv, QExt } kind;
  Int lcm_den = 1;                          // L for Z[1/L]
  std::vector<std::pair<Int, int>> primes;  // factorization of L
  long long d = -1;                         // for QExt
  bool is_subring_of_q() const { return kind != Kind::QExt; }
  std::string to_string() const;
};

// An <m,n,p,r> bilinear matrix-multiplication scheme:
// r triples (O_j: m x n, P_j: n x p, Q_j: p x m) over Q[sqrt(d)].
class Scheme {
 public:
  Scheme(int m, int n, int p, std::vector<Triple> triples, FieldDesc field);

  int m() const { return m_; }
  int n() const { return n_; }
  int p() const { return p_; }
  int rank() const { return static_cast<int>(triples_.size()); }
  FieldDesc field() const { return field_; }
  const std::vector<Triple>& triples() const { return triples_; }
  const Triple& triple(int j) const { return triples_[j]; }

  bool operator==(const Scheme& o) const;
  bool is_rational() const;

 private:
  int m_, n_, p_;
  std::vector<Triple> triples_;
  FieldDesc field_;
};

// Encoding matrices: row j of U is vec(O_j), of V is vec(P_j), of W is
// vec(Q_j^T), all row-major.
struct EncodingMatrices {
  ExactMat U, V, W;
};

// Invertible sandwich transform (X: m x m, Y: n x n, Z: p x p).
// Invertibility is checked at construction.
struct TransformTriple {
  ExactMat X, Y, Z;
  TransformTriple(ExactMat X_, ExactMat Y_, ExactMat Z_);
};

// Checks the Brent equations
//   sum_t O_t(i1,j1) P_t(j2,k1) Q_t(k2,i2) = delta delta delta.
// Loop order (i1,j1,j2,k1,k2,i2); the first violation is reported.
BrentReport brent_verify(const Scheme& s);

EncodingMatrices to_encoding(const Scheme& s);
Scheme from_encoding(const EncodingMatrices& e, int m, int n, int p);

// O_j -> X O_j Y^-1, P_j -> Y P_j Z^-1, Q_j -> Z Q_j X^-1.
Scheme apply_transform(const Scheme& s, const TransformTriple& t);

// (O,P,Q) -> (P,Q,O); an <m,n,p,r> scheme becomes <n,p,m,r>.
Scheme cyclic_shift(const Scheme& s);

// (O,P,Q) -> (P^T,O^T,Q^T); an <m,n,p,r> scheme becomes <p,n,m,r>.
Scheme transpose_action(const Scheme& s);

// Multiplies the `from` factor of triple j by alpha and the `to` factor
// by alpha^-1; the tensor is unchanged.
Scheme scalar_redistribute(const Scheme& s, int j, const QElem& alpha,
                           Slot from, Slot to);

// M_j = O_j P_j Q_j (m x m), P_j Q_j O_j (n x n) or Q_j O_j P_j (p x p).
std::vector<ExactMat> products(const Scheme& s, Variant v);

RingDesc detect_ring(const Scheme& s);

// The standard <n,m,p> basis tensor: sum E_{j1 j2} (x) E_{j2 j3} (x) E_{j3 j1}.
Scheme standard_scheme(int n, int m, int p, FieldDesc field);

// Strassen's <2,2,2,7> scheme (bundled reference fixture).
Scheme strassen_scheme(FieldDesc field);

}  // namespace mmdescend
