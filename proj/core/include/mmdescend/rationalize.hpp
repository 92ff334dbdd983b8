#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmdescend/scheme.hpp"

namespace mmdescend {

// Field-descent pipeline: given a scheme over Q[sqrt(d)], decide whether an
// equivalent scheme over Q exists under sandwich transforms, and construct
// it when it does. The certificate of each non-success outcome is sound:
// NoSolution is only reported on provable grounds.

struct NormalizeDiagnostics {
  // beta from the scalar test B * conj(B) = beta * I of the last candidate
  // that passed it (the norm equation target is 1/beta).
  std::optional<Rat> beta;
  std::vector<std::string> strategies_tried;
  // Set when every candidate in a one-dimensional family fails the scalar
  // test itself (provably empty admissible set).
  bool structural_failure = false;
  long candidates_tested = 0;
};

struct IntertwinerSolution {
  enum class Uniqueness { Empty, UniqueUpToUnitScalar, MultiDimensional };
  std::vector<ExactMat> basis;          // nullspace of the linear system
  std::optional<ExactMat> normalized;   // S with S * conj(S) = I
  Uniqueness uniqueness = Uniqueness::Empty;
  NormalizeDiagnostics diagnostics;
};

struct DescendOptions {
  // Height bound H for the enumerative norm-equation strategy.
  int height = 50;
  // Coefficient bound C for combinations of multi-dimensional bases.
  int comb = 2;
};

// Builds the linear system {S M_j = conj(M_j) S for all j} over n^2
// unknowns (S flattened row-major), returns its nullspace basis, then
// attempts S-normalization.
IntertwinerSolution solve_intertwiner(const std::vector<ExactMat>& Ms,
                                      const DescendOptions& opt = {});

// Searches for S = alpha * B with S * conj(S) = I among the given nullspace
// basis (single elements, then integer combinations bounded by opt.comb).
std::optional<ExactMat> normalize_intertwiner(
    const std::vector<ExactMat>& basis, NormalizeDiagnostics* diag,
    const DescendOptions& opt = {});

enum class CandidateOrder { Forward, Reversed };

// Assembles X from S (with S * conj(S) = I): stacks n Q-independent fixed
// vectors of the anti-linear involution f(x) = conj(x) * S, generated as
// (e_k + f(e_k))/2 followed by (e_k - f(e_k)) * sqrt(d)/2.
// Guarantees conj(X) * S = X and X invertible.
ExactMat fixed_space(const ExactMat& S,
                     CandidateOrder order = CandidateOrder::Forward);

struct DescentCertificate {
  std::string variant;  // cyclic variant the certificate refers to ("" if n/a)
  int nullspace_dim = -1;
  std::optional<Rat> beta;
  std::vector<std::string> strategies_tried;
  std::optional<int> anomaly_index;  // 1-based triple index from post_check
  std::string message;
};

struct DescentOutcome {
  enum class Status { Success, NoSolution, Inconclusive };
  Status status;
  std::optional<TransformTriple> transform;
  std::optional<Scheme> result_scheme;
  DescentCertificate certificate;
};

// Full pipeline over the three cyclic variants (OPQ -> X, PQO -> Y,
// QOP -> Z), in that order, short-circuiting on NoSolution.
DescentOutcome descend(const Scheme& s, const DescendOptions& opt = {});

enum class PostCheckStatus { Clean, ScalarAdjustable, Anomalous };

struct PostCheckResult {
  PostCheckStatus status;
  std::optional<Scheme> adjusted;  // rational scheme, when not anomalous
  int anomaly_index = -1;          // 1-based offending triple
};

// Classifies a transformed scheme: fully rational triples are clean;
// triples of the form (a1 R1, a2 R2, a3 R3) with a1 a2 a3 rational are
// scalar-adjustable (redistribution lands them in Q); anything else is
// anomalous.
PostCheckResult post_check(const Scheme& s);

// JSON report for CLI and test consumption.
std::string outcome_to_json(const DescentOutcome& o);

}  // namespace mmdescend
