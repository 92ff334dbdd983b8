#include "mmdescend/rationalize.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "mmdescend/scheme_io.hpp"

namespace mmdescend {

namespace {

// ---- Norm equation N(alpha) = alpha * conj(alpha) = c over Q[sqrt(d)] ----

struct NormSolution {
  Rat a, b;  // alpha = a + b*sqrt(d)
};

// x^2 + y^2 = m over the integers, via factorization into Gaussian primes.
// Complete for m >= 1: returns nullopt only when no representation exists
// (a prime = 3 mod 4 with odd exponent) or the factorization bailed out.
std::optional<std::pair<Int, Int>> two_squares(const Int& m) {
  auto fac = factorize(m);
  if (!fac) return std::nullopt;
  Int x = 1, y = 0;
  auto gmul = [&](const Int& u, const Int& v) {
    Int nx = x * u - y * v;
    Int ny = x * v + y * u;
    x = nx;
    y = ny;
  };
  for (const auto& [p, e] : *fac) {
    if (p == 2) {
      for (int k = 0; k < e; ++k) gmul(1, 1);
    } else if (p % 4 == 1) {
      // find u^2 + v^2 = p
      Int u = 1, v;
      bool found = false;
      for (; u * u * 2 <= p; ++u) {
        Int rem = p - u * u;
        if (mpz_perfect_square_p(rem.get_mpz_t())) {
          mpz_sqrt(v.get_mpz_t(), rem.get_mpz_t());
          found = true;
          break;
        }
      }
      if (!found) return std::nullopt;  // p prime = 1 mod 4: cannot happen
      for (int k = 0; k < e; ++k) gmul(u, v);
    } else {
      if (e % 2 != 0) return std::nullopt;
      for (int k = 0; k < e / 2; ++k) gmul(p, 0);
    }
  }
  return std::make_pair(x < 0 ? -x : x, y < 0 ? -y : y);
}

Rat mkrat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::optional<NormSolution> solve_norm_equation(
    const Rat& c, FieldDesc field, int height,
    std::vector<std::string>* strategies) {
  const long long d = field.d;

  // (i) alpha rational: alpha^2 = c
  strategies->push_back("rational-sqrt");
  if (auto r = rat_sqrt(c)) return NormSolution{*r, Rat(0)};

  // (ii) alpha = t*sqrt(d): -d t^2 = c
  strategies->push_back("surd-multiple");
  if (auto t = rat_sqrt(-c / Rat(static_cast<long>(d)))) return NormSolution{Rat(0), *t};

  // (iii) exact two-squares decomposition when d = -1 (complete)
  if (d == -1) {
    strategies->push_back("gaussian-factorization");
    if (c > 0) {
      Int u = c.get_num(), v = c.get_den();
      if (auto xy = two_squares(u * v))
        return NormSolution{mkrat(xy->first, v), mkrat(xy->second, v)};
    }
    return std::nullopt;  // complete for d = -1: other strategies add nothing
  }

  // (iv) height-bounded search: reduce c = s^2 * c0 with c0 a squarefree
  // integer, then look for a^2 - d b^2 = c0 e^2 with |a|,|b|,e <= H.
  strategies->push_back("height-bounded");
  Int u = c.get_num(), v = c.get_den();
  Int w = u * v;  // c = w / v^2
  bool neg = w < 0;
  auto fac = factorize(neg ? -w : w);
  if (!fac) return std::nullopt;
  Int c0 = neg ? -1 : 1, t = 1;
  for (const auto& [p, e] : *fac) {
    for (int k = 0; k < e / 2; ++k) t *= p;
    if (e % 2) c0 *= p;
  }
  Rat s = mkrat(t, v);
  for (Int e = 1; e <= height; ++e)
    for (Int b = 0; b <= height; ++b) {
      Int rhs = c0 * e * e + Int(static_cast<long>(d)) * b * b;
      if (rhs < 0) continue;
      if (!mpz_perfect_square_p(rhs.get_mpz_t())) continue;
      Int a;
      mpz_sqrt(a.get_mpz_t(), rhs.get_mpz_t());
      if (a > height) continue;
      return NormSolution{s * mkrat(a, e), s * mkrat(b, e)};
    }
  return std::nullopt;
}

// B * conj(B) = beta * I with beta rational and nonzero?
std::optional<Rat> scalar_test(const ExactMat& B) {
  ExactMat T = B * matconj(B);
  const int n = T.rows();
  QElem beta = T.at(0, 0);
  if (!beta.is_rational() || beta.is_zero()) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j ? T.at(i, j) != beta : !T.at(i, j).is_zero())
        return std::nullopt;
    }
  return beta.a();
}

std::optional<ExactMat> try_candidate(const ExactMat& B,
                                      NormalizeDiagnostics* diag,
                                      const DescendOptions& opt) {
  ++diag->candidates_tested;
  auto beta = scalar_test(B);
  if (!beta) return std::nullopt;
  diag->beta = *beta;
  Rat target = 1 / *beta;
  auto alpha =
      solve_norm_equation(target, B.field(), opt.height,
                          &diag->strategies_tried);
  if (!alpha) return std::nullopt;
  ExactMat S = QElem(alpha->a, alpha->b, B.field()) * B;
  if (S * matconj(S) != ExactMat::identity(S.rows(), S.field()))
    throw std::logic_error("normalization postcondition failed");
  return S;
}

}  // namespace

std::optional<ExactMat> normalize_intertwiner(
    const std::vector<ExactMat>& basis, NormalizeDiagnostics* diag,
    const DescendOptions& opt) {
  NormalizeDiagnostics local;
  if (!diag) diag = &local;
  if (basis.empty()) return std::nullopt;

  bool any_scalar_ok = false;
  for (const auto& B : basis) {
    if (scalar_test(B)) any_scalar_ok = true;
    if (auto S = try_candidate(B, diag, opt)) return S;
  }

  if (basis.size() == 1) {
    // S = alpha*B scales B*conj(B) by the rational N(alpha) > or < 0, so a
    // failed scalar test rules out the entire one-dimensional family.
    diag->structural_failure = !any_scalar_ok;
    return std::nullopt;
  }

  // Bounded integer combinations of the basis. Coefficient values are
  // tried in the order 0, 1, -1, 2, -2, ...
  std::vector<int> values{0};
  for (int v = 1; v <= opt.comb; ++v) {
    values.push_back(v);
    values.push_back(-v);
  }
  const size_t dim = basis.size();
  const long cap = 200000;
  std::vector<size_t> idx(dim, 0);
  long seen = 0;
  while (true) {
    int nonzero = 0;
    for (size_t k = 0; k < dim; ++k)
      if (idx[k] != 0) ++nonzero;
    if (nonzero >= 2) {  // singletons were already tried above
      ExactMat B(basis[0].rows(), basis[0].cols(), basis[0].field());
      for (size_t k = 0; k < dim; ++k)
        if (idx[k] != 0)
          B = B + QElem::rational(Rat(values[idx[k]]), B.field()) * basis[k];
      if (auto S = try_candidate(B, diag, opt)) return S;
      if (++seen >= cap) break;
    }
    size_t k = dim;
    bool done = true;
    while (k-- > 0) {
      if (++idx[k] < values.size()) {
        done = false;
        break;
      }
      idx[k] = 0;
    }
    if (done) break;
  }
  return std::nullopt;
}

IntertwinerSolution solve_intertwiner(const std::vector<ExactMat>& Ms,
                                      const DescendOptions& opt) {
  if (Ms.empty()) throw dimension_error("empty matrix list");
  const int n = Ms.front().rows();
  FieldDesc f = Ms.front().field();
  for (const auto& M : Ms)
    if (!M.is_square() || M.rows() != n || M.field() != f)
      throw dimension_error("intertwiner inputs must be same-size square");

  // Unknown S flattened row-major: S(p,k) at index p*n + k.
  // Equation rows: for each j and each position (p,q):
  //   sum_k S(p,k) M_j(k,q) - conj(M_j)(p,k) S(k,q) = 0.
  ExactMat A(static_cast<int>(Ms.size()) * n * n, n * n, f);
  int row = 0;
  for (const auto& M : Ms) {
    ExactMat Mc = matconj(M);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q, ++row)
        for (int k = 0; k < n; ++k) {
          A.at(row, p * n + k) = A.at(row, p * n + k) + M.at(k, q);
          A.at(row, k * n + q) = A.at(row, k * n + q) - Mc.at(p, k);
        }
  }

  IntertwinerSolution sol;
  for (const auto& v : nullspace(A)) {
    ExactMat B(n, n, f);
    for (int p = 0; p < n; ++p)
      for (int k = 0; k < n; ++k) B.at(p, k) = v[p * n + k];
    sol.basis.push_back(std::move(B));
  }
  if (sol.basis.empty()) {
    sol.uniqueness = IntertwinerSolution::Uniqueness::Empty;
    return sol;
  }
  sol.uniqueness = sol.basis.size() == 1
                       ? IntertwinerSolution::Uniqueness::UniqueUpToUnitScalar
                       : IntertwinerSolution::Uniqueness::MultiDimensional;
  sol.normalized = normalize_intertwiner(sol.basis, &sol.diagnostics, opt);
  return sol;
}

ExactMat fixed_space(const ExactMat& S, CandidateOrder order) {
  const int n = S.rows();
  FieldDesc fd = S.field();
  if (S * matconj(S) != ExactMat::identity(n, fd))
    throw std::invalid_argument("fixed_space requires S * conj(S) = I");

  auto f = [&](const std::vector<QElem>& x) {
    std::vector<QElem> y(n, QElem::zero(fd));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) y[j] = y[j] + qconj(x[k]) * S.at(k, j);
    return y;
  };

  const QElem half = QElem::rational(Rat(1, 2), fd);
  const QElem half_surd = QElem(Rat(0), Rat(1, 2), fd);  // sqrt(d)/2
  std::vector<std::vector<QElem>> candidates;
  for (int k = 0; k < n; ++k) {
    std::vector<QElem> e(n, QElem::zero(fd));
    e[k] = QElem::one(fd);
    std::vector<QElem> fe = f(e);
    std::vector<QElem> u(n, QElem::zero(fd));
    for (int j = 0; j < n; ++j) u[j] = half * (e[j] + fe[j]);
    candidates.push_back(std::move(u));
  }
  for (int k = 0; k < n; ++k) {
    std::vector<QElem> e(n, QElem::zero(fd));
    e[k] = QElem::one(fd);
    std::vector<QElem> fe = f(e);
    std::vector<QElem> w(n, QElem::zero(fd));
    for (int j = 0; j < n; ++j) w[j] = half_surd * (e[j] - fe[j]);
    candidates.push_back(std::move(w));
  }
  if (order == CandidateOrder::Reversed)
    std::reverse(candidates.begin(), candidates.end());

  std::vector<int> selected;
  int rk = rank_over_base(candidates, &selected);
  if (rk < n)
    throw std::logic_error(
        "fixed space has fewer than n independent candidates; "
        "S violates its precondition");

  ExactMat X(n, n, fd);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) X.at(i, j) = candidates[selected[i]][j];

  if (matconj(X) * S != X)
    throw std::logic_error("fixed_space postcondition conj(X) S = X failed");
  matinv(X);  // invertibility check
  return X;
}

PostCheckResult post_check(const Scheme& s) {
  // factor = alpha * R with R rational; alpha is the first nonzero entry.
  auto scalar_form = [&](const ExactMat& F) -> std::optional<QElem> {
    QElem alpha = QElem::one(F.field());
    bool found = false;
    for (int i = 0; i < F.rows() && !found; ++i)
      for (int j = 0; j < F.cols() && !found; ++j)
        if (!F.at(i, j).is_zero()) {
          alpha = F.at(i, j);
          found = true;
        }
    if (!found) return alpha;  // zero matrix
    QElem inv = qinv(alpha);
    for (int i = 0; i < F.rows(); ++i)
      for (int j = 0; j < F.cols(); ++j)
        if (!(inv * F.at(i, j)).is_rational()) return std::nullopt;
    return alpha;
  };

  std::vector<Triple> out;
  bool adjusted_any = false;
  for (int j = 0; j < s.rank(); ++j) {
    const Triple& t = s.triple(j);
    if (t.O.is_rational() && t.P.is_rational() && t.Q.is_rational()) {
      out.push_back(t);
      continue;
    }
    auto a1 = scalar_form(t.O), a2 = scalar_form(t.P), a3 = scalar_form(t.Q);
    if (!a1 || !a2 || !a3)
      return PostCheckResult{PostCheckStatus::Anomalous, std::nullopt, j + 1};
    QElem prod = *a1 * *a2 * *a3;
    if (!prod.is_rational())
      return PostCheckResult{PostCheckStatus::Anomalous, std::nullopt, j + 1};
    out.push_back(Triple{qinv(*a1) * t.O, qinv(*a2) * t.P, (*a1 * *a2) * t.Q});
    adjusted_any = true;
  }
  Scheme adj(s.m(), s.n(), s.p(), std::move(out), s.field());
  if (!adj.is_rational())
    throw std::logic_error("post_check produced a non-rational scheme");
  return PostCheckResult{
      adjusted_any ? PostCheckStatus::ScalarAdjustable : PostCheckStatus::Clean,
      std::move(adj), -1};
}

DescentOutcome descend(const Scheme& s, const DescendOptions& opt) {
  DescentOutcome out;
  if (s.is_rational()) {
    out.status = DescentOutcome::Status::Success;
    FieldDesc f = s.field();
    out.transform = TransformTriple(ExactMat::identity(s.m(), f),
                                    ExactMat::identity(s.n(), f),
                                    ExactMat::identity(s.p(), f));
    out.result_scheme = s;
    out.certificate.message = "scheme already rational; identity transform";
    return out;
  }

  std::vector<ExactMat> conjugators;
  for (Variant v : {Variant::OPQ, Variant::PQO, Variant::QOP}) {
    IntertwinerSolution sol = solve_intertwiner(products(s, v), opt);
    if (sol.uniqueness == IntertwinerSolution::Uniqueness::Empty) {
      out.status = DescentOutcome::Status::NoSolution;
      out.certificate.variant = variant_name(v);
      out.certificate.nullspace_dim = 0;
      out.certificate.message = "intertwiner system has an empty nullspace";
      return out;
    }
    if (!sol.normalized) {
      out.certificate.variant = variant_name(v);
      out.certificate.nullspace_dim = static_cast<int>(sol.basis.size());
      out.certificate.beta = sol.diagnostics.beta;
      out.certificate.strategies_tried = sol.diagnostics.strategies_tried;
      if (sol.diagnostics.structural_failure) {
        out.status = DescentOutcome::Status::NoSolution;
        out.certificate.message =
            "one-dimensional family admits no S: B * conj(B) is never a "
            "nonzero rational multiple of I";
      } else {
        out.status = DescentOutcome::Status::Inconclusive;
        out.certificate.message =
            "no normalized S found (norm equation or candidate enumeration "
            "exhausted)";
      }
      return out;
    }
    conjugators.push_back(*sol.normalized);
  }

  TransformTriple t(fixed_space(conjugators[0]), fixed_space(conjugators[1]),
                    fixed_space(conjugators[2]));
  Scheme transformed = apply_transform(s, t);
  PostCheckResult pc = post_check(transformed);
  if (pc.status == PostCheckStatus::Anomalous) {
    out.status = DescentOutcome::Status::Inconclusive;
    out.certificate.anomaly_index = pc.anomaly_index;
    out.certificate.message =
        "post-check anomaly: a transformed factor is not a scalar multiple "
        "of a rational matrix";
    return out;
  }
  out.status = DescentOutcome::Status::Success;
  out.transform = std::move(t);
  out.result_scheme = std::move(pc.adjusted);
  out.certificate.message = pc.status == PostCheckStatus::Clean
                                ? "clean"
                                : "scalar-adjustable";
  return out;
}

std::string outcome_to_json(const DescentOutcome& o) {
  nlohmann::ordered_json j;
  switch (o.status) {
    case DescentOutcome::Status::Success: j["status"] = "Success"; break;
    case DescentOutcome::Status::NoSolution: j["status"] = "NoSolution"; break;
    case DescentOutcome::Status::Inconclusive:
      j["status"] = "Inconclusive";
      break;
  }
  if (o.transform) {
    j["transform"]["X"] = matrix_to_literal(o.transform->X);
    j["transform"]["Y"] = matrix_to_literal(o.transform->Y);
    j["transform"]["Z"] = matrix_to_literal(o.transform->Z);
  }
  if (o.result_scheme)
    j["result_ring"] = detect_ring(*o.result_scheme).to_string();
  nlohmann::ordered_json cert;
  if (!o.certificate.variant.empty()) cert["variant"] = o.certificate.variant;
  if (o.certificate.nullspace_dim >= 0)
    cert["nullspace_dim"] = o.certificate.nullspace_dim;
  if (o.certificate.beta) cert["beta"] = rat_to_string(*o.certificate.beta);
  if (!o.certificate.strategies_tried.empty())
    cert["strategies_tried"] = o.certificate.strategies_tried;
  if (o.certificate.anomaly_index)
    cert["anomaly_index"] = *o.certificate.anomaly_index;
  cert["message"] = o.certificate.message;
  j["certificate"] = std::move(cert);
  return j.dump(2) + "\n";
}

}  // namespace mmdescend
