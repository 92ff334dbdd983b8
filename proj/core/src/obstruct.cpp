#include "mmdescend/obstruct.hpp"

#include <functional>

namespace mmdescend {

namespace {

void require_rational_square(const std::vector<ExactMat>& Ms) {
  if (Ms.empty()) throw dimension_error("empty matrix list");
  for (const auto& M : Ms) {
    if (!M.is_square() || M.rows() != Ms.front().rows())
      throw dimension_error("matrices must be square and same size");
    if (!M.is_rational())
      throw unsupported_field_error(
          "integer obstruction tests require rational matrices");
  }
}

// Visits depth-k products in lexicographic sequence order. `sink` gets the
// 0-based sequence and the trace; returning true stops the walk.
template <typename Sink>
bool walk_depth(const std::vector<ExactMat>& Ms,
                const std::vector<ExactMat>* prev, int k,
                std::uint64_t* examined, Sink&& sink) {
  const int r = static_cast<int>(Ms.size());
  std::vector<int> seq(k, 0);
  if (prev) {
    // prev holds all depth-(k-1) products in lexicographic order.
    for (size_t pfx = 0; pfx < prev->size(); ++pfx) {
      size_t rem = pfx;
      for (int pos = k - 2; pos >= 0; --pos) {
        seq[pos] = static_cast<int>(rem % r);
        rem /= r;
      }
      for (int j = 0; j < r; ++j) {
        seq[k - 1] = j;
        ExactMat prod = k == 1 ? Ms[j] : (*prev)[pfx] * Ms[j];
        ++*examined;
        if (sink(seq, prod)) return true;
      }
    }
    return false;
  }
  // DFS fallback without a memo table (prefix products on the stack).
  std::vector<ExactMat> stack;
  stack.reserve(k);
  std::function<bool(int)> go = [&](int depth) -> bool {
    for (int j = 0; j < r; ++j) {
      seq[depth] = j;
      ExactMat prod = depth == 0 ? Ms[j] : stack.back() * Ms[j];
      if (depth == k - 1) {
        ++*examined;
        if (sink(seq, prod)) return true;
      } else {
        stack.push_back(std::move(prod));
        if (go(depth + 1)) return true;
        stack.pop_back();
      }
    }
    return false;
  };
  return go(0);
}

// prev ordering note: walk_depth with a memo table needs prev in lex order,
// which build_next preserves.
std::vector<ExactMat> build_next(const std::vector<ExactMat>& Ms,
                                 const std::vector<ExactMat>* prev) {
  std::vector<ExactMat> next;
  if (!prev) {
    next = Ms;
    return next;
  }
  next.reserve(prev->size() * Ms.size());
  for (const auto& P : *prev)
    for (const auto& M : Ms) next.push_back(P * M);
  return next;
}

bool integer_trace(const ExactMat& M) {
  return rat_is_integer(M.trace().a());
}

}  // namespace

ObstructionReport integer_obstruction(const std::vector<ExactMat>& Ms,
                                      int k_max, std::size_t memo_cap) {
  require_rational_square(Ms);
  const std::size_t r = Ms.size();

  ObstructionReport rep;
  std::vector<ExactMat> memo;  // depth-(k-1) products, lex order
  bool have_memo = false;
  std::uint64_t level_size = 1;
  for (int k = 1; k <= k_max && !rep.found; ++k) {
    rep.depth_searched = k;
    const std::vector<ExactMat>* prev =
        (k == 1) ? nullptr : (have_memo ? &memo : nullptr);
    auto sink = [&](const std::vector<int>& seq, const ExactMat& prod) {
      if (!integer_trace(prod)) {
        rep.found = true;
        rep.witness.assign(seq.begin(), seq.end());
        for (int& j : rep.witness) ++j;  // 1-based
        rep.trace_value = prod.trace().a();
        return true;
      }
      return false;
    };
    if (walk_depth(Ms, prev, k, &rep.products_examined, sink)) break;
    level_size *= r;
    if (k < k_max) {
      if (level_size <= memo_cap) {
        memo = build_next(Ms, (k == 1) ? nullptr : (have_memo ? &memo : nullptr));
        have_memo = true;
      } else {
        memo.clear();
        have_memo = false;
      }
    }
  }
  return rep;
}

ObstructionReport integer_obstruction(const Scheme& s, Variant v, int k_max,
                                      std::size_t memo_cap) {
  if (!s.is_rational())
    throw unsupported_field_error(
        "integer obstruction tests require a rational scheme");
  return integer_obstruction(products(s, v), k_max, memo_cap);
}

TraceProfile trace_profile(const Scheme& s, int k_max, Variant v,
                           std::size_t memo_cap) {
  if (!s.is_rational())
    throw unsupported_field_error(
        "integer obstruction tests require a rational scheme");
  std::vector<ExactMat> Ms = products(s, v);

  TraceProfile profile;
  std::vector<ExactMat> memo;
  bool have_memo = false;
  std::uint64_t level_size = 1;
  for (int k = 1; k <= k_max; ++k) {
    TraceProfile::DepthRow row{k, 0, 0, {}};
    const std::vector<ExactMat>* prev =
        (k == 1) ? nullptr : (have_memo ? &memo : nullptr);
    auto sink = [&](const std::vector<int>& seq, const ExactMat& prod) {
      if (!integer_trace(prod)) {
        ++row.non_integer;
        if (row.sample_witnesses.size() < 3) {
          std::vector<int> w(seq.begin(), seq.end());
          for (int& j : w) ++j;
          row.sample_witnesses.push_back(std::move(w));
        }
      }
      return false;  // full census
    };
    walk_depth(Ms, prev, k, &row.products, sink);
    profile.rows.push_back(std::move(row));
    level_size *= Ms.size();
    if (k < k_max) {
      if (level_size <= memo_cap) {
        memo = build_next(Ms, (k == 1) ? nullptr : (have_memo ? &memo : nullptr));
        have_memo = true;
      } else {
        memo.clear();
        have_memo = false;
      }
    }
  }
  return profile;
}

}  // namespace mmdescend
