#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmdescend/scheme.hpp"

namespace mmdescend {

// Trace tests for integer-equivalence: a product of M_j matrices with a
// non-integer trace certifies that no simultaneous integer conjugate of the
// family exists. found = false only means no obstruction up to the searched
// depth, never that an integer form exists.

struct ObstructionReport {
  bool found = false;
  std::vector<int> witness;  // 1-based index sequence (j1,...,jk)
  Rat trace_value = 0;
  int depth_searched = 0;
  std::uint64_t products_examined = 0;
};

inline constexpr std::size_t kDefaultMemoCap = 1000000;

// Enumerates index sequences (j1,...,jk) for k = 1..k_max in lexicographic
// order over the given square rational matrices; returns the first sequence
// whose product has non-integer trace. Depth-(k-1) prefixes are memoized
// unless the table would exceed memo_cap matrices.
ObstructionReport integer_obstruction(const std::vector<ExactMat>& Ms,
                                      int k_max,
                                      std::size_t memo_cap = kDefaultMemoCap);

// Same over a scheme's M_j products; the scheme must be rational.
ObstructionReport integer_obstruction(const Scheme& s,
                                      Variant v = Variant::OPQ, int k_max = 3,
                                      std::size_t memo_cap = kDefaultMemoCap);

struct TraceProfile {
  struct DepthRow {
    int depth;
    std::uint64_t products;
    std::uint64_t non_integer;
    std::vector<std::vector<int>> sample_witnesses;  // up to 3 per depth
  };
  std::vector<DepthRow> rows;
};

// Full census of non-integer traces per depth up to k_max.
TraceProfile trace_profile(const Scheme& s, int k_max,
                           Variant v = Variant::OPQ,
                           std::size_t memo_cap = kDefaultMemoCap);

}  // namespace mmdescend
