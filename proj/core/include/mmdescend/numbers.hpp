#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mmdescend {

// Exact arithmetic base types. All rationals are kept canonical
// (gcd(|num|,den) = 1, den > 0) by GMP.
using Int = mpz_class;
using Rat = mpq_class;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct field_mismatch_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct dimension_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct division_by_zero_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct singular_matrix_error : std::runtime_error {
  int rank_found;
  explicit singular_matrix_error(int rank)
      : std::runtime_error("singular matrix (rank " + std::to_string(rank) + ")"),
        rank_found(rank) {}
};

struct unsupported_field_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "-p/q" or "-p" with arbitrary-precision digits.
Rat parse_rat(std::string_view s);

// Canonical form: "p" when den = 1, otherwise "p/q".
std::string rat_to_string(const Rat& x);

inline bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

// If x is the square of a rational, returns that (nonnegative) root.
std::optional<Rat> rat_sqrt(const Rat& x);

// lcm of the two positive integers.
Int int_lcm(const Int& a, const Int& b);

// Trial-division factorization (ascending primes, with exponents).
// Returns nullopt when a cofactor beyond the trial bound is composite.
std::optional<std::vector<std::pair<Int, int>>> factorize(Int n);

}  // namespace mmdescend
