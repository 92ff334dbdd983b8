#pragma once

#include <iosfwd>
#include <string>

#include "mmdescend/scheme.hpp"

namespace mmdescend {

// Canonical scheme file, one JSON document per file:
//   { "dims": [m,n,p], "rank": r, "field": {"d": D},
//     "triples": [ {"O": [[entry,...],...], "P": ..., "Q": ...}, ... ] }
// Alternate encoding-matrix form:
//   { "dims": [m,n,p], "field": {"d": D}, "U": ..., "V": ..., "W": ... }
// Entries are strings in the exactnum grammar (plain integers may also be
// JSON numbers on input). Serialization is canonical: reduced fractions,
// fixed key order, two-space indent, trailing newline.

enum class SchemeFileForm { Triples, Encoding };

struct LoadedScheme {
  Scheme scheme;
  SchemeFileForm form;
};

// Parses a scheme document; verifies Brent equations unless skip_verify.
// Throws parse_error on malformed input and brent_violation_error on an
// invalid scheme.
struct brent_violation_error : std::runtime_error {
  BrentReport report;
  explicit brent_violation_error(BrentReport r)
      : std::runtime_error("Brent equations violated: " + r.to_string()),
        report(std::move(r)) {}
};

LoadedScheme parse_scheme(const std::string& text, bool skip_verify = false);
LoadedScheme load_scheme(const std::string& path, bool skip_verify = false);

std::string serialize_scheme(const Scheme& s,
                             SchemeFileForm form = SchemeFileForm::Triples);
void save_scheme(const Scheme& s, const std::string& path,
                 SchemeFileForm form = SchemeFileForm::Triples);

// Row-major bracketed matrix literal, e.g. "[[1,i],[0,1]]".
ExactMat parse_matrix_literal(const std::string& text, FieldDesc field);
std::string matrix_to_literal(const ExactMat& A);

}  // namespace mmdescend
