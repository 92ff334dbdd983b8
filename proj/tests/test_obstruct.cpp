#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <random>

#include "doctest.h"
#include "mmdescend/obstruct.hpp"
#include "mmdescend/scheme_io.hpp"

using namespace mmdescend;

namespace {
const FieldDesc kGauss{-1};

ExactMat lit(const std::string& s) { return parse_matrix_literal(s, kGauss); }

std::string fixture(const std::string& name) {
  return std::string(MMDESCEND_FIXTURES_DIR) + "/" + name;
}
}  // namespace

TEST_CASE("depth-1 witness") {
  std::vector<ExactMat> Ms{lit("[[1/3,0],[0,0]]"), lit("[[1,0],[0,1]]")};
  auto rep = integer_obstruction(Ms, 3);
  REQUIRE(rep.found);
  CHECK(rep.witness == std::vector<int>{1});
  CHECK(rep.trace_value == Rat(1, 3));
  CHECK(rep.depth_searched == 1);
  CHECK(rep.products_examined == 1);
}

TEST_CASE("depth-2 witness with trace 1/2") {
  // A1 A2 = [[1/2,0],[0,0]]: non-integer trace first appears at depth 2
  // on the lexicographically first mixed pair (1,2).
  std::vector<ExactMat> Ms{lit("[[0,1],[0,0]]"), lit("[[0,0],[1/2,0]]")};
  auto rep = integer_obstruction(Ms, 3);
  REQUIRE(rep.found);
  CHECK(rep.witness == std::vector<int>{1, 2});
  CHECK(rep.trace_value == Rat(1, 2));
  CHECK(rep.depth_searched == 2);
  // Two depth-1 products plus (1,1),(1,2) at depth 2.
  CHECK(rep.products_examined == 4);
}

TEST_CASE("Strassen has no obstruction up to depth 3") {
  auto rep = integer_obstruction(strassen_scheme(kGauss), Variant::OPQ, 3);
  CHECK_FALSE(rep.found);
  CHECK(rep.depth_searched == 3);
  CHECK(rep.products_examined == 7 + 49 + 343);
  for (Variant v : {Variant::PQO, Variant::QOP})
    CHECK_FALSE(integer_obstruction(strassen_scheme(kGauss), v, 2).found);
}

TEST_CASE("obstructed fixture is caught at depth 1") {
  Scheme s = load_scheme(fixture("obstructed.json")).scheme;
  auto rep = integer_obstruction(s, Variant::OPQ, 3);
  REQUIRE(rep.found);
  CHECK(rep.witness == std::vector<int>{1});
  CHECK(rep.trace_value == Rat(2, 3));
}

TEST_CASE("non-rational schemes are rejected") {
  Scheme s = load_scheme(fixture("strassen_complexified.json")).scheme;
  CHECK_THROWS_AS(integer_obstruction(s, Variant::OPQ, 2),
                  unsupported_field_error);
}

TEST_CASE("traces are invariant under integral transforms") {
  // Conjugating by unimodular integer matrices cannot create or destroy
  // obstructions; check the negative side on Strassen.
  Scheme s = strassen_scheme(kGauss);
  ExactMat X = lit("[[1,1],[0,1]]"), Y = lit("[[1,0],[1,1]]"),
           Z = lit("[[2,1],[1,1]]");
  Scheme g = apply_transform(s, TransformTriple(X, Y, Z));
  REQUIRE(g.is_rational());
  auto rep = integer_obstruction(g, Variant::OPQ, 3);
  CHECK_FALSE(rep.found);
  CHECK(rep.products_examined == 7 + 49 + 343);
}

TEST_CASE("memo cap fallback gives identical reports") {
  std::vector<ExactMat> Ms{lit("[[0,1],[0,0]]"), lit("[[0,0],[1/2,0]]"),
                           lit("[[1,0],[0,1]]")};
  auto memo = integer_obstruction(Ms, 4, kDefaultMemoCap);
  auto dfs = integer_obstruction(Ms, 4, 0);  // cap 0 forces recomputation
  CHECK(memo.found == dfs.found);
  CHECK(memo.witness == dfs.witness);
  CHECK(memo.trace_value == dfs.trace_value);
  CHECK(memo.depth_searched == dfs.depth_searched);
  CHECK(memo.products_examined == dfs.products_examined);

  auto m2 = integer_obstruction(strassen_scheme(kGauss), Variant::OPQ, 3,
                                kDefaultMemoCap);
  auto d2 = integer_obstruction(strassen_scheme(kGauss), Variant::OPQ, 3, 0);
  CHECK(m2.found == d2.found);
  CHECK(m2.products_examined == d2.products_examined);
}

TEST_CASE("trace profile census") {
  Scheme s = load_scheme(fixture("obstructed.json")).scheme;
  auto prof = trace_profile(s, 2);
  REQUIRE(prof.rows.size() == 2);
  CHECK(prof.rows[0].depth == 1);
  CHECK(prof.rows[0].products == 8);
  CHECK(prof.rows[0].non_integer >= 1);
  CHECK_FALSE(prof.rows[0].sample_witnesses.empty());
  CHECK(prof.rows[0].sample_witnesses.size() <= 3);
  CHECK(prof.rows[1].products == 64);

  auto clean = trace_profile(strassen_scheme(kGauss), 2);
  CHECK(clean.rows[0].non_integer == 0);
  CHECK(clean.rows[1].non_integer == 0);
}
