#include "expmap/linalg.hpp"

#include <gtest/gtest.h>

#include "expmap/parse.hpp"
#include "support/generators.hpp"

using namespace expmap;
using expmap::testing::Rng;

namespace {

Matrix from_rows(const FieldSpec& f, const std::vector<std::vector<long>>& rows) {
  Matrix m(f, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = FieldElem(f, rows[r][c]);
  }
  return m;
}

}  // namespace

TEST(Linalg, EchelonOverRationals) {
  const FieldSpec Q = FieldSpec::rationals();
  const ReducedEchelon e = reduced_echelon(from_rows(Q, {{2, 4, 6}, {1, 3, 5}, {3, 7, 11}}));
  ASSERT_EQ(e.pivot_cols, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.rows[0], (std::vector<FieldElem>{FieldElem(Q, 1), FieldElem(Q, 0), FieldElem(Q, -1)}));
  EXPECT_EQ(e.rows[1], (std::vector<FieldElem>{FieldElem(Q, 0), FieldElem(Q, 1), FieldElem(Q, 2)}));
}

TEST(Linalg, NullspaceOverF3) {
  const FieldSpec f3 = FieldSpec::prime(3);
  // x + y + z = 0 has a two-dimensional solution space.
  const auto ns = nullspace(from_rows(f3, {{1, 1, 1}}));
  ASSERT_EQ(ns.size(), 2u);
  EXPECT_EQ(ns[0], (std::vector<FieldElem>{FieldElem(f3, 2), FieldElem(f3, 1), FieldElem(f3, 0)}));
  EXPECT_EQ(ns[1], (std::vector<FieldElem>{FieldElem(f3, 2), FieldElem(f3, 0), FieldElem(f3, 1)}));
}

TEST(Linalg, RandomNullspacesAnnihilate) {
  Rng rng(0x0011);
  for (const FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(7)}) {
    for (int t = 0; t < 100; ++t) {
      const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(6);
      Matrix m(f, rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = expmap::testing::random_scalar(rng, f);
      }
      const auto ns = nullspace(m);
      const ReducedEchelon e = reduced_echelon(m);
      ASSERT_EQ(ns.size() + e.pivot_cols.size(), cols);  // rank-nullity
      for (const auto& v : ns) {
        for (std::size_t r = 0; r < rows; ++r) {
          FieldElem acc = FieldElem::zero(f);
          for (std::size_t c = 0; c < cols; ++c) acc += m.at(r, c) * v[c];
          ASSERT_TRUE(acc.is_zero());
        }
      }
    }
  }
}

TEST(Linalg, PolySpanMembership) {
  const RingPtr ring = make_ring(FieldSpec::rationals(), {"u", "v"});
  PolySpan span(ring);
  EXPECT_TRUE(span.insert(parse_poly("u + v", ring)).has_value());
  EXPECT_TRUE(span.insert(parse_poly("u - v", ring)).has_value());
  EXPECT_FALSE(span.insert(parse_poly("3*u", ring)).has_value());
  EXPECT_EQ(span.dim(), 2u);
  EXPECT_TRUE(span.contains(parse_poly("v", ring)));
  EXPECT_FALSE(span.contains(parse_poly("u*v", ring)));
  EXPECT_EQ(span.reduce(parse_poly("u*v + u", ring)), parse_poly("u*v", ring));
}
