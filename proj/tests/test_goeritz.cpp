#include <doctest.h>

#include <random>

#include "gamma4/goeritz.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace gamma4;
using testing_support::bundled_knots;

namespace {
const char* kTrefoil = "X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]";
// The table's right-handed trefoil; the mirror of kTrefoil.
const char* kTableTrefoil = "X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]";

PreGoeritzMatrix pg_with_regions(const char* pd, std::size_t regions) {
  const auto [a, b] = checkerboard(parse_pd(pd));
  return pregoeritz(a.white_regions.size() == regions ? a : b);
}

Int abs_det(const IntMatrix& m) { return std::abs(determinant(m)); }
}  // namespace

TEST_SUITE("goeritz") {
  TEST_CASE("trefoil PreGoeritz with two white regions") {
    const auto pg = pg_with_regions(kTrefoil, 2);
    const bool plus = pg.entries == IntMatrix{{-3, 3}, {3, -3}};
    const bool minus = pg.entries == IntMatrix{{3, -3}, {-3, 3}};
    CHECK((plus || minus));
  }

  TEST_CASE("trefoil Goeritz form with three white regions") {
    // Crossing weights fix the sign: the table trefoil gives the negative
    // definite form and its mirror the positive one.
    const auto g = goeritz(pg_with_regions(kTableTrefoil, 3));
    CHECK(g.gram == IntMatrix{{-2, 1}, {1, -2}});
    CHECK(g.definiteness == Definiteness::Negative);
    const auto h = goeritz(pg_with_regions(kTrefoil, 3));
    CHECK(h.gram == IntMatrix{{2, -1}, {-1, 2}});
    CHECK(h.definiteness == Definiteness::Positive);
  }

  TEST_CASE("unknot sentinel gives a 1x1 zero PreGoeritz matrix") {
    const auto [a, b] = checkerboard(parse_pd(""));
    const auto pg = pregoeritz(a);
    CHECK(pg.n == 1);
    CHECK(pg.entries == IntMatrix{{0}});
    CHECK_THROWS_AS(goeritz(pg), Error);
  }

  TEST_CASE("singular minor is Degenerate") {
    PreGoeritzMatrix pg;
    pg.n = 3;
    pg.entries = IntMatrix(3, 3);
    pg.incidence = {0, 0, 0};
    try {
      goeritz(pg, 0);
      FAIL("expected Degenerate");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Degenerate);
    }
  }

  TEST_CASE("determinant examples") {
    CHECK(abs_det(IntMatrix{{-7, 1, 0, 1}, {1, -2, 1, 0}, {0, 1, -2, 1}, {1, 0, 1, -3}}) == 39);
    CHECK(abs_det(IntMatrix{{-5, 1, 0, 0}, {1, -3, 1, 0}, {0, 1, -3, 2}, {0, 0, 2, -3}}) == 55);
    CHECK(abs_det(IntMatrix{{-2, 1}, {1, -2}}) == 3);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(determinant(IntMatrix{}) == 1);
  }

  TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937 rng(20241016);
    std::uniform_int_distribution<Int> dist(-6, 6);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + trial % 6;
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
      CHECK(determinant(m) == oracle::cofactor_det(m));
    }
  }

  TEST_CASE("determinant overflow is detected") {
    const Int b = Int{1} << 40;
    CHECK_THROWS_AS(determinant(IntMatrix{{b, 1}, {1, b}}), Error);
  }

  TEST_CASE("definiteness examples") {
    CHECK(definiteness(IntMatrix{{-2, 1}, {1, -2}}) == Definiteness::Negative);
    CHECK(definiteness(IntMatrix{{2, 0}, {0, 2}}) == Definiteness::Positive);
    CHECK(definiteness(IntMatrix{{1, 0}, {0, -1}}) == Definiteness::Indefinite);
    CHECK(definiteness(IntMatrix{{1, 1}, {1, 1}}) == Definiteness::Degenerate);
    CHECK(definiteness(IntMatrix{{0, 1}, {1, 0}}) == Definiteness::Indefinite);
    CHECK_THROWS_AS(definiteness(IntMatrix{{1, 2}, {0, 1}}), Error);
  }

  TEST_CASE("bundled diagrams: row sums vanish and both forms carry the determinant") {
    for (const auto& e : bundled_knots()) {
      const auto d = parse_pd(e.pd_code, e.record.name);
      const auto [a, b] = checkerboard(d);
      for (const Coloring* c : {&a, &b}) {
        const auto pg = pregoeritz(*c, e.record.name);
        CHECK(pg.entries.is_symmetric());
        for (std::size_t i = 0; i < pg.n; ++i) {
          Int s = 0;
          for (std::size_t j = 0; j < pg.n; ++j) s += pg.entries(i, j);
          CHECK(s == 0);
        }
        const auto g = goeritz(pg);
        CHECK_MESSAGE(abs_det(g.gram) == e.record.determinant, e.record.name);
      }
    }
  }

  TEST_CASE("deleted index does not change |det| or definiteness") {
    for (const auto& e : bundled_knots()) {
      const auto [a, b] = checkerboard(parse_pd(e.pd_code, e.record.name));
      for (const Coloring* c : {&a, &b}) {
        const auto pg = pregoeritz(*c, e.record.name);
        const auto ref = goeritz(pg);
        for (std::size_t k = 0; k < pg.n; ++k) {
          const auto g = goeritz(pg, k);
          CHECK(g.deleted_index == k);
          CHECK(abs_det(g.gram) == abs_det(ref.gram));
          CHECK(g.definiteness == ref.definiteness);
        }
      }
    }
  }

  TEST_CASE("alternating diagrams give one positive and one negative definite form") {
    int n = 0;
    for (const auto& e : bundled_knots()) {
      if (!e.record.alternating) continue;
      const auto [f, g] = goeritz_pair(parse_pd(e.pd_code, e.record.name));
      const bool opposite = (f.definiteness == Definiteness::Positive && g.definiteness == Definiteness::Negative) ||
                            (f.definiteness == Definiteness::Negative && g.definiteness == Definiteness::Positive);
      CHECK_MESSAGE(opposite, e.record.name);
      ++n;
    }
    CHECK(n == 123);
  }

  TEST_CASE("mirror negates the forms with the colorings exchanged") {
    for (const auto& e : bundled_knots()) {
      const auto d = parse_pd(e.pd_code, e.record.name);
      const auto [a, b] = checkerboard(d);
      const auto [ma, mb] = checkerboard(mirror(d));
      for (const auto& [m, o] : {std::pair{&ma, &b}, std::pair{&mb, &a}}) {
        const auto pm = pregoeritz(*m), po = pregoeritz(*o);
        const auto p = testing_support::white_region_map(*m, *o);
        REQUIRE(pm.n == po.n);
        bool negated = true;
        for (std::size_t i = 0; i < pm.n; ++i)
          for (std::size_t j = 0; j < pm.n; ++j) negated = negated && pm.entries(i, j) == -po.entries(p[i], p[j]);
        CHECK_MESSAGE(negated, e.record.name);
      }
    }
  }
}
