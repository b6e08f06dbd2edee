#include <doctest.h>

#include <limits>

#include "gamma4/matrix.hpp"

using namespace gamma4;

TEST_SUITE("matrix") {
  TEST_CASE("parse_matrix reads rows, skips comments and accepts commas") {
    const auto m = parse_matrix("# a comment\n-2 1\n\n1, -2  # trailing\n");
    CHECK(m == IntMatrix{{-2, 1}, {1, -2}});
  }

  TEST_CASE("parse_matrix reports the offending line") {
    try {
      parse_matrix("1 2\n3\n");
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_matrix("1 x\n"), Error);
  }

  TEST_CASE("checked arithmetic throws instead of wrapping") {
    const Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(checked_add(big, 1), Error);
    CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), Error);
    CHECK_THROWS_AS(checked_sub(std::numeric_limits<Int>::min(), 1), Error);
    CHECK(checked_mul(-3, 7) == -21);
    const IntMatrix a{{big}};
    CHECK_THROWS_AS(a * IntMatrix{{2}}, Error);
  }

  TEST_CASE("structural helpers") {
    const IntMatrix g{{-2, 1, 0}, {1, -3, 1}, {0, 1, -4}};
    CHECK(g.is_symmetric());
    CHECK(g.without(1) == IntMatrix{{-2, 0}, {0, -4}});
    CHECK(g.leading(2) == IntMatrix{{-2, 1}, {1, -3}});
    CHECK(IntMatrix{{-2}}.direct_sum(IntMatrix{{-3}}) == IntMatrix{{-2, 0}, {0, -3}});
    CHECK(g.negated().negated() == g);
    CHECK(g.transposed() == g);

    const std::vector<std::size_t> perm{2, 0, 1};
    const std::vector<int> signs{1, -1, 1};
    const auto c = g.conjugated(perm, signs);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(c(perm[i], perm[j]) == signs[i] * signs[j] * g(i, j));
    CHECK(IntMatrix::identity(2) * g.leading(2) == g.leading(2));
  }
}
