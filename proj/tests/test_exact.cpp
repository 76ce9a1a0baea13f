#include <random>

#include "doctest.h"

#include "conifold/error.hpp"
#include "conifold/exact.hpp"
#include "conifold/lp.hpp"
#include "oracles.hpp"

using namespace conifold;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng, int spread) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("Bareiss determinant agrees with the Leibniz expansion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntMatrix m = random_matrix(n, n, rng, trial % 2 ? 1 : 9);
    CHECK(determinant(m) == testing::leibniz_determinant(m));
  }
}

TEST_CASE("rank agrees with the largest nonzero minor") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + trial % 4;
    const std::size_t cols = 1 + (trial / 4) % 5;
    IntMatrix m = random_matrix(rows, cols, rng, 1);
    // Duplicate a row now and then to force rank deficiency.
    if (rows > 1 && trial % 3 == 0)
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c);
    CHECK(rank(m) == testing::minor_rank(m));
  }
}

TEST_CASE("null space vectors are annihilated and have the right count") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_matrix(1 + trial % 4, 2 + trial % 5, rng, 2);
    const auto basis = nullspace(m);
    CHECK(basis.size() == m.cols() - rank(m));
    for (const auto& x : basis)
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) s += Rational(m(r, c)) * x[c];
        CHECK(s == 0);
      }
  }
}

TEST_CASE("primitive vectors clear denominators and content") {
  std::vector<Rational> v{Rational(1, 2), Rational(-3, 4), Rational(0)};
  CHECK(primitive_integer_vector(v) == std::vector<Integer>{2, -3, 0});
  std::vector<Rational> w{Rational(6), Rational(9)};
  CHECK(primitive_integer_vector(w) == std::vector<Integer>{2, 3});
}

TEST_CASE("integer and rational parsing") {
  CHECK(parse_integer("-123456789012345678901234567890") ==
        Integer("-123456789012345678901234567890"));
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_integer("1 2"), Error);
  CHECK_THROWS_AS(parse_integer(""), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("lp: textbook optimum") {
  // max x + y  s.t.  x + 2y <= 4, 3x + y <= 6
  RationalMatrix a(2, 2);
  a(0, 0) = 1; a(0, 1) = 2;
  a(1, 0) = 3; a(1, 1) = 1;
  std::vector<Rational> b{4, 6};
  std::vector<Rational> c{1, 1};
  const auto r = lp::maximize(c, a, b);
  REQUIRE(r.status == lp::Status::Optimal);
  CHECK(r.value == Rational(14, 5));
  CHECK(r.point[0] == Rational(8, 5));
  CHECK(r.point[1] == Rational(6, 5));
}

TEST_CASE("lp: Beale's cycling example terminates under Bland's rule") {
  RationalMatrix a(3, 4);
  const Rational rows[3][4] = {{Rational(1, 4), -8, -1, 9}, {Rational(1, 2), -12, Rational(-1, 2), 3}, {0, 0, 1, 0}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) a(r, c) = rows[r][c];
  std::vector<Rational> b{0, 0, 1};
  std::vector<Rational> obj{Rational(3, 4), -20, Rational(1, 2), -6};
  const auto res = lp::maximize(obj, a, b);
  REQUIRE(res.status == lp::Status::Optimal);
  CHECK(res.value == Rational(5, 4));
  for (int r = 0; r < 3; ++r) {
    Rational s = 0;
    for (int c = 0; c < 4; ++c) s += a(r, c) * res.point[c];
    CHECK(s <= b[r]);
  }
}

TEST_CASE("lp: unbounded and invalid inputs") {
  RationalMatrix a(1, 1);
  a(0, 0) = -1;
  std::vector<Rational> b{0};
  std::vector<Rational> c{1};
  CHECK(lp::maximize(c, a, b).status == lp::Status::Unbounded);
  std::vector<Rational> negative{-1};
  CHECK_THROWS_AS(lp::maximize(c, a, negative), Error);
}
