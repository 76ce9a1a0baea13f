#include <random>

#include "doctest.h"

#include "conifold/error.hpp"
#include "conifold/laurent.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace conifold;
using conifold::testing::corpus;
using conifold::testing::simplex_p3;

namespace {

Exponent ex(int a, int b = 0, int c = 0, int d = 0) { return Exponent{a, b, c, d}; }

LaurentPolynomial p3_potential() {
  return LaurentPolynomial::from_terms(
      3, {{ex(1, 0, 0), 1}, {ex(0, 1, 0), 1}, {ex(0, 0, 1), 1}, {ex(-1, -1, -1), 1}});
}

LaurentPolynomial random_polynomial(std::mt19937& rng, int dim, int terms) {
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3);
  std::vector<LaurentPolynomial::Term> t;
  for (int i = 0; i < terms; ++i) {
    Exponent x{};
    for (int k = 0; k < dim; ++k) x[k] = e(rng);
    t.emplace_back(x, c(rng));
  }
  return LaurentPolynomial::from_terms(dim, std::move(t));
}

// c_d = multinomial(d; d/4, d/4, d/4, d/4) for 4 | d, computed directly.
Integer p3_closed_form(int d) {
  if (d % 4) return 0;
  const Integer q = factorial(d / 4);
  return factorial(d) / (q * q * q * q);
}

}  // namespace

TEST_CASE("LaurentPolynomial: construction merges and drops zeros") {
  const auto f = LaurentPolynomial::from_terms(2, {{ex(1, 0), 2}, {ex(1, 0), -2}, {ex(0, 1), 3}});
  CHECK(f.size() == 1);
  CHECK(f.coefficient(ex(0, 1)) == 3);
  CHECK(f.coefficient(ex(1, 0)) == 0);
  CHECK(LaurentPolynomial::from_terms(2, {{ex(1, 0), 0}}).is_zero());
  CHECK_THROWS_AS(LaurentPolynomial::from_terms(2, {{ex(0, 0, 1), 1}}), Error);
  CHECK_THROWS_AS(LaurentPolynomial(5), Error);
}

TEST_CASE("from_fan_polytope gives the vertex potential") {
  const auto w = from_fan_polytope(simplex_p3());
  CHECK(w == p3_potential());
  CHECK(w.size() == 4);
  const auto boundary = from_fan_polytope(testing::cube(), MonomialSupport::BoundaryPoints);
  CHECK(boundary.size() == 26);
  std::vector<LatticeVector> corner{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK_THROWS_AS(from_fan_polytope(convex_hull(corner, 3)), Error);
}

TEST_CASE("multiply: commutative, associative, constant term of squares") {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    const int dim = 2 + t % 3;
    const auto f = random_polynomial(rng, dim, 5);
    const auto g = random_polynomial(rng, dim, 6);
    const auto h = random_polynomial(rng, dim, 4);
    CHECK(multiply(f, g) == multiply(g, f));
    CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
    CHECK(multiply(f, LaurentPolynomial::constant(dim, 1)) == f);
  }
  const auto x = LaurentPolynomial::from_terms(1 + 1, {{ex(1, 0), 1}, {ex(-1, 0), 1}});
  CHECK(constant_term(multiply(x, x)) == 2);
}

TEST_CASE("multiply: threaded product equals the serial one") {
  std::mt19937 rng(11);
  const auto w = from_fan_polytope(testing::corpus_polytope("nodal_05"));
  auto power = w;
  for (int i = 0; i < 4; ++i) power = multiply(power, w);
  REQUIRE(power.size() >= 256);
  CHECK(multiply(power, w, 4) == multiply(power, w, 1));
  CHECK(multiply(power, power, 3) == multiply(power, power, 1));
}

TEST_CASE("period_sequence: P3 to d = 12") {
  const auto seq = period_sequence(p3_potential(), 12);
  REQUIRE(seq.terms.size() == 13);
  CHECK(seq.terms[0] == 1);
  CHECK(seq.terms[4] == 24);
  CHECK(seq.terms[8] == 2520);
  CHECK(seq.terms[12] == 369600);
  for (int d = 0; d <= 12; ++d) {
    CHECK(seq.terms[d] == p3_closed_form(d));
    CHECK(seq.terms[d] == period_term_direct(p3_potential(), d));
  }
}

TEST_CASE("period_sequence: P3 closed form holds to d = 40") {
  const auto seq = period_sequence(p3_potential(), 40);
  for (int d = 0; d <= 40; ++d) CHECK(seq.terms[d] == p3_closed_form(d));
}

TEST_CASE("period_sequence: dmax = 0 and argument checks") {
  const auto seq = period_sequence(p3_potential(), 0);
  CHECK(seq.terms == std::vector<Integer>{1});
  CHECK_THROWS_AS(period_sequence(p3_potential(), -1), Error);
}

TEST_CASE("period_sequence: iterative equals direct and pruned equals unpruned on the corpus") {
  for (const auto& [name, p] : corpus()) {
    CAPTURE(name);
    const auto w = from_fan_polytope(p);
    const auto pruned = period_sequence(w, 8);
    const auto full = period_sequence(w, 8, PeriodOptions{false, 1});
    CHECK(pruned.terms == full.terms);
    for (int d = 0; d <= 6; ++d) CHECK(pruned.terms[d] == period_term_direct(w, d));
  }
}

TEST_CASE("period_sequence: pruning is exact on random polynomials") {
  std::mt19937 rng(5);
  for (int t = 0; t < 15; ++t) {
    const int dim = 2 + t % 2;
    const auto w = random_polynomial(rng, dim, 6);
    const auto a = period_sequence(w, 6);
    const auto b = period_sequence(w, 6, PeriodOptions{false, 1});
    CHECK(a.terms == b.terms);
    for (int d = 0; d <= 4; ++d) CHECK(a.terms[d] == period_term_direct(w, d));
  }
}

TEST_CASE("period_sequence: invariant under unimodular change of variables") {
  std::mt19937 rng(3);
  for (const auto& [name, p] : corpus()) {
    CAPTURE(name);
    const auto w = from_fan_polytope(p);
    const auto reference = period_sequence(w, 8).terms;
    const auto m = testing::random_unimodular(3, rng);
    CHECK(period_sequence(transform_exponents(w, m), 8).terms == reference);
  }
}

TEST_CASE("period_sequence: thread count does not change the result") {
  const auto w = from_fan_polytope(testing::corpus_polytope("octahedron"));
  CHECK(period_sequence(w, 14, PeriodOptions{true, 4}).terms ==
        period_sequence(w, 14, PeriodOptions{true, 1}).terms);
}

TEST_CASE("period_term_direct: degree cap") {
  CHECK_THROWS_AS(period_term_direct(p3_potential(), 41), Error);
  try {
    period_term_direct(p3_potential(), 5, 4);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("to_string names the variables") {
  CHECK(p3_potential().to_string() == "x^-1*y^-1*z^-1 + z + y + x");
}
