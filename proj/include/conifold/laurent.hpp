#pragma once

// Sparse Laurent polynomials with arbitrary-precision integer coefficients,
// and the period sequence of constant terms of their powers.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conifold/exact.hpp"
#include "conifold/lattice.hpp"

namespace conifold {

// Unused trailing slots are zero.
using Exponent = std::array<std::int32_t, kMaxDim>;

class LaurentPolynomial {
 public:
  using Term = std::pair<Exponent, Integer>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(int dim);

  // Sums repeated exponents and drops zero coefficients.
  static LaurentPolynomial from_terms(int dim, std::vector<Term> terms);
  static LaurentPolynomial constant(int dim, const Integer& value);

  int dim() const noexcept { return dim_; }
  // Ascending by exponent.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Exponent& e) const;

  // Variables x, y, z, w; e.g. "x + y + z + x^-1*y^-1*z^-1".
  std::string to_string() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  int dim_ = 0;
  std::vector<Term> terms_;
};

enum class MonomialSupport {
  Vertices,        // W = sum over the vertices of the fan polytope
  BoundaryPoints,  // every boundary lattice point, coefficient 1
};

// Throws OriginNotInterior.
LaurentPolynomial from_fan_polytope(const Polytope& p,
                                    MonomialSupport support = MonomialSupport::Vertices);

// Exact product. `threads` = 0 picks default_thread_count(); the result does
// not depend on the thread count. Throws DimensionMismatch.
LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g,
                           unsigned threads = 1);

Integer constant_term(const LaurentPolynomial& f);

// Substitutes z^e -> z^(M e), a change of lattice basis when M is unimodular.
LaurentPolynomial transform_exponents(const LaurentPolynomial& f, const IntMatrix& m);

struct PeriodSequence {
  std::vector<Integer> terms;  // c_0 .. c_dmax
  std::string source;

  int dmax() const noexcept { return static_cast<int>(terms.size()) - 1; }
};

struct PeriodOptions {
  bool prune = true;
  unsigned threads = 1;
};

// c_d = constant_term(W^d) for d = 0..dmax by iterated multiplication. With
// pruning, exponents e of W^d such that -e lies outside (dmax - d) Newton(W)
// are dropped; the output is unaffected.
PeriodSequence period_sequence(const LaurentPolynomial& w, int dmax,
                               const PeriodOptions& options = {});

inline constexpr int kDefaultOracleDegreeCap = 40;

// Brute-force constant term of W^d: sums d!/prod(a_v!) * prod(coeff_v^a_v)
// over all compositions (a_v) of d with sum a_v v = 0. Throws BudgetExceeded
// when d > max_degree.
Integer period_term_direct(const LaurentPolynomial& w, int d,
                           int max_degree = kDefaultOracleDegreeCap);

}  // namespace conifold
