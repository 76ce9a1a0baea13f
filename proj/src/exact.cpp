#include "conifold/exact.hpp"

#include <numeric>
#include <utility>

#include "conifold/error.hpp"

namespace conifold {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::OriginNotInterior: return "OriginNotInterior";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::NotReflexiveFacet: return "NotReflexiveFacet";
    case ErrorKind::WorseThanNodal: return "WorseThanNodal";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

EchelonForm bareiss_echelon(IntMatrix m) {
  EchelonForm out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
      out.sign = -out.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  EchelonForm e = bareiss_echelon(m);
  if (e.pivot_columns.size() < n) return 0;
  return e.sign * e.reduced(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  return bareiss_echelon(m).pivot_columns.size();
}

std::vector<std::vector<Rational>> nullspace(const IntMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<std::vector<Rational>> basis;
  if (m.rows() == 0) {
    for (std::size_t f = 0; f < cols; ++f) {
      std::vector<Rational> x(cols, 0);
      x[f] = 1;
      basis.push_back(std::move(x));
    }
    return basis;
  }
  const EchelonForm e = bareiss_echelon(m);
  const auto& pivots = e.pivot_columns;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, 0);
    x[f] = 1;
    for (std::size_t i = pivots.size(); i-- > 0;) {
      const std::size_t pc = pivots[i];
      Rational sum = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (x[j] != 0 && e.reduced(i, j) != 0) sum += Rational(e.reduced(i, j)) * x[j];
      x[pc] = -sum / Rational(e.reduced(i, pc));
      x[pc].canonicalize();
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Integer lcm_of_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  return g;
}

std::vector<Integer> primitive_integer_vector(std::span<const Rational> v) {
  const Integer l = lcm_of_denominators(v);
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& q : v) out.emplace_back(q.get_num() * (l / q.get_den()));
  const Integer g = content(out);
  if (g > 1)
    for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::optional<std::int64_t> to_int64(const Integer& z) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!z.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(z.get_si());
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer parse_integer(const std::string& text) {
  Integer z;
  std::string t = text;
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  const std::size_t first = (!t.empty() && t.front() == '-') ? 1 : 0;
  const bool digits = t.size() > first &&
                      t.find_first_not_of("0123456789", first) == std::string::npos;
  if (!digits || z.set_str(t, 10) != 0)
    throw Error(ErrorKind::ParseError, "not an integer: '" + text + "'");
  return z;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace conifold
