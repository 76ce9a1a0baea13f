#include "conifold/laurent.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <unordered_map>

#include "conifold/error.hpp"
#include "conifold/parallel.hpp"

namespace conifold {

namespace {

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : e) {
      h ^= static_cast<std::uint32_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

using TermMap = std::unordered_map<Exponent, Integer, ExponentHash>;

std::int32_t narrow_exponent(std::int64_t x) {
  if (x < std::numeric_limits<std::int32_t>::min() || x > std::numeric_limits<std::int32_t>::max())
    throw Error(ErrorKind::BudgetExceeded, "exponent outside the 32-bit range");
  return static_cast<std::int32_t>(x);
}

std::int32_t narrow_exponent(const Integer& x) {
  if (!x.fits_sint_p()) throw Error(ErrorKind::BudgetExceeded, "exponent outside the 32-bit range");
  return static_cast<std::int32_t>(x.get_si());
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent c{};
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = narrow_exponent(static_cast<std::int64_t>(a[i]) + b[i]);
  return c;
}

std::vector<LaurentPolynomial::Term> collect(TermMap&& map) {
  std::vector<LaurentPolynomial::Term> out;
  out.reserve(map.size());
  for (auto& [e, c] : map)
    if (c != 0) out.emplace_back(e, std::move(c));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void accumulate(TermMap& acc, std::span<const LaurentPolynomial::Term> f,
                std::span<const LaurentPolynomial::Term> g) {
  for (const auto& [ef, cf] : f)
    for (const auto& [eg, cg] : g) {
      Integer& slot = acc[add(ef, eg)];
      mpz_addmul(slot.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    }
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim)
    throw Error(ErrorKind::UnsupportedDimension, "Laurent polynomial dimension out of range");
}

LaurentPolynomial LaurentPolynomial::from_terms(int dim, std::vector<Term> terms) {
  LaurentPolynomial p(dim);
  TermMap map;
  for (auto& [e, c] : terms) {
    for (std::size_t i = static_cast<std::size_t>(dim); i < e.size(); ++i)
      if (e[i] != 0)
        throw Error(ErrorKind::DimensionMismatch, "exponent has nonzero entries beyond dim");
    map[e] += c;
  }
  p.terms_ = collect(std::move(map));
  return p;
}

LaurentPolynomial LaurentPolynomial::constant(int dim, const Integer& value) {
  return from_terms(dim, {{Exponent{}, value}});
}

Integer LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.first < x; });
  if (it == terms_.end() || it->first != e) return 0;
  return it->second;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  static constexpr char kNames[kMaxDim] = {'x', 'y', 'z', 'w'};
  std::string out;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    const auto& [e, c] = terms_[t];
    std::string monomial;
    for (int i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += kNames[i];
      if (e[i] != 1) monomial += "^" + std::to_string(e[i]);
    }
    Integer magnitude = abs(c);
    std::string term;
    if (monomial.empty()) {
      term = magnitude.get_str();
    } else {
      term = magnitude == 1 ? monomial : magnitude.get_str() + "*" + monomial;
    }
    if (t == 0) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

LaurentPolynomial from_fan_polytope(const Polytope& p, MonomialSupport support) {
  if (!p.origin_in_interior()) throw Error(ErrorKind::OriginNotInterior, "origin not interior");
  const auto points =
      support == MonomialSupport::Vertices ? p.vertices() : p.boundary_lattice_points();
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& v : points) {
    Exponent e{};
    for (std::size_t i = 0; i < v.dim(); ++i) e[i] = narrow_exponent(v[i]);
    terms.emplace_back(e, Integer(1));
  }
  return LaurentPolynomial::from_terms(p.dim(), std::move(terms));
}

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g,
                           unsigned threads) {
  if (f.dim() != g.dim())
    throw Error(ErrorKind::DimensionMismatch, "multiply: operands of different dimension");
  // Split the larger factor into contiguous chunks, one partial map each.
  const bool f_larger = f.size() >= g.size();
  std::span<const LaurentPolynomial::Term> big = f_larger ? f.terms() : g.terms();
  std::span<const LaurentPolynomial::Term> small = f_larger ? g.terms() : f.terms();

  unsigned workers = resolve_thread_count(threads);
  if (big.size() < 256) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(big.size(), 1)));

  std::vector<TermMap> partial(workers);
  if (workers == 1) {
    accumulate(partial[0], big, small);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(workers);
    const std::size_t chunk = (big.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(big.size(), w * chunk);
      const std::size_t end = std::min(big.size(), begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          accumulate(partial[w], big.subspan(begin, end - begin), small);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : failures)
      if (e) std::rethrow_exception(e);
    for (unsigned w = 1; w < workers; ++w)
      for (auto& [e, c] : partial[w]) partial[0][e] += c;
  }

  LaurentPolynomial out(f.dim());
  out = LaurentPolynomial::from_terms(f.dim(), collect(std::move(partial[0])));
  return out;
}

Integer constant_term(const LaurentPolynomial& f) { return f.coefficient(Exponent{}); }

LaurentPolynomial transform_exponents(const LaurentPolynomial& f, const IntMatrix& m) {
  const auto d = static_cast<std::size_t>(f.dim());
  if (m.rows() != d || m.cols() != d)
    throw Error(ErrorKind::DimensionMismatch, "transform_exponents: matrix shape");
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& [e, c] : f.terms()) {
    Exponent out{};
    for (std::size_t r = 0; r < d; ++r) {
      Integer s = 0;
      for (std::size_t k = 0; k < d; ++k) s += m(r, k) * e[k];
      out[r] = narrow_exponent(s);
    }
    terms.emplace_back(out, c);
  }
  return LaurentPolynomial::from_terms(f.dim(), std::move(terms));
}

namespace {

struct NewtonBound {
  std::array<std::int64_t, kMaxDim> normal{};
  std::int64_t level = 0;
};

// Facet inequalities of Newton(W); empty when W is not full-dimensional (the
// filter is then skipped, which never changes the output).
std::vector<NewtonBound> newton_bounds(const LaurentPolynomial& w) {
  if (w.dim() < kMinDim || w.is_zero()) return {};
  std::vector<LatticeVector> pts;
  for (const auto& [e, c] : w.terms()) {
    std::vector<Integer> coords;
    for (int i = 0; i < w.dim(); ++i) coords.emplace_back(e[i]);
    pts.emplace_back(std::move(coords));
  }
  std::vector<NewtonBound> out;
  try {
    const Polytope newton = convex_hull(pts, w.dim());
    for (const auto& f : newton.facets()) {
      NewtonBound b;
      for (std::size_t i = 0; i < f.normal.dim(); ++i) {
        auto v = to_int64(f.normal[i]);
        if (!v) return {};
        b.normal[i] = *v;
      }
      auto l = to_int64(f.level);
      if (!l) return {};
      b.level = *l;
      out.push_back(b);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotFullDimensional) return {};
    throw;
  }
  return out;
}

}  // namespace

PeriodSequence period_sequence(const LaurentPolynomial& w, int dmax, const PeriodOptions& options) {
  if (dmax < 0) throw Error(ErrorKind::InvalidArgument, "dmax must be nonnegative");
  PeriodSequence seq;
  seq.source = "W = " + w.to_string();
  seq.terms.reserve(static_cast<std::size_t>(dmax) + 1);

  const std::vector<NewtonBound> bounds = options.prune ? newton_bounds(w) : std::vector<NewtonBound>{};
  LaurentPolynomial power = LaurentPolynomial::constant(w.dim(), 1);

  for (int d = 0; d <= dmax; ++d) {
    seq.terms.push_back(constant_term(power));
    if (d == dmax) break;
    if (!bounds.empty()) {
      // Keep e only if -e lies in r * Newton(W), r the remaining steps.
      const std::int64_t r = dmax - d;
      std::vector<LaurentPolynomial::Term> kept;
      for (const auto& term : power.terms()) {
        bool inside = true;
        for (const auto& b : bounds) {
          std::int64_t s = 0;
          for (int i = 0; i < w.dim(); ++i) s -= b.normal[i] * term.first[i];
          if (s < r * b.level) {
            inside = false;
            break;
          }
        }
        if (inside) kept.push_back(term);
      }
      power = LaurentPolynomial::from_terms(w.dim(), std::move(kept));
    }
    power = multiply(power, w, options.threads);
  }
  return seq;
}

Integer period_term_direct(const LaurentPolynomial& w, int d, int max_degree) {
  if (d < 0) throw Error(ErrorKind::InvalidArgument, "degree must be nonnegative");
  if (d > max_degree)
    throw Error(ErrorKind::BudgetExceeded, "oracle degree " + std::to_string(d) +
                                               " exceeds the cap " + std::to_string(max_degree));
  const auto& terms = w.terms();
  const std::size_t n = terms.size();
  if (d == 0) return 1;
  if (n == 0) return 0;

  std::vector<Integer> fact(static_cast<std::size_t>(d) + 1);
  fact[0] = 1;
  for (int i = 1; i <= d; ++i) fact[i] = fact[i - 1] * i;

  const int dim = w.dim();
  std::vector<int> a(n, 0);
  Integer total = 0;

  // Enumerate every composition a_0 + ... + a_{n-1} = d.
  std::function<void(std::size_t, int, std::array<std::int64_t, kMaxDim>)> visit =
      [&](std::size_t k, int remaining, std::array<std::int64_t, kMaxDim> sum) {
        if (k + 1 == n) {
          a[k] = remaining;
          for (int i = 0; i < dim; ++i)
            if (sum[i] + static_cast<std::int64_t>(remaining) * terms[k].first[i] != 0) return;
          Integer term = fact[d];
          for (std::size_t v = 0; v < n; ++v) {
            term /= fact[a[v]];
            if (a[v] > 0 && terms[v].second != 1) {
              Integer p;
              mpz_pow_ui(p.get_mpz_t(), terms[v].second.get_mpz_t(),
                         static_cast<unsigned long>(a[v]));
              term *= p;
            }
          }
          total += term;
          return;
        }
        for (int take = 0; take <= remaining; ++take) {
          a[k] = take;
          auto next = sum;
          for (int i = 0; i < dim; ++i) next[i] += static_cast<std::int64_t>(take) * terms[k].first[i];
          visit(k + 1, remaining - take, next);
        }
      };
  visit(0, d, {});
  return total;
}

}  // namespace conifold
