#include "conifold/recurrence.hpp"

#include <string>

#include "conifold/error.hpp"

namespace conifold {

namespace {

// Rows d = first..last of the system sum_{i,j} a_ij d^j c_{d+i} = 0.
IntMatrix recurrence_system(std::span<const Integer> c, int order, int degree, std::size_t first,
                            std::size_t last) {
  const std::size_t unknowns = static_cast<std::size_t>((order + 1) * (degree + 1));
  IntMatrix m(last >= first ? last - first + 1 : 0, unknowns);
  for (std::size_t d = first; d <= last && d + order < c.size(); ++d) {
    Integer power = 1;
    std::vector<Integer> powers;
    for (int j = 0; j <= degree; ++j) {
      powers.push_back(power);
      power *= static_cast<unsigned long>(d);
    }
    for (int i = 0; i <= order; ++i)
      for (int j = 0; j <= degree; ++j)
        m(d - first, static_cast<std::size_t>(i * (degree + 1) + j)) = powers[j] * c[d + i];
  }
  return m;
}

Recurrence from_solution(const std::vector<Rational>& x, int order, int degree) {
  Recurrence rec;
  rec.order = order;
  rec.degree = degree;
  rec.coeffs.assign(order + 1, std::vector<Rational>(degree + 1));
  for (int i = 0; i <= order; ++i)
    for (int j = 0; j <= degree; ++j) rec.coeffs[i][j] = x[static_cast<std::size_t>(i * (degree + 1) + j)];
  return rec;
}

bool is_zero_polynomial(const std::vector<Rational>& p) {
  for (const auto& q : p)
    if (q != 0) return false;
  return true;
}

}  // namespace

Recurrence normalize(const Recurrence& rec) {
  std::vector<Rational> flat;
  for (const auto& p : rec.coeffs) flat.insert(flat.end(), p.begin(), p.end());
  std::vector<Integer> ints = primitive_integer_vector(flat);
  if (content(ints) == 0) throw Error(ErrorKind::InvalidArgument, "zero recurrence");

  // Sign convention: the highest nonzero coefficient of the last nonzero p_i.
  int sign = 0;
  for (std::size_t k = ints.size(); k-- > 0 && sign == 0;) sign = sgn(ints[k]);

  Recurrence out = rec;
  std::size_t k = 0;
  for (auto& p : out.coeffs)
    for (auto& q : p) q = Rational(sign < 0 ? Integer(-ints[k++]) : ints[k++]);
  return out;
}

std::size_t required_terms(const RecurrenceSearch& s) {
  return static_cast<std::size_t>((s.max_order + 1) * (s.max_degree + 1) + s.max_order + s.holdout);
}

std::optional<Recurrence> find_recurrence_cell(std::span<const Integer> c, int order, int degree,
                                               int holdout) {
  if (order < 0 || degree < 0 || holdout < 0)
    throw Error(ErrorKind::InvalidArgument, "order, degree and holdout must be nonnegative");
  if (c.size() <= static_cast<std::size_t>(order + holdout))
    throw Error(ErrorKind::InsufficientData, "sequence too short for the requested cell");
  const std::size_t last = c.size() - 1 - static_cast<std::size_t>(order);
  const std::size_t train_last = last - static_cast<std::size_t>(holdout);

  if (nullspace(recurrence_system(c, order, degree, 0, train_last)).empty()) return std::nullopt;
  const auto full = nullspace(recurrence_system(c, order, degree, 0, last));
  for (const auto& x : full) {
    Recurrence rec = from_solution(x, order, degree);
    if (is_zero_polynomial(rec.coeffs.back())) continue;
    return normalize(rec);
  }
  return std::nullopt;
}

std::optional<Recurrence> find_recurrence(std::span<const Integer> c, const RecurrenceSearch& s) {
  if (s.max_order < 0 || s.max_degree < 0 || s.holdout < 0)
    throw Error(ErrorKind::InvalidArgument, "search bounds must be nonnegative");
  if (c.size() < required_terms(s))
    throw Error(ErrorKind::InsufficientData,
                "need at least " + std::to_string(required_terms(s)) + " terms, got " +
                    std::to_string(c.size()));
  for (int r = 0; r <= s.max_order; ++r)
    for (int D = 0; D <= s.max_degree; ++D)
      if (auto rec = find_recurrence_cell(c, r, D, s.holdout)) return rec;
  return std::nullopt;
}

bool verify_recurrence(const Recurrence& rec, std::span<const Integer> c) {
  for (std::size_t d = 0; d + static_cast<std::size_t>(rec.order) < c.size(); ++d) {
    Rational sum = 0;
    for (int i = 0; i <= rec.order; ++i) {
      Rational p = 0;
      Rational power = 1;
      for (const auto& a : rec.coeffs[i]) {
        p += a * power;
        power *= static_cast<unsigned long>(d);
      }
      sum += p * Rational(c[d + i]);
    }
    if (sum != 0) return false;
  }
  return true;
}

std::vector<Integer> stride_subsequence(std::span<const Integer> c, int stride) {
  if (stride < 1) throw Error(ErrorKind::InvalidArgument, "stride must be positive");
  std::vector<Integer> out;
  for (std::size_t k = 0; k < c.size(); k += static_cast<std::size_t>(stride)) out.push_back(c[k]);
  return out;
}

std::string gw_label(int d) {
  static const char* kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string exponent;
  for (char ch : std::to_string(d - 2)) exponent += kSuperscripts[ch - '0'];
  return "⟨ψ" + exponent + "[pt]⟩_{0,1," + std::to_string(d) + "}";
}

std::vector<GwRecord> gw_labeling(const PeriodSequence& c) {
  std::vector<GwRecord> out;
  for (std::size_t d = 0; d < c.terms.size(); ++d) {
    GwRecord r;
    r.d = static_cast<int>(d);
    if (d >= 2) r.label = gw_label(r.d);
    r.value = c.terms[d];
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace conifold
