#pragma once

// Linear recurrences with polynomial coefficients for integer sequences, and
// the Gromov-Witten labeling of period sequences.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conifold/exact.hpp"
#include "conifold/laurent.hpp"

namespace conifold {

// sum_{i=0}^{order} p_i(d) c_{d+i} = 0 with p_i(d) = sum_j coeffs[i][j] d^j.
struct Recurrence {
  int order = 0;
  int degree = 0;
  std::vector<std::vector<Rational>> coeffs;  // (order+1) x (degree+1)

  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

// Integer coefficients with content 1; the top nonzero coefficient of p_order
// is positive. Throws InvalidArgument when every coefficient vanishes.
Recurrence normalize(const Recurrence& rec);

struct RecurrenceSearch {
  int max_order = 4;
  int max_degree = 3;
  int holdout = 5;
};

// Smallest number of terms find_recurrence accepts for these bounds.
std::size_t required_terms(const RecurrenceSearch& search);

// Tests one (order, degree) cell: the recurrence must annihilate the training
// window (all but the last `holdout` equations) and then the full sequence.
std::optional<Recurrence> find_recurrence_cell(std::span<const Integer> c, int order, int degree,
                                               int holdout);

// Scans (order, degree) lexicographically, order first. nullopt means
// NotFound; throws InsufficientData when c is shorter than required_terms().
std::optional<Recurrence> find_recurrence(std::span<const Integer> c,
                                          const RecurrenceSearch& search = {});

bool verify_recurrence(const Recurrence& rec, std::span<const Integer> c);

// c_0, c_s, c_2s, ...
std::vector<Integer> stride_subsequence(std::span<const Integer> c, int stride);

struct GwRecord {
  int d = 0;
  std::optional<std::string> label;  // absent for d = 0, 1
  Integer value;
};

// "⟨ψ^{d-2}[pt]⟩_{0,1,d}" with a superscript exponent, for every d >= 2.
std::string gw_label(int d);
std::vector<GwRecord> gw_labeling(const PeriodSequence& c);

}  // namespace conifold
