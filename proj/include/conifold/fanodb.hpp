#pragma once

// Line-oriented JSON database of named varieties and matching of computed
// transition invariants and period prefixes against it.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "conifold/exact.hpp"
#include "conifold/laurent.hpp"
#include "conifold/nodal.hpp"

namespace conifold {

struct PeriodRecord {
  std::string name;
  Integer degree;
  std::int64_t e = 0;
  std::int64_t b2 = 0;
  std::int64_t b3 = 0;
  std::vector<Integer> period_prefix;
  std::string provenance = "user";  // "computed" | "user"

  friend bool operator==(const PeriodRecord&, const PeriodRecord&) = default;
};

// One record per non-blank line. Throws ParseError (with line number and
// field) or DuplicateName.
std::vector<PeriodRecord> parse_database(std::istream& in, const std::string& source = "<stream>");
std::vector<PeriodRecord> load_database(const std::filesystem::path& path);

std::string serialize_record(const PeriodRecord& record);

// Record of the smoothing described by `report`, with the first
// `prefix_length` period terms.
PeriodRecord make_record(const std::string& name, const TransitionReport& report,
                         const PeriodSequence& periods, std::size_t prefix_length);

struct Candidate {
  std::string name;
  std::size_t overlap = 0;  // number of period terms compared

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Records agreeing on (degree, e, b2, b3) and on every overlapping period
// term, longest overlap first, then by name.
std::vector<Candidate> match(const TransitionReport& report, const PeriodSequence& periods,
                             std::span<const PeriodRecord> db);

}  // namespace conifold
