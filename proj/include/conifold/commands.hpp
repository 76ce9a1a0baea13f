#pragma once

// The CLI subcommands as functions from parsed inputs to JSON documents, so
// that tests and bindings can drive them without a process boundary.

#include <cstddef>
#include <span>
#include <string>

#include "conifold/error.hpp"
#include "conifold/fanodb.hpp"
#include "conifold/json_io.hpp"
#include "conifold/nodal.hpp"
#include "conifold/recurrence.hpp"

namespace conifold {

struct Config {
  int dmax = 20;
  bool prune = true;
  std::size_t resolution_cap = kDefaultResolutionCap;
  int holdout = 5;
  SmoothingMode mode = SmoothingMode::Fano;
  MonomialSupport support = MonomialSupport::Vertices;
  bool find_recurrence = false;
  int max_order = 4;
  int max_degree = 3;
  int stride = 1;
  unsigned threads = 0;  // 0: CONIFOLD_THREADS or hardware concurrency
};

Json periods_command(const Polytope& p, const Config& config);
Json transition_command(const Polytope& p, const Config& config);
Json resolve_command(const Polytope& p, const Config& config);
Json match_command(const Polytope& p, std::span<const PeriodRecord> db, const Config& config);
Json recurrence_command(std::span<const Integer> sequence, const Config& config);
Json record_command(const Polytope& p, const std::string& name, const Config& config);

// Aligned plain-text rendering of a command's JSON; presentation only.
std::string render_table(const std::string& command, const Json& doc);

// 0 success, 2 input error, 3 budget exceeded, 4 internal invariant violation.
int exit_code_for(ErrorKind kind) noexcept;

}  // namespace conifold
