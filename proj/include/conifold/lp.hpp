#pragma once

#include <span>
#include <vector>

#include "conifold/exact.hpp"

namespace conifold::lp {

enum class Status { Optimal, Unbounded };

struct Result {
  Status status = Status::Optimal;
  Rational value;               // objective at the optimum
  std::vector<Rational> point;  // primal solution, one entry per column of A
};

// Exact primal simplex with Bland's rule:
//   maximize c.x  subject to  A x <= b,  x >= 0.
// Requires b >= 0 so that x = 0 is a feasible starting vertex.
Result maximize(std::span<const Rational> objective, const RationalMatrix& constraints,
                std::span<const Rational> bounds);

}  // namespace conifold::lp
