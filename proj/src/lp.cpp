#include "conifold/lp.hpp"

#include "conifold/error.hpp"

namespace conifold::lp {

Result maximize(std::span<const Rational> objective, const RationalMatrix& constraints,
                std::span<const Rational> bounds) {
  const std::size_t m = constraints.rows();
  const std::size_t n = objective.size();
  if (bounds.size() != m || (m > 0 && constraints.cols() != n))
    throw Error(ErrorKind::DimensionMismatch, "lp: inconsistent problem dimensions");
  for (const auto& b : bounds)
    if (b < 0) throw Error(ErrorKind::InvalidArgument, "lp: right-hand side must be nonnegative");

  // Tableau columns: n structural, m slack, then the right-hand side.
  const std::size_t width = n + m + 1;
  RationalMatrix t(m + 1, width);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t(i, j) = constraints(i, j);
    t(i, n + i) = 1;
    t(i, width - 1) = bounds[i];
  }
  for (std::size_t j = 0; j < n; ++j) t(m, j) = -objective[j];

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    std::size_t entering = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (t(m, j) < 0) {
        entering = j;
        break;
      }
    }
    if (entering == width) break;

    std::size_t leaving = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, entering) <= 0) continue;
      Rational ratio = t(i, width - 1) / t(i, entering);
      if (leaving == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == m) return {Status::Unbounded, 0, {}};

    const Rational pivot = t(leaving, entering);
    for (std::size_t j = 0; j < width; ++j)
      if (t(leaving, j) != 0) t(leaving, j) /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leaving || t(i, entering) == 0) continue;
      const Rational factor = t(i, entering);
      for (std::size_t j = 0; j < width; ++j)
        if (t(leaving, j) != 0) t(i, j) -= factor * t(leaving, j);
    }
    basis[leaving] = entering;
  }

  Result out;
  out.value = t(m, width - 1);
  out.point.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) out.point[basis[i]] = t(i, width - 1);
  return out;
}

}  // namespace conifold::lp
