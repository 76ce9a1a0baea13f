#pragma once

// Test-only oracles. Each one recomputes a quantity by a route that shares no
// code with the library path it checks.

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "conifold/exact.hpp"
#include "conifold/lattice.hpp"

namespace conifold::testing {

inline IntMatrix identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

// Product of random elementary shears, swaps and sign flips: determinant +-1.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937& rng, int steps = 12) {
  IntMatrix m = identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> shear(-2, 2);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int s = 0; s < steps; ++s) {
    IntMatrix e = identity(n);
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) j = (i + 1) % n;
    switch (kind(rng)) {
      case 0:
      case 1:
        e(i, j) = shear(rng);
        break;
      case 2:
        e(i, i) = 0;
        e(j, j) = 0;
        e(i, j) = 1;
        e(j, i) = 1;
        break;
      default:
        e(i, i) = -1;
        break;
    }
    m = matmul(e, m);
  }
  return m;
}

// Leibniz expansion over all permutations.
inline Integer leibniz_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t r = 0; r < n && term != 0; ++r) term *= m(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    if (!visit(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const IntMatrix& m) {
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t k = limit; k > 0; --k) {
    bool found = false;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, k);
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(rows[r], cols[c]);
        found = leibniz_determinant(sub) != 0;
        return !found;
      });
      return !found;
    });
    if (found) return k;
  }
  return 0;
}

inline Integer det3(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  IntMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    m(0, i) = a[i];
    m(1, i) = b[i];
    m(2, i) = c[i];
  }
  return leibniz_determinant(m);
}

// Is cone(generators) GL(3,Z)-isomorphic to the cone over the unit square
// with generators (0,0,1), (1,0,1), (1,1,1), (0,1,1)? Tries every matching of
// the four generators to the square's corners.
inline bool is_cone_over_unit_square(const std::vector<LatticeVector>& g) {
  if (g.size() != 4) return false;
  const std::array<LatticeVector, 4> target{LatticeVector{0, 0, 1}, LatticeVector{1, 0, 1},
                                            LatticeVector{1, 1, 1}, LatticeVector{0, 1, 1}};
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  do {
    // M maps target[k] -> g[perm[k]] for k = 0, 1, 3 (a basis); then check k = 2.
    const LatticeVector& t0 = target[0];
    const LatticeVector& t1 = target[1];
    const LatticeVector& t3 = target[3];
    const Integer dt = det3(t0, t1, t3);
    if (dt == 0) continue;
    const LatticeVector& a = g[perm[0]];
    const LatticeVector& b = g[perm[1]];
    const LatticeVector& d = g[perm[3]];
    if (abs(det3(a, b, d)) != abs(dt)) continue;
    // target[2] = t1 + t3 - t0, so its image is b + d - a.
    if (b + d - a == g[perm[2]]) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Vertices of the polar dual of a simplicial polytope by solving each facet's
// equations <u, v_i> = -1 with Cramer's rule and keeping feasible solutions.
inline std::vector<RationalVector> dual_vertices_by_cramer(const std::vector<LatticeVector>& verts) {
  std::vector<RationalVector> out;
  for_each_subset(verts.size(), 3, [&](const std::vector<std::size_t>& s) {
    const Integer det = det3(verts[s[0]], verts[s[1]], verts[s[2]]);
    if (det == 0) return true;
    RationalVector u(3);
    for (std::size_t col = 0; col < 3; ++col) {
      IntMatrix m(3, 3);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = c == col ? Integer(-1) : verts[s[r]][c];
      u[col] = Rational(leibniz_determinant(m), det);
      u[col].canonicalize();
    }
    const bool feasible = std::all_of(verts.begin(), verts.end(), [&](const LatticeVector& v) {
      Rational x = 0;
      for (std::size_t i = 0; i < 3; ++i) x += u[i] * Rational(v[i]);
      return x >= -1;
    });
    if (feasible) out.push_back(u);
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace conifold::testing
