#include "hull.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "conifold/error.hpp"

namespace conifold::detail {

Integer dot(const IntPoint& a, const IntPoint& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

struct Simplex {
  std::vector<std::size_t> ids;  // dim point indices spanning the hyperplane
  IntPoint normal;
  Integer level;
  bool alive = true;
};

std::size_t affine_rank(const std::vector<IntPoint>& points, const std::vector<std::size_t>& ids,
                        int dim) {
  if (ids.size() < 2) return 0;
  IntMatrix m(ids.size() - 1, static_cast<std::size_t>(dim));
  for (std::size_t r = 1; r < ids.size(); ++r)
    for (int c = 0; c < dim; ++c) m(r - 1, c) = points[ids[r]][c] - points[ids[0]][c];
  return rank(m);
}

// Normal of the hyperplane through dim affinely independent points, oriented
// so that `interior / weight` lies strictly on the positive side.
void orient_hyperplane(const std::vector<IntPoint>& points, Simplex& s, const IntPoint& interior,
                       const Integer& weight, int dim) {
  const auto d = static_cast<std::size_t>(dim);
  const IntPoint& base = points[s.ids[0]];
  IntMatrix diffs(d - 1, d);
  for (std::size_t r = 1; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) diffs(r - 1, c) = points[s.ids[r]][c] - base[c];

  IntPoint n(d);
  for (std::size_t skip = 0; skip < d; ++skip) {
    IntMatrix minor(d - 1, d - 1);
    for (std::size_t r = 0; r + 1 < d; ++r)
      for (std::size_t c = 0, k = 0; c < d; ++c)
        if (c != skip) minor(r, k++) = diffs(r, c);
    n[skip] = determinant(minor);
    if (skip % 2 == 1) n[skip] = -n[skip];
  }
  const Integer g = content(n);
  if (g == 0) throw std::logic_error("hull: degenerate simplex");
  for (auto& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());

  Integer level = dot(n, base);
  const Integer side = dot(n, interior) - weight * level;
  if (side == 0) throw std::logic_error("hull: interior point on a supporting hyperplane");
  if (side < 0) {
    for (auto& x : n) x = -x;
    level = -level;
  }
  s.normal = std::move(n);
  s.level = std::move(level);
}

}  // namespace

HullResult integer_hull(const std::vector<IntPoint>& points, int dim) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "convex hull of an empty point set");
  if (dim < 1) throw Error(ErrorKind::UnsupportedDimension, "dimension must be positive");
  const auto d = static_cast<std::size_t>(dim);
  for (const auto& p : points)
    if (p.size() != d)
      throw Error(ErrorKind::DimensionMismatch,
                  "point of length " + std::to_string(p.size()) + " in dimension " +
                      std::to_string(dim));

  // Initial simplex: greedily extend an affinely independent set.
  std::vector<std::size_t> simplex{0};
  for (std::size_t i = 1; i < points.size() && simplex.size() < d + 1; ++i) {
    simplex.push_back(i);
    if (affine_rank(points, simplex, dim) < simplex.size() - 1) simplex.pop_back();
  }
  if (simplex.size() < d + 1)
    throw Error(ErrorKind::NotFullDimensional,
                "points span an affine subspace of dimension " +
                    std::to_string(simplex.size() - 1) + " < " + std::to_string(dim));

  // The centroid of the initial simplex, kept as sum / weight.
  IntPoint interior(d, 0);
  for (auto id : simplex)
    for (std::size_t c = 0; c < d; ++c) interior[c] += points[id][c];
  const Integer weight = static_cast<unsigned long>(d + 1);

  std::vector<Simplex> faces;
  for (std::size_t skip = 0; skip <= d; ++skip) {
    Simplex s;
    for (std::size_t k = 0; k <= d; ++k)
      if (k != skip) s.ids.push_back(simplex[k]);
    orient_hyperplane(points, s, interior, weight, dim);
    faces.push_back(std::move(s));
  }

  std::vector<bool> in_simplex(points.size(), false);
  for (auto id : simplex) in_simplex[id] = true;

  for (std::size_t p = 0; p < points.size(); ++p) {
    if (in_simplex[p]) continue;
    std::map<std::vector<std::size_t>, int> ridge_count;
    bool any_visible = false;
    for (auto& f : faces) {
      if (!f.alive || dot(f.normal, points[p]) >= f.level) continue;
      any_visible = true;
      f.alive = false;
      for (std::size_t skip = 0; skip < d; ++skip) {
        std::vector<std::size_t> ridge;
        for (std::size_t k = 0; k < d; ++k)
          if (k != skip) ridge.push_back(f.ids[k]);
        std::sort(ridge.begin(), ridge.end());
        ++ridge_count[ridge];
      }
    }
    if (!any_visible) continue;
    std::erase_if(faces, [](const Simplex& f) { return !f.alive; });
    // A ridge seen by exactly one visible simplex borders an invisible one.
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      Simplex s;
      s.ids = ridge;
      s.ids.push_back(p);
      orient_hyperplane(points, s, interior, weight, dim);
      faces.push_back(std::move(s));
    }
  }

  HullResult out;

  // Boundary simplices coned from the interior point give the volume.
  Rational volume = 0;
  for (const auto& f : faces) {
    IntMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m(r, c) = weight * points[f.ids[r]][c] - interior[c];
    Integer det = determinant(m);
    volume += Rational(abs(det));
  }
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), weight.get_mpz_t(), d);
  volume /= Rational(scale);
  volume.canonicalize();
  out.normalized_volume = volume;

  std::map<IntPoint, Integer> planes;
  for (const auto& f : faces) planes.emplace(f.normal, f.level);

  std::vector<std::vector<std::size_t>> incident(points.size());
  for (const auto& [normal, level] : planes) {
    HullFacet facet{normal, level, {}};
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (dot(normal, points[i]) == level) {
        facet.points.push_back(i);
        incident[i].push_back(out.facets.size());
      }
    }
    out.facets.push_back(std::move(facet));
  }

  // A boundary point is a vertex iff the normals of its facets span R^d.
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (incident[i].size() < d) continue;
    IntMatrix normals(incident[i].size(), d);
    for (std::size_t r = 0; r < incident[i].size(); ++r)
      for (std::size_t c = 0; c < d; ++c) normals(r, c) = out.facets[incident[i][r]].normal[c];
    if (rank(normals) == d) out.vertices.push_back(i);
  }
  return out;
}

}  // namespace conifold::detail
