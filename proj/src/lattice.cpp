#include "conifold/lattice.hpp"

#include <algorithm>
#include <string>

#include "conifold/error.hpp"
#include "hull.hpp"

namespace conifold {

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool LatticeVector::is_primitive() const { return content(coords_) == 1; }

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  std::vector<Integer> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
  return LatticeVector(std::move(c));
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  std::vector<Integer> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] - b[i];
  return LatticeVector(std::move(c));
}

LatticeVector operator*(const Integer& k, const LatticeVector& v) {
  std::vector<Integer> c(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) c[i] = k * v[i];
  return LatticeVector(std::move(c));
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const LatticeVector& a, const RationalVector& b) {
  if (a.dim() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

namespace {

void check_dimension(int dim) {
  if (dim < kMinDim || dim > kMaxDim)
    throw Error(ErrorKind::UnsupportedDimension,
                "dimension " + std::to_string(dim) + " outside the supported range 2..4");
}

// Lattice points of a facet: scan the bounding box of its vertices.
std::vector<LatticeVector> facet_lattice_points(const Facet& facet,
                                                const std::vector<Facet>& all_facets) {
  const std::size_t d = facet.normal.dim();
  std::vector<Integer> lo(facet.vertices.front().coords().begin(),
                          facet.vertices.front().coords().end());
  std::vector<Integer> hi = lo;
  for (const auto& v : facet.vertices)
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }

  std::vector<LatticeVector> points;
  std::vector<Integer> x = lo;
  for (;;) {
    LatticeVector p(x);
    if (dot(facet.normal, p) == facet.level &&
        std::all_of(all_facets.begin(), all_facets.end(),
                    [&](const Facet& f) { return dot(f.normal, p) >= f.level; }))
      points.push_back(std::move(p));
    std::size_t i = 0;
    while (i < d && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == d) break;
    ++x[i];
  }
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace

Polytope convex_hull(std::span<const LatticeVector> points, int dim) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "convex hull of an empty point set");
  check_dimension(dim);
  std::vector<detail::IntPoint> pts;
  pts.reserve(points.size());
  for (const auto& p : points) {
    if (p.dim() != static_cast<std::size_t>(dim))
      throw Error(ErrorKind::DimensionMismatch,
                  "point of length " + std::to_string(p.dim()) + " in dimension " +
                      std::to_string(dim));
    pts.emplace_back(p.coords().begin(), p.coords().end());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const detail::HullResult hull = detail::integer_hull(pts, dim);

  Polytope out;
  out.dim_ = dim;
  out.volume_ = hull.normalized_volume;
  std::vector<bool> is_vertex(pts.size(), false);
  for (auto i : hull.vertices) {
    is_vertex[i] = true;
    out.vertices_.emplace_back(pts[i]);
  }
  for (const auto& hf : hull.facets) {
    Facet f;
    f.normal = LatticeVector(hf.normal);
    f.level = hf.level;
    for (auto i : hf.points)
      if (is_vertex[i]) f.vertices.emplace_back(pts[i]);
    out.facets_.push_back(std::move(f));
  }
  for (auto& f : out.facets_) f.lattice_points = facet_lattice_points(f, out.facets_);
  return out;
}

RationalPolytope rational_convex_hull(std::span<const RationalVector> points, int dim) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "convex hull of an empty point set");
  check_dimension(dim);
  Integer scale = 1;
  for (const auto& p : points) {
    if (p.size() != static_cast<std::size_t>(dim))
      throw Error(ErrorKind::DimensionMismatch, "point dimension mismatch");
    const Integer l = lcm_of_denominators(p);
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), l.get_mpz_t());
  }
  std::vector<detail::IntPoint> pts;
  for (const auto& p : points) {
    detail::IntPoint q;
    for (const auto& x : p) q.emplace_back(x.get_num() * (scale / x.get_den()));
    pts.push_back(std::move(q));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const detail::HullResult hull = detail::integer_hull(pts, dim);
  const Rational inv_scale(Integer(1), scale);
  auto unscale = [&](const detail::IntPoint& q) {
    RationalVector r;
    for (const auto& x : q) {
      Rational v = Rational(x) * inv_scale;
      v.canonicalize();
      r.push_back(v);
    }
    return r;
  };

  RationalPolytope out;
  out.dim_ = dim;
  Integer scale_pow;
  mpz_pow_ui(scale_pow.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(dim));
  out.volume_ = hull.normalized_volume / Rational(scale_pow);
  out.volume_.canonicalize();
  std::vector<bool> is_vertex(pts.size(), false);
  for (auto i : hull.vertices) {
    is_vertex[i] = true;
    out.vertices_.push_back(unscale(pts[i]));
  }
  for (const auto& hf : hull.facets) {
    RationalFacet f;
    f.normal = LatticeVector(hf.normal);
    f.level = Rational(hf.level) * inv_scale;
    f.level.canonicalize();
    for (auto i : hf.points)
      if (is_vertex[i]) f.vertices.push_back(unscale(pts[i]));
    out.facets_.push_back(std::move(f));
  }
  return out;
}

std::size_t Polytope::vertex_index(const LatticeVector& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || !(*it == v)) return vertices_.size();
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Polytope::origin_in_interior() const {
  return std::all_of(facets_.begin(), facets_.end(), [](const Facet& f) { return f.level < 0; });
}

bool Polytope::contains(const LatticeVector& p) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(f.normal, p) >= f.level; });
}

std::vector<LatticeVector> Polytope::boundary_lattice_points() const {
  std::vector<LatticeVector> out;
  for (const auto& f : facets_) out.insert(out.end(), f.lattice_points.begin(), f.lattice_points.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool RationalPolytope::origin_in_interior() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [](const RationalFacet& f) { return f.level < 0; });
}

bool RationalPolytope::is_integral() const {
  for (const auto& v : vertices_)
    for (const auto& x : v)
      if (x.get_den() != 1) return false;
  return true;
}

RationalPolytope polar_dual(const Polytope& p) {
  if (!p.origin_in_interior())
    throw Error(ErrorKind::OriginNotInterior, "origin not interior");
  std::vector<RationalVector> duals;
  for (const auto& f : p.facets()) {
    RationalVector u;
    for (const auto& x : f.normal.coords()) {
      Rational q(-x, f.level);
      q.canonicalize();
      u.push_back(q);
    }
    duals.push_back(std::move(u));
  }
  return rational_convex_hull(duals, p.dim());
}

RationalPolytope polar_dual(const RationalPolytope& p) {
  if (!p.origin_in_interior())
    throw Error(ErrorKind::OriginNotInterior, "origin not interior");
  std::vector<RationalVector> duals;
  for (const auto& f : p.facets()) {
    RationalVector u;
    for (const auto& x : f.normal.coords()) {
      Rational q = -Rational(x) / f.level;
      q.canonicalize();
      u.push_back(q);
    }
    duals.push_back(std::move(u));
  }
  return rational_convex_hull(duals, p.dim());
}

Polytope to_lattice_polytope(const RationalPolytope& p) {
  if (!p.is_integral())
    throw Error(ErrorKind::NotIntegral, "polytope has non-integral vertices");
  std::vector<LatticeVector> pts;
  for (const auto& v : p.vertices()) {
    std::vector<Integer> c;
    for (const auto& x : v) c.push_back(x.get_num());
    pts.emplace_back(std::move(c));
  }
  return convex_hull(pts, p.dim());
}

bool is_reflexive(const Polytope& p) {
  if (!p.origin_in_interior())
    throw Error(ErrorKind::OriginNotInterior, "origin not interior");
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [](const Facet& f) { return f.level == -1; });
}

Rational normalized_volume(const Polytope& p) { return p.volume_; }

Rational normalized_volume(const RationalPolytope& p) { return p.volume_; }

LatticeVector apply(const IntMatrix& m, const LatticeVector& v) {
  if (m.cols() != v.dim()) throw Error(ErrorKind::DimensionMismatch, "apply: dimension mismatch");
  std::vector<Integer> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return LatticeVector(std::move(out));
}

Polytope transform(const Polytope& p, const IntMatrix& m) {
  std::vector<LatticeVector> image;
  for (const auto& v : p.vertices()) image.push_back(apply(m, v));
  return convex_hull(image, static_cast<int>(m.rows()));
}

}  // namespace conifold
