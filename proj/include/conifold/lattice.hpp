#pragma once

// Lattice polytopes with exact facet data, polar duals and normalized volumes.
// Supported dimensions are 2 through 4; nodal analysis uses 3 only.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "conifold/exact.hpp"

namespace conifold {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 4;

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Integer> coords() const noexcept { return coords_; }

  bool is_primitive() const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ < b.coords_;
  }
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator*(const Integer& k, const LatticeVector& v);

 private:
  std::vector<Integer> coords_;
};

using RationalVector = std::vector<Rational>;

Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const LatticeVector& a, const RationalVector& b);

struct Facet {
  LatticeVector normal;  // primitive, inward
  Integer level;         // normal . x == level on the facet, > level inside
  std::vector<LatticeVector> vertices;        // ascending
  std::vector<LatticeVector> lattice_points;  // ascending, vertices included
};

class Polytope {
 public:
  int dim() const noexcept { return dim_; }
  const std::vector<LatticeVector>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }

  // Position of v in vertices(), or vertices().size() when v is not a vertex.
  std::size_t vertex_index(const LatticeVector& v) const;

  bool origin_in_interior() const;
  bool contains(const LatticeVector& p) const;
  // Union of all facet lattice points, ascending.
  std::vector<LatticeVector> boundary_lattice_points() const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend Polytope convex_hull(std::span<const LatticeVector>, int);
  friend Rational normalized_volume(const Polytope&);

  int dim_ = 0;
  std::vector<LatticeVector> vertices_;
  std::vector<Facet> facets_;
  Rational volume_;
};

struct RationalFacet {
  LatticeVector normal;  // primitive, inward
  Rational level;
  std::vector<RationalVector> vertices;
};

class RationalPolytope {
 public:
  int dim() const noexcept { return dim_; }
  const std::vector<RationalVector>& vertices() const noexcept { return vertices_; }
  const std::vector<RationalFacet>& facets() const noexcept { return facets_; }

  bool origin_in_interior() const;
  bool is_integral() const;

  friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend RationalPolytope rational_convex_hull(std::span<const RationalVector>, int);
  friend Rational normalized_volume(const RationalPolytope&);

  int dim_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<RationalFacet> facets_;
  Rational volume_;
};

// Deduplicates, discards non-extremal points and orders everything
// canonically. Throws EmptyInput, NotFullDimensional, UnsupportedDimension.
Polytope convex_hull(std::span<const LatticeVector> points, int dim);
RationalPolytope rational_convex_hull(std::span<const RationalVector> points, int dim);

// {u : <u, v> >= -1 for every vertex v}. Throws OriginNotInterior.
RationalPolytope polar_dual(const Polytope& p);
RationalPolytope polar_dual(const RationalPolytope& p);

// Throws NotIntegral when some vertex has a non-integer coordinate.
Polytope to_lattice_polytope(const RationalPolytope& p);

// Every facet at level -1. Throws OriginNotInterior.
bool is_reflexive(const Polytope& p);

Rational normalized_volume(const Polytope& p);
Rational normalized_volume(const RationalPolytope& p);

// Linear images, used for lattice-basis changes.
LatticeVector apply(const IntMatrix& m, const LatticeVector& v);
Polytope transform(const Polytope& p, const IntMatrix& m);

}  // namespace conifold
