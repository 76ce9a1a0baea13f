#pragma once

// Nodal analysis of reflexive 3-polytopes: conifold squares, small
// resolutions, projectivity, smoothability and transition topology.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conifold/exact.hpp"
#include "conifold/lattice.hpp"

namespace conifold {

enum class FacetKind { SmoothTriangle, ConifoldSquare, Other };

std::string_view facet_kind_name(FacetKind kind) noexcept;

struct FacetClass {
  FacetKind kind = FacetKind::Other;
  // ConifoldSquare only: v1 is the lexicographically smallest vertex, v3 the
  // opposite corner (v1 + v3 == v2 + v4), v2 < v4.
  std::array<LatticeVector, 4> cycle;
};

// Throws NotReflexiveFacet when the facet level is not -1.
FacetClass classify_facet(const Facet& facet);

struct ConifoldSquare {
  std::size_t facet_index = 0;
  std::array<LatticeVector, 4> cycle;
};

struct NodalProfile {
  std::vector<ConifoldSquare> squares;     // in facet order
  std::vector<std::size_t> smooth_facets;  // SmoothTriangle facet indices

  std::size_t node_count() const noexcept { return squares.size(); }
};

// Throws UnsupportedDimension, NotReflexive, or WorseThanNodal naming every
// offending facet.
NodalProfile nodal_profile(const Polytope& p);

// Diag13 splits v1 v2 v3 | v1 v3 v4 (the resolution graphing (x:z));
// Diag24 splits v1 v2 v4 | v2 v3 v4 (the one graphing (x:w)).
enum class Diagonal : std::uint8_t { Diag13 = 0, Diag24 = 1 };

using Triangle = std::array<std::size_t, 3>;  // ascending indices into P.vertices()

struct SmallResolution {
  std::vector<Diagonal> diagonals;  // one per square
  std::vector<Triangle> triangles;  // ascending
  std::optional<bool> regular;      // filled in by the regularity check

  // '0' for Diag13, '1' for Diag24, in square order.
  std::string diagonal_string() const;
};

inline constexpr std::size_t kDefaultResolutionCap = 20;

// All 2^N diagonal choices; choice k assigns square i the bit i of k.
// Throws BudgetExceeded when N > cap.
std::vector<SmallResolution> enumerate_small_resolutions(const Polytope& p,
                                                         const NodalProfile& profile,
                                                         std::size_t cap = kDefaultResolutionCap);

struct RegularityCertificate {
  bool regular = false;
  Rational slack;                // optimal strictness margin, capped at 1
  std::vector<Rational> heights;  // one per vertex; strictly convex iff regular
};

// Decides by exact LP whether some height function on the vertices is
// strictly convex across every interior wall of the triangulation's fan.
RegularityCertificate regularity_certificate(const Polytope& p, const SmallResolution& res);
bool is_regular_triangulation(const Polytope& p, const SmallResolution& res);

struct RelationRank {
  std::size_t rank = 0;
  IntMatrix relations;  // N x V, row +1 at v1, v3 and -1 at v2, v4
};

RelationRank exceptional_relation_rank(const Polytope& p, const NodalProfile& profile);

enum class SmoothingMode { Fano, CalabiYau };

std::string_view mode_name(SmoothingMode mode) noexcept;

struct Smoothability {
  bool smoothable = false;
  std::string certificate;
  std::vector<Integer> lambda;  // all-nonzero relation, Calabi-Yau mode only
};

// Is there a rational lambda with lambda^T R = 0 and every lambda_i != 0?
Smoothability relation_certificate(const IntMatrix& relations);

Smoothability friedman_smoothable(const Polytope& p, const NodalProfile& profile,
                                  SmoothingMode mode);

struct TransitionOptions {
  SmoothingMode mode = SmoothingMode::Fano;
  std::size_t resolution_cap = kDefaultResolutionCap;
  unsigned threads = 1;
};

struct TransitionReport {
  std::int64_t nodes = 0;  // N
  std::int64_t relation_rank = 0;  // k
  std::int64_t e_res = 0;
  std::int64_t e_sm = 0;
  std::int64_t b2_res = 0;
  std::int64_t b2_sm = 0;
  std::int64_t b3_sm = 0;
  Integer degree;  // (-K)^3
  bool smoothable = false;
  SmoothingMode mode = SmoothingMode::Fano;
  std::string certificate;
  std::vector<Integer> lambda;
  std::vector<SmallResolution> resolutions;
};

TransitionReport transition_invariants(const Polytope& p, const TransitionOptions& options = {});

}  // namespace conifold
