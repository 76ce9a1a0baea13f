#include "conifold/nodal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "conifold/error.hpp"
#include "conifold/lp.hpp"
#include "conifold/parallel.hpp"

namespace conifold {

std::string_view facet_kind_name(FacetKind kind) noexcept {
  switch (kind) {
    case FacetKind::SmoothTriangle: return "SmoothTriangle";
    case FacetKind::ConifoldSquare: return "ConifoldSquare";
    case FacetKind::Other: return "Other";
  }
  return "Other";
}

std::string_view mode_name(SmoothingMode mode) noexcept {
  return mode == SmoothingMode::Fano ? "fano" : "cy";
}

namespace {

Integer det3(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool unimodular(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return abs(det3(a, b, c)) == 1;
}

std::string describe(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace

FacetClass classify_facet(const Facet& facet) {
  if (facet.level != -1)
    throw Error(ErrorKind::NotReflexiveFacet,
                "facet with normal " + describe(facet.normal) + " at level " +
                    facet.level.get_str() + ", expected -1");
  if (facet.normal.dim() != 3)
    throw Error(ErrorKind::UnsupportedDimension, "facet classification is three-dimensional only");

  FacetClass out;
  const auto& v = facet.vertices;
  const std::size_t points = facet.lattice_points.size();

  if (v.size() == 3 && points == 3 && unimodular(v[0], v[1], v[2])) {
    out.kind = FacetKind::SmoothTriangle;
    return out;
  }
  if (v.size() == 4 && points == 4) {
    for (std::size_t opposite = 1; opposite < 4; ++opposite) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 1; k < 4; ++k)
        if (k != opposite) rest.push_back(k);
      const auto& a = v[0];
      const auto& b = v[rest[0]];
      const auto& c = v[opposite];
      const auto& d = v[rest[1]];
      if (a + c == b + d && unimodular(a, b, c) && unimodular(a, c, d)) {
        out.kind = FacetKind::ConifoldSquare;
        out.cycle = {a, b, c, d};
        return out;
      }
    }
  }
  return out;
}

NodalProfile nodal_profile(const Polytope& p) {
  if (p.dim() != 3)
    throw Error(ErrorKind::UnsupportedDimension, "nodal analysis needs a three-dimensional polytope");
  if (!p.origin_in_interior())
    throw Error(ErrorKind::NotReflexive, "origin not interior");
  if (!is_reflexive(p)) throw Error(ErrorKind::NotReflexive, "polytope is not reflexive");

  NodalProfile profile;
  std::string offending;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const Facet& f = p.facets()[i];
    FacetClass cls = classify_facet(f);
    switch (cls.kind) {
      case FacetKind::SmoothTriangle:
        profile.smooth_facets.push_back(i);
        break;
      case FacetKind::ConifoldSquare:
        profile.squares.push_back({i, std::move(cls.cycle)});
        break;
      case FacetKind::Other:
        if (!offending.empty()) offending += "; ";
        offending += "facet " + std::to_string(i) + " normal " + describe(f.normal) + " with " +
                     std::to_string(f.vertices.size()) + " vertices and " +
                     std::to_string(f.lattice_points.size()) + " lattice points";
        break;
    }
  }
  if (!offending.empty())
    throw Error(ErrorKind::WorseThanNodal, "singularities worse than nodes: " + offending);
  return profile;
}

std::string SmallResolution::diagonal_string() const {
  std::string s;
  for (auto d : diagonals) s += d == Diagonal::Diag13 ? '0' : '1';
  return s;
}

std::vector<SmallResolution> enumerate_small_resolutions(const Polytope& p,
                                                         const NodalProfile& profile,
                                                         std::size_t cap) {
  const std::size_t n = profile.node_count();
  if (n > cap || n >= 63)
    throw Error(ErrorKind::BudgetExceeded, std::to_string(n) +
                                               " nodes exceed the resolution cap of " +
                                               std::to_string(cap));
  auto index = [&](const LatticeVector& v) {
    const std::size_t i = p.vertex_index(v);
    if (i == p.vertices().size()) throw std::logic_error("facet vertex missing from the polytope");
    return i;
  };
  auto triangle = [](std::size_t a, std::size_t b, std::size_t c) {
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
  };

  std::vector<Triangle> fixed;
  for (auto fi : profile.smooth_facets) {
    const auto& v = p.facets()[fi].vertices;
    fixed.push_back(triangle(index(v[0]), index(v[1]), index(v[2])));
  }
  std::vector<std::array<std::size_t, 4>> squares;
  for (const auto& sq : profile.squares)
    squares.push_back({index(sq.cycle[0]), index(sq.cycle[1]), index(sq.cycle[2]), index(sq.cycle[3])});

  std::vector<SmallResolution> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    SmallResolution r;
    r.triangles = fixed;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [v1, v2, v3, v4] = squares[i];
      if ((k >> i) & 1U) {
        r.diagonals.push_back(Diagonal::Diag24);
        r.triangles.push_back(triangle(v1, v2, v4));
        r.triangles.push_back(triangle(v2, v3, v4));
      } else {
        r.diagonals.push_back(Diagonal::Diag13);
        r.triangles.push_back(triangle(v1, v2, v3));
        r.triangles.push_back(triangle(v1, v3, v4));
      }
    }
    std::sort(r.triangles.begin(), r.triangles.end());
    out.push_back(std::move(r));
  }
  return out;
}

RegularityCertificate regularity_certificate(const Polytope& p, const SmallResolution& res) {
  const auto& verts = p.vertices();
  const std::size_t nv = verts.size();

  // Each edge of the triangulation is a wall between exactly two cones.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> opposite;
  for (const auto& t : res.triangles) {
    opposite[{t[0], t[1]}].push_back(t[2]);
    opposite[{t[0], t[2]}].push_back(t[1]);
    opposite[{t[1], t[2]}].push_back(t[0]);
  }

  // Columns: h+ (nv), h- (nv), slack. Row per wall: -sum lambda_i h_i + s <= 0,
  // where sum lambda_i v_i = 0 is the wall's linear relation with lambda_c > 0.
  const std::size_t cols = 2 * nv + 1;
  RationalMatrix a;
  std::vector<Rational> b;
  for (const auto& [edge, opp] : opposite) {
    if (opp.size() != 2)
      throw std::logic_error("triangulation edge not shared by exactly two triangles");
    const std::size_t ia = edge.first, ib = edge.second, ic = opp[0], id = opp[1];
    const auto &A = verts[ia], &B = verts[ib], &C = verts[ic], &D = verts[id];
    Integer la = det3(B, C, D), lb = -det3(A, C, D), lc = det3(A, B, D), ld = -det3(A, B, C);
    if (lc == 0 || ld == 0 || sgn(lc) != sgn(ld))
      throw std::logic_error("adjacent cones do not lie on opposite sides of their wall");
    if (lc < 0) {
      la = -la;
      lb = -lb;
      lc = -lc;
      ld = -ld;
    }
    std::vector<Rational> row(cols, 0);
    const std::pair<std::size_t, const Integer*> terms[] = {{ia, &la}, {ib, &lb}, {ic, &lc}, {id, &ld}};
    for (const auto& [idx, lam] : terms) {
      row[idx] -= Rational(*lam);
      row[nv + idx] += Rational(*lam);
    }
    row[cols - 1] = 1;
    a.append_row(row);
    b.emplace_back(0);
  }
  std::vector<Rational> cap_row(cols, 0);
  cap_row[cols - 1] = 1;
  a.append_row(cap_row);
  b.emplace_back(1);

  std::vector<Rational> objective(cols, 0);
  objective[cols - 1] = 1;
  const lp::Result lp_result = lp::maximize(objective, a, b);
  if (lp_result.status != lp::Status::Optimal)
    throw std::logic_error("regularity LP is bounded by construction");

  RegularityCertificate cert;
  cert.slack = lp_result.value;
  cert.regular = cert.slack > 0;
  for (std::size_t i = 0; i < nv; ++i) cert.heights.push_back(lp_result.point[i] - lp_result.point[nv + i]);
  return cert;
}

bool is_regular_triangulation(const Polytope& p, const SmallResolution& res) {
  return regularity_certificate(p, res).regular;
}

RelationRank exceptional_relation_rank(const Polytope& p, const NodalProfile& profile) {
  RelationRank out;
  const std::size_t nv = p.vertices().size();
  out.relations = IntMatrix(profile.node_count(), nv);
  for (std::size_t i = 0; i < profile.node_count(); ++i) {
    const auto& c = profile.squares[i].cycle;
    out.relations(i, p.vertex_index(c[0])) += 1;
    out.relations(i, p.vertex_index(c[1])) -= 1;
    out.relations(i, p.vertex_index(c[2])) += 1;
    out.relations(i, p.vertex_index(c[3])) -= 1;
  }
  out.rank = rank(out.relations);
  return out;
}

Smoothability relation_certificate(const IntMatrix& relations) {
  const std::size_t n = relations.rows();
  Smoothability out;
  if (n == 0) {
    out.smoothable = true;
    out.certificate = "no nodes";
    return out;
  }
  // Left kernel of R = null space of R^T.
  const auto kernel = nullspace(relations.transposed());
  for (std::size_t i = 0; i < n; ++i) {
    const bool free = std::any_of(kernel.begin(), kernel.end(),
                                  [i](const std::vector<Rational>& k) { return k[i] != 0; });
    if (!free) {
      out.smoothable = false;
      out.certificate = "every relation has lambda_" + std::to_string(i) + " = 0";
      return out;
    }
  }
  // lambda = sum_j t^j K_j is a nonzero polynomial in t in every coordinate,
  // so some small t avoids all roots.
  for (unsigned long t = 1;; ++t) {
    std::vector<Rational> lambda(n, 0);
    Rational weight = 1;
    for (const auto& k : kernel) {
      for (std::size_t i = 0; i < n; ++i) lambda[i] += weight * k[i];
      weight *= t;
    }
    if (std::all_of(lambda.begin(), lambda.end(), [](const Rational& q) { return q != 0; })) {
      out.lambda = primitive_integer_vector(lambda);
      if (out.lambda.front() < 0)
        for (auto& x : out.lambda) x = -x;
      out.smoothable = true;
      out.certificate = "relation with all coefficients nonzero";
      return out;
    }
  }
}

Smoothability friedman_smoothable(const Polytope& p, const NodalProfile& profile,
                                  SmoothingMode mode) {
  if (mode == SmoothingMode::Fano) return {true, "Friedman/Fano", {}};
  return relation_certificate(exceptional_relation_rank(p, profile).relations);
}

TransitionReport transition_invariants(const Polytope& p, const TransitionOptions& options) {
  const NodalProfile profile = nodal_profile(p);
  TransitionReport rep;
  rep.resolutions = enumerate_small_resolutions(p, profile, options.resolution_cap);

  // Resolutions are independent; worker w handles indices w, w + workers, ...
  const unsigned workers = std::min<unsigned>(resolve_thread_count(options.threads),
                                              static_cast<unsigned>(rep.resolutions.size()));
  if (workers <= 1) {
    for (auto& r : rep.resolutions) r.regular = is_regular_triangulation(p, r);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < rep.resolutions.size(); i += workers)
            rep.resolutions[i].regular = is_regular_triangulation(p, rep.resolutions[i]);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : failures)
      if (e) std::rethrow_exception(e);
  }

  const std::size_t triangles = rep.resolutions.front().triangles.size();
  for (const auto& r : rep.resolutions)
    if (r.triangles.size() != triangles)
      throw std::logic_error("small resolutions with different triangle counts");

  const RelationRank rr = exceptional_relation_rank(p, profile);
  const auto n = static_cast<std::int64_t>(profile.node_count());
  const auto k = static_cast<std::int64_t>(rr.rank);
  rep.nodes = n;
  rep.relation_rank = k;
  rep.e_res = static_cast<std::int64_t>(triangles);
  rep.e_sm = rep.e_res - 2 * n;
  rep.b2_res = static_cast<std::int64_t>(p.vertices().size()) - 3;
  rep.b2_sm = rep.b2_res - k;
  rep.b3_sm = 2 * (n - k);

  const Rational degree = normalized_volume(polar_dual(p));
  if (degree.get_den() != 1) throw std::logic_error("non-integral anticanonical degree");
  rep.degree = degree.get_num();

  const Smoothability s = friedman_smoothable(p, profile, options.mode);
  rep.mode = options.mode;
  rep.smoothable = s.smoothable;
  rep.certificate = s.certificate;
  rep.lambda = s.lambda;
  return rep;
}

}  // namespace conifold
