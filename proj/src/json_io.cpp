#include "conifold/json_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "conifold/error.hpp"

namespace conifold {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::ParseError, message); }

const Json& field(const Json& j, const char* key, const std::string& context) {
  if (!j.is_object()) fail(context + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(context + ": missing field '" + key + "'");
  return *it;
}

std::int64_t small_integer(const Json& j, const std::string& what) {
  const Integer z = integer_from_json(j, what);
  auto v = to_int64(z);
  if (!v) fail(what + ": value out of range");
  return *v;
}

}  // namespace

Json integer_to_json(const Integer& z) {
  if (auto v = to_int64(z)) return Json(*v);
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const Error&) {
      fail(what + ": not an integer: " + j.dump());
    }
  }
  if (j.is_number_float()) fail(what + ": expected an integer (pass large values as strings), got " + j.dump());
  fail(what + ": expected an integer, got " + j.dump());
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail("'" + path.string() + "': " + e.what());
  }
}

Polytope polytope_from_json(const Json& j) {
  const std::string ctx = "polytope";
  const std::int64_t dim = small_integer(field(j, "dim", ctx), ctx + ".dim");
  const Json& verts = field(j, "vertices", ctx);
  if (!verts.is_array()) fail(ctx + ".vertices: expected an array");
  std::vector<LatticeVector> points;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string what = ctx + ".vertices[" + std::to_string(i) + "]";
    if (!verts[i].is_array()) fail(what + ": expected an integer array");
    if (static_cast<std::int64_t>(verts[i].size()) != dim)
      fail(what + ": expected " + std::to_string(dim) + " coordinates");
    std::vector<Integer> coords;
    for (const auto& x : verts[i]) coords.push_back(integer_from_json(x, what));
    points.emplace_back(std::move(coords));
  }
  return convex_hull(points, static_cast<int>(dim));
}

Json polytope_to_json(const Polytope& p) {
  Json j;
  j["dim"] = p.dim();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) {
    Json row = Json::array();
    for (const auto& x : v.coords()) row.push_back(integer_to_json(x));
    verts.push_back(std::move(row));
  }
  j["vertices"] = std::move(verts);
  return j;
}

Json rational_polytope_to_json(const RationalPolytope& p) {
  Json j;
  j["dim"] = p.dim();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    verts.push_back(std::move(row));
  }
  j["vertices"] = std::move(verts);
  return j;
}

Polytope load_polytope(const std::filesystem::path& path) { return polytope_from_json(read_json_file(path)); }

Json laurent_to_json(const LaurentPolynomial& f) {
  Json j;
  j["dim"] = f.dim();
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json t;
    Json exp = Json::array();
    for (int i = 0; i < f.dim(); ++i) exp.push_back(e[i]);
    t["exp"] = std::move(exp);
    t["coeff"] = c.get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

LaurentPolynomial laurent_from_json(const Json& j) {
  const std::string ctx = "laurent";
  const std::int64_t dim = small_integer(field(j, "dim", ctx), ctx + ".dim");
  if (dim < 1 || dim > kMaxDim) fail(ctx + ".dim: out of range");
  const Json& terms = field(j, "terms", ctx);
  if (!terms.is_array()) fail(ctx + ".terms: expected an array");
  std::vector<LaurentPolynomial::Term> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string what = ctx + ".terms[" + std::to_string(i) + "]";
    const Json& exp = field(terms[i], "exp", what);
    if (!exp.is_array() || static_cast<std::int64_t>(exp.size()) != dim) fail(what + ".exp: bad length");
    Exponent e{};
    for (std::size_t k = 0; k < exp.size(); ++k) {
      const std::int64_t x = small_integer(exp[k], what + ".exp");
      if (x < INT32_MIN || x > INT32_MAX) fail(what + ".exp: out of range");
      e[k] = static_cast<std::int32_t>(x);
    }
    out.emplace_back(e, integer_from_json(field(terms[i], "coeff", what), what + ".coeff"));
  }
  return LaurentPolynomial::from_terms(static_cast<int>(dim), std::move(out));
}

Json recurrence_to_json(const Recurrence& rec) {
  Json j;
  j["order"] = rec.order;
  j["degree"] = rec.degree;
  Json coeffs = Json::array();
  for (const auto& p : rec.coeffs) {
    Json row = Json::array();
    for (const auto& q : p) row.push_back(to_string(q));
    coeffs.push_back(std::move(row));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

Recurrence recurrence_from_json(const Json& j) {
  const std::string ctx = "recurrence";
  Recurrence rec;
  rec.order = static_cast<int>(small_integer(field(j, "order", ctx), ctx + ".order"));
  rec.degree = static_cast<int>(small_integer(field(j, "degree", ctx), ctx + ".degree"));
  const Json& coeffs = field(j, "coeffs", ctx);
  if (rec.order < 0 || rec.degree < 0 || !coeffs.is_array() ||
      coeffs.size() != static_cast<std::size_t>(rec.order + 1))
    fail(ctx + ".coeffs: expected order + 1 rows");
  for (const auto& row : coeffs) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(rec.degree + 1))
      fail(ctx + ".coeffs: expected degree + 1 entries per row");
    std::vector<Rational> p;
    for (const auto& q : row) {
      if (q.is_string()) {
        p.push_back(parse_rational(q.get<std::string>()));
      } else {
        p.emplace_back(integer_from_json(q, ctx + ".coeffs"));
      }
    }
    rec.coeffs.push_back(std::move(p));
  }
  return rec;
}

std::vector<Integer> sequence_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (j.contains("terms")) {
      arr = &j["terms"];
    } else if (j.contains("periods")) {
      arr = &j["periods"];
    } else {
      fail("sequence: expected an array or an object with \"terms\"");
    }
  }
  if (!arr->is_array()) fail("sequence: expected an array");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < arr->size(); ++i)
    out.push_back(integer_from_json((*arr)[i], "sequence[" + std::to_string(i) + "]"));
  return out;
}

Json sequence_to_json(std::span<const Integer> c) {
  Json j = Json::array();
  for (const auto& z : c) j.push_back(integer_to_json(z));
  return j;
}

Json gw_labeling_to_json(std::span<const GwRecord> records) {
  Json j = Json::array();
  for (const auto& r : records) {
    Json e;
    e["d"] = r.d;
    e["label"] = r.label ? Json(*r.label) : Json(nullptr);
    e["value"] = integer_to_json(r.value);
    j.push_back(std::move(e));
  }
  return j;
}

Json resolution_to_json(const SmallResolution& r, bool with_triangles) {
  Json j;
  j["diagonals"] = r.diagonal_string();
  j["regular"] = r.regular ? Json(*r.regular) : Json(nullptr);
  if (with_triangles) {
    Json tris = Json::array();
    for (const auto& t : r.triangles) tris.push_back({t[0], t[1], t[2]});
    j["triangles"] = std::move(tris);
  }
  return j;
}

Json report_to_json(const TransitionReport& report) {
  Json j;
  j["N"] = report.nodes;
  j["k"] = report.relation_rank;
  j["e_res"] = report.e_res;
  j["e_sm"] = report.e_sm;
  j["b2_res"] = report.b2_res;
  j["b2_sm"] = report.b2_sm;
  j["b3_sm"] = report.b3_sm;
  j["degree"] = integer_to_json(report.degree);
  j["smoothable"] = report.smoothable;
  j["mode"] = std::string(mode_name(report.mode));
  j["certificate"] = report.certificate;
  if (report.mode == SmoothingMode::CalabiYau) j["lambda"] = sequence_to_json(report.lambda);
  j["betti_split"] = "derived: b2_sm = b2_res - k, b3_sm = 2(N - k)";
  Json res = Json::array();
  for (const auto& r : report.resolutions) res.push_back(resolution_to_json(r, false));
  j["resolutions"] = std::move(res);
  return j;
}

Json record_to_json(const PeriodRecord& r) {
  Json j;
  j["name"] = r.name;
  j["degree"] = integer_to_json(r.degree);
  j["e"] = r.e;
  j["b2"] = r.b2;
  j["b3"] = r.b3;
  j["periods"] = sequence_to_json(r.period_prefix);
  j["provenance"] = r.provenance;
  return j;
}

PeriodRecord record_from_json(const Json& j) {
  std::string ctx = "record";
  if (!j.is_object()) fail(ctx + ": expected a JSON object");
  PeriodRecord r;
  const Json& name = field(j, "name", ctx);
  if (!name.is_string() || name.get<std::string>().empty()) fail(ctx + ".name: expected a non-empty string");
  r.name = name.get<std::string>();
  ctx = "record '" + r.name + "'";
  r.degree = integer_from_json(field(j, "degree", ctx), ctx + " field 'degree'");
  r.e = small_integer(field(j, "e", ctx), ctx + " field 'e'");
  r.b2 = small_integer(field(j, "b2", ctx), ctx + " field 'b2'");
  r.b3 = small_integer(field(j, "b3", ctx), ctx + " field 'b3'");
  const Json& periods = field(j, "periods", ctx);
  if (!periods.is_array()) fail(ctx + " field 'periods': expected an array");
  for (std::size_t i = 0; i < periods.size(); ++i)
    r.period_prefix.push_back(
        integer_from_json(periods[i], ctx + " field 'periods[" + std::to_string(i) + "]'"));
  if (!r.period_prefix.empty() && r.period_prefix.front() != 1)
    fail(ctx + " field 'periods': the first period must be 1");
  if (auto it = j.find("provenance"); it != j.end()) {
    if (!it->is_string()) fail(ctx + " field 'provenance': expected a string");
    r.provenance = it->get<std::string>();
    if (r.provenance != "computed" && r.provenance != "user")
      fail(ctx + " field 'provenance': expected \"computed\" or \"user\"");
  }
  return r;
}

Json candidates_to_json(std::span<const Candidate> candidates) {
  Json j = Json::array();
  for (const auto& c : candidates) {
    Json e;
    e["name"] = c.name;
    e["overlap"] = c.overlap;
    j.push_back(std::move(e));
  }
  return j;
}

}  // namespace conifold
