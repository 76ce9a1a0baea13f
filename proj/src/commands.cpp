#include "conifold/commands.hpp"

#include <algorithm>
#include <sstream>

#include "conifold/error.hpp"
#include "conifold/laurent.hpp"

namespace conifold {

namespace {

Json recurrence_section(std::span<const Integer> terms, const Config& config) {
  Json j;
  const std::vector<Integer> seq = stride_subsequence(terms, config.stride);
  RecurrenceSearch search{config.max_order, config.max_degree, config.holdout};
  j["stride"] = config.stride;
  j["max_order"] = config.max_order;
  j["max_degree"] = config.max_degree;
  j["holdout"] = config.holdout;
  if (auto rec = find_recurrence(seq, search)) {
    j["status"] = "found";
    j["recurrence"] = recurrence_to_json(*rec);
    j["verified"] = verify_recurrence(*rec, seq);
  } else {
    j["status"] = "not_found";
    j["recurrence"] = nullptr;
  }
  return j;
}

PeriodSequence compute_periods(const Polytope& p, const Config& config) {
  const LaurentPolynomial w = from_fan_polytope(p, config.support);
  return period_sequence(w, config.dmax, {config.prune, config.threads});
}

TransitionReport compute_report(const Polytope& p, const Config& config) {
  return transition_invariants(p, {config.mode, config.resolution_cap, config.threads});
}

std::string cell(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

// Display width of UTF-8 text: count the non-continuation bytes.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
}

void emit_rows(std::ostringstream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], display_width(r[c]));
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      std::string v = r[c];
      if (c + 1 < r.size()) v.append(width[c] - display_width(v), ' ');
      line += v;
      if (c + 1 < r.size()) line += "  ";
    }
    out << line << '\n';
  }
}

}  // namespace

Json periods_command(const Polytope& p, const Config& config) {
  const PeriodSequence seq = compute_periods(p, config);
  Json j;
  j["source"] = seq.source;
  j["dmax"] = config.dmax;
  j["prune"] = config.prune;
  j["periods"] = sequence_to_json(seq.terms);
  j["gw"] = gw_labeling_to_json(gw_labeling(seq));
  if (config.find_recurrence) j["recurrence"] = recurrence_section(seq.terms, config);
  return j;
}

Json transition_command(const Polytope& p, const Config& config) {
  return report_to_json(compute_report(p, config));
}

Json resolve_command(const Polytope& p, const Config& config) {
  const NodalProfile profile = nodal_profile(p);
  auto resolutions = enumerate_small_resolutions(p, profile, config.resolution_cap);
  Json j;
  j["N"] = profile.node_count();
  j["vertices"] = polytope_to_json(p)["vertices"];
  Json squares = Json::array();
  for (const auto& sq : profile.squares) {
    Json s;
    s["facet"] = sq.facet_index;
    Json cyc = Json::array();
    for (const auto& v : sq.cycle) {
      Json row = Json::array();
      for (const auto& x : v.coords()) row.push_back(integer_to_json(x));
      cyc.push_back(std::move(row));
    }
    s["cycle"] = std::move(cyc);
    squares.push_back(std::move(s));
  }
  j["squares"] = std::move(squares);
  Json res = Json::array();
  for (auto& r : resolutions) {
    r.regular = is_regular_triangulation(p, r);
    res.push_back(resolution_to_json(r, true));
  }
  j["resolutions"] = std::move(res);
  return j;
}

Json match_command(const Polytope& p, std::span<const PeriodRecord> db, const Config& config) {
  const TransitionReport report = compute_report(p, config);
  const PeriodSequence seq = compute_periods(p, config);
  Json j;
  Json inv;
  inv["degree"] = integer_to_json(report.degree);
  inv["e"] = report.e_sm;
  inv["b2"] = report.b2_sm;
  inv["b3"] = report.b3_sm;
  j["invariants"] = std::move(inv);
  j["periods"] = sequence_to_json(seq.terms);
  j["candidates"] = candidates_to_json(match(report, seq, db));
  return j;
}

Json recurrence_command(std::span<const Integer> sequence, const Config& config) {
  Json j;
  j["length"] = sequence.size();
  Json section = recurrence_section(sequence, config);
  for (auto& [k, v] : section.items()) j[k] = v;
  return j;
}

Json record_command(const Polytope& p, const std::string& name, const Config& config) {
  const TransitionReport report = compute_report(p, config);
  const PeriodSequence seq = compute_periods(p, config);
  return record_to_json(make_record(name, report, seq, seq.terms.size()));
}

std::string render_table(const std::string& command, const Json& doc) {
  std::ostringstream out;
  if (command == "periods") {
    out << doc["source"].get<std::string>() << '\n';
    std::vector<std::vector<std::string>> rows{{"d", "invariant", "value"}};
    for (const auto& g : doc["gw"]) rows.push_back({cell(g["d"]), cell(g["label"]), cell(g["value"])});
    emit_rows(out, rows);
    if (doc.contains("recurrence")) {
      const Json& r = doc["recurrence"];
      out << "recurrence: " << r["status"].get<std::string>();
      if (!r["recurrence"].is_null()) out << ' ' << r["recurrence"].dump();
      out << '\n';
    }
  } else if (command == "transition" || command == "resolve") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : doc.items())
      if (k != "resolutions" && k != "squares" && k != "vertices") rows.push_back({k, cell(v)});
    emit_rows(out, rows);
    std::vector<std::vector<std::string>> res{{"#", "diagonals", "regular"}};
    std::size_t i = 0;
    for (const auto& r : doc["resolutions"])
      res.push_back({std::to_string(i++), cell(r["diagonals"]), cell(r["regular"])});
    emit_rows(out, res);
  } else if (command == "match") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : doc["invariants"].items()) rows.push_back({k, cell(v)});
    emit_rows(out, rows);
    std::vector<std::vector<std::string>> cand{{"candidate", "overlap"}};
    for (const auto& c : doc["candidates"]) cand.push_back({cell(c["name"]), cell(c["overlap"])});
    emit_rows(out, cand);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : doc.items()) rows.push_back({k, cell(v)});
    emit_rows(out, rows);
  }
  return out.str();
}

int exit_code_for(ErrorKind kind) noexcept {
  return kind == ErrorKind::BudgetExceeded ? 3 : 2;
}

}  // namespace conifold
