#include "conifold/fanodb.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>

#include "conifold/error.hpp"
#include "conifold/json_io.hpp"

namespace conifold {

std::vector<PeriodRecord> parse_database(std::istream& in, const std::string& source) {
  std::vector<PeriodRecord> out;
  std::set<std::string> names;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    PeriodRecord rec;
    try {
      rec = record_from_json(Json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, where + ": " + e.what());
    } catch (const Error& e) {
      throw Error(e.kind(), where + ": " + e.what());
    }
    if (!names.insert(rec.name).second)
      throw Error(ErrorKind::DuplicateName, where + ": duplicate record name '" + rec.name + "'");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<PeriodRecord> load_database(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open database '" + path.string() + "'");
  return parse_database(in, path.string());
}

std::string serialize_record(const PeriodRecord& record) { return record_to_json(record).dump(); }

PeriodRecord make_record(const std::string& name, const TransitionReport& report,
                         const PeriodSequence& periods, std::size_t prefix_length) {
  PeriodRecord r;
  r.name = name;
  r.degree = report.degree;
  r.e = report.e_sm;
  r.b2 = report.b2_sm;
  r.b3 = report.b3_sm;
  const std::size_t n = std::min(prefix_length, periods.terms.size());
  r.period_prefix.assign(periods.terms.begin(), periods.terms.begin() + static_cast<std::ptrdiff_t>(n));
  r.provenance = "computed";
  return r;
}

std::vector<Candidate> match(const TransitionReport& report, const PeriodSequence& periods,
                             std::span<const PeriodRecord> db) {
  std::vector<Candidate> out;
  for (const auto& r : db) {
    if (r.degree != report.degree || r.e != report.e_sm || r.b2 != report.b2_sm || r.b3 != report.b3_sm)
      continue;
    const std::size_t overlap = std::min(r.period_prefix.size(), periods.terms.size());
    if (!std::equal(r.period_prefix.begin(), r.period_prefix.begin() + static_cast<std::ptrdiff_t>(overlap),
                    periods.terms.begin()))
      continue;
    out.push_back({r.name, overlap});
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.overlap != b.overlap) return a.overlap > b.overlap;
    return a.name < b.name;
  });
  return out;
}

}  // namespace conifold
