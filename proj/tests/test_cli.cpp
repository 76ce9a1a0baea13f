#include "doctest.h"

#include "cli.hpp"
#include "conifold/json_io.hpp"
#include "corpus.hpp"

using namespace conifold;
using namespace conifold::testing;

namespace {

std::string corpus_arg(const std::string& name) {
  return shell_quote((data_dir() / "corpus" / (name + ".json")).string());
}

std::string test_arg(const std::string& file) { return shell_quote((test_data_dir() / file).string()); }

std::string db_arg() { return shell_quote((data_dir() / "fano_db.jsonl").string()); }

}  // namespace

TEST_CASE("cli periods") {
  const auto r = run_cli("periods " + corpus_arg("p3") + " --dmax 8");
  REQUIRE(r.status == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["periods"] == Json::parse("[1,0,0,0,24,0,0,0,2520]"));
  CHECK(j["dmax"] == 8);
  CHECK(j["gw"].size() == 9);
  CHECK(j["gw"][0]["label"].is_null());

  const auto zero = run_cli("periods " + corpus_arg("p3") + " --dmax 0");
  REQUIRE(zero.status == 0);
  CHECK(Json::parse(zero.out)["periods"] == Json::parse("[1]"));

  const auto rec = run_cli("periods " + corpus_arg("p3") + " --dmax 40 --recurrence");
  REQUIRE(rec.status == 0);
  CHECK(Json::parse(rec.out)["recurrence"]["recurrence"]["order"] == 4);

  const auto table = run_cli("periods " + corpus_arg("p3") + " --dmax 4 --output table");
  CHECK(table.status == 0);
  CHECK(table.out.find("24") != std::string::npos);
}

TEST_CASE("cli input errors exit 2 with a JSON error on stderr") {
  const auto outside = run_cli("periods " + test_arg("origin_outside.json"), true);
  CHECK(outside.status == 2);
  const auto j = Json::parse(outside.out);
  CHECK(j["error"] == "OriginNotInterior");
  CHECK(j.contains("message"));

  const auto worse = run_cli("transition " + test_arg("worse_than_nodal.json"), true);
  CHECK(worse.status == 2);
  CHECK(Json::parse(worse.out)["error"] == "WorseThanNodal");

  const auto nonrefl = run_cli("transition " + test_arg("not_reflexive.json"), true);
  CHECK(nonrefl.status == 2);
  CHECK(Json::parse(nonrefl.out)["error"] == "NotReflexive");

  CHECK(run_cli("periods " + test_arg("missing.json")).status == 2);
  CHECK(run_cli("match " + corpus_arg("p3") + " " + test_arg("malformed.jsonl")).status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("periods " + corpus_arg("p3") + " --dmax -3").status == 2);
}

TEST_CASE("cli budget errors exit 3") {
  const auto r = run_cli("transition " + corpus_arg("nodal_01") + " --resolution-cap 0", true);
  CHECK(r.status == 3);
  CHECK(Json::parse(r.out)["error"] == "BudgetExceeded");
}

TEST_CASE("cli transition matches the goldens byte for byte") {
  for (const auto& [name, p] : corpus()) {
    CAPTURE(name);
    const auto r = run_cli("transition " + corpus_arg(name));
    REQUIRE(r.status == 0);
    CHECK(r.out == read_file(data_dir() / "golden" / (name + ".transition.json")));
  }
}

TEST_CASE("cli transition in Calabi-Yau mode") {
  const auto full_rank = Json::parse(run_cli("transition " + corpus_arg("nodal_02") + " --mode cy").out);
  CHECK(full_rank["mode"] == "cy");
  CHECK(full_rank["smoothable"] == false);
  const auto deficient = Json::parse(run_cli("transition " + corpus_arg("nodal_03") + " --mode cy").out);
  CHECK(deficient["smoothable"] == true);
  CHECK(deficient["lambda"].size() == 3);
}

TEST_CASE("cli resolve") {
  const auto r = run_cli("resolve " + corpus_arg("nodal_03"));
  REQUIRE(r.status == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["N"] == 3);
  CHECK(j["squares"].size() == 3);
  CHECK(j["resolutions"].size() == 8);
}

TEST_CASE("cli match") {
  const auto p3 = Json::parse(run_cli("match " + corpus_arg("p3") + " " + db_arg()).out);
  REQUIRE(p3["candidates"].size() == 1);
  CHECK(p3["candidates"][0]["name"] == "P3");
  const auto cube = Json::parse(run_cli("match " + test_arg("cube-fan.json") + " " + db_arg()).out);
  REQUIRE(cube["candidates"].size() == 1);
  CHECK(cube["candidates"][0]["name"] == "P1xP1xP1");
  const auto oct = Json::parse(run_cli("match " + corpus_arg("octahedron") + " " + db_arg()).out);
  CHECK(oct["candidates"][0]["name"] == "P1xP1xP1");
  const auto none = run_cli("match " + corpus_arg("p3") + " " + test_arg("empty.jsonl"));
  REQUIRE(none.status == 0);
  CHECK(Json::parse(none.out)["candidates"] == Json::array());
}

TEST_CASE("cli recurrence") {
  const auto two = Json::parse(run_cli("recurrence " + test_arg("powers_of_two.json")).out);
  CHECK(two["status"] == "found");
  CHECK(two["recurrence"]["order"] == 1);
  const auto cb = Json::parse(run_cli("recurrence " + test_arg("central_binomial.json")).out);
  CHECK(cb["status"] == "found");
  CHECK(cb["recurrence"]["degree"] == 1);
  CHECK(cb["verified"] == true);
  const auto tight = Json::parse(
      run_cli("recurrence " + test_arg("central_binomial.json") + " --max-degree 0").out);
  CHECK(tight["status"] == "not_found");
}

TEST_CASE("cli record emits one database line") {
  const auto r = run_cli("record " + corpus_arg("p3") + " --name P3 --dmax 12");
  REQUIRE(r.status == 0);
  const auto first_line = read_file(data_dir() / "fano_db.jsonl").substr(0, r.out.size());
  CHECK(r.out == first_line);
}

TEST_CASE("cli output is deterministic") {
  for (const std::string& args :
       {"periods " + corpus_arg("nodal_05") + " --dmax 10 --threads 3",
        "resolve " + corpus_arg("nodal_04") + " --threads 2",
        "match " + corpus_arg("nodal_02") + " " + db_arg()}) {
    CAPTURE(args);
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}
