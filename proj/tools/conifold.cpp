// conifold: nodal toric Fano threefolds from their fan polytopes.
//
//   conifold periods    <polytope.json> [--dmax N] [--no-prune] [--recurrence]
//   conifold transition <polytope.json> [--mode fano|cy]
//   conifold resolve    <polytope.json>
//   conifold match      <polytope.json> <db.jsonl> [--dmax N]
//   conifold recurrence <sequence.json> [--max-order R] [--max-degree D]
//   conifold record     <polytope.json> --name NAME [--dmax N]

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "conifold/commands.hpp"
#include "conifold/error.hpp"

namespace {

using conifold::Json;

void error_json(std::string_view kind, const std::string& message) {
  Json j;
  j["error"] = std::string(kind);
  j["message"] = message;
  std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conifold transitions of toric Fano threefolds"};
  app.require_subcommand(1);

  conifold::Config config;
  std::string output = "json";
  std::string mode = "fano";
  std::string input;
  std::string db_path;
  std::string name;
  bool no_prune = false;
  bool boundary = false;

  const std::map<std::string, std::string> kOutputs{{"json", "json"}, {"table", "table"}};
  const std::map<std::string, std::string> kModes{{"fano", "fano"}, {"cy", "cy"}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--output", output, "json or table")->transform(CLI::CheckedTransformer(kOutputs));
    sub->add_option("--threads", config.threads, "worker threads (0: CONIFOLD_THREADS or all cores)");
  };
  auto period_flags = [&](CLI::App* sub) {
    sub->add_option("--dmax", config.dmax, "largest power of W")->check(CLI::NonNegativeNumber);
    sub->add_flag("--no-prune", no_prune, "keep every exponent of W^d");
    sub->add_flag("--boundary-points", boundary, "sum over all boundary lattice points, not vertices");
  };
  auto recurrence_flags = [&](CLI::App* sub) {
    sub->add_option("--max-order", config.max_order, "largest recurrence order")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-degree", config.max_degree, "largest coefficient degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--holdout", config.holdout, "equations held out for validation")->check(CLI::NonNegativeNumber);
    sub->add_option("--stride", config.stride, "search on c_{s k}")->check(CLI::PositiveNumber);
  };
  auto nodal_flags = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "fano or cy")->transform(CLI::CheckedTransformer(kModes));
    sub->add_option("--resolution-cap", config.resolution_cap, "largest node count to resolve");
  };

  auto* periods = app.add_subcommand("periods", "period sequence of the vertex Laurent polynomial");
  periods->add_option("polytope", input, "polytope JSON")->required();
  period_flags(periods);
  recurrence_flags(periods);
  periods->add_flag("--recurrence", config.find_recurrence, "search for an annihilating recurrence");
  common(periods);

  auto* transition = app.add_subcommand("transition", "conifold transition report");
  transition->add_option("polytope", input, "polytope JSON")->required();
  nodal_flags(transition);
  common(transition);

  auto* resolve = app.add_subcommand("resolve", "enumerate small resolutions");
  resolve->add_option("polytope", input, "polytope JSON")->required();
  nodal_flags(resolve);
  common(resolve);

  auto* match = app.add_subcommand("match", "match invariants against a database");
  match->add_option("polytope", input, "polytope JSON")->required();
  match->add_option("db", db_path, "database (JSON lines)")->required();
  period_flags(match);
  nodal_flags(match);
  common(match);

  auto* recurrence = app.add_subcommand("recurrence", "find a recurrence for a sequence file");
  recurrence->add_option("sequence", input, "sequence JSON")->required();
  recurrence_flags(recurrence);
  common(recurrence);

  auto* record = app.add_subcommand("record", "emit a database record for a polytope");
  record->add_option("polytope", input, "polytope JSON")->required();
  record->add_option("--name", name, "record name")->required();
  period_flags(record);
  nodal_flags(record);
  common(record);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_json("UsageError", e.what());
    return 2;
  }

  config.prune = !no_prune;
  config.mode = mode == "cy" ? conifold::SmoothingMode::CalabiYau : conifold::SmoothingMode::Fano;
  config.support = boundary ? conifold::MonomialSupport::BoundaryPoints : conifold::MonomialSupport::Vertices;

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Json doc;
    if (command == "recurrence") {
      doc = conifold::recurrence_command(conifold::sequence_from_json(conifold::read_json_file(input)), config);
    } else {
      const conifold::Polytope p = conifold::load_polytope(input);
      if (command == "periods") {
        doc = conifold::periods_command(p, config);
      } else if (command == "transition") {
        doc = conifold::transition_command(p, config);
      } else if (command == "resolve") {
        doc = conifold::resolve_command(p, config);
      } else if (command == "match") {
        const auto db = conifold::load_database(db_path);
        doc = conifold::match_command(p, db, config);
      } else {
        doc = conifold::record_command(p, name, config);
      }
    }
    if (output == "table") {
      std::cout << conifold::render_table(command, doc);
    } else if (command == "record") {
      std::cout << doc.dump() << '\n';
    } else {
      std::cout << doc.dump(2) << '\n';
    }
    return 0;
  } catch (const conifold::Error& e) {
    error_json(conifold::error_kind_name(e.kind()), e.what());
    return conifold::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    error_json("InternalError", e.what());
    return 4;
  }
}
