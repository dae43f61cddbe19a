// phisoft: command-line front end for Pythagorean fuzzy parameterized soft sets.
//
//   phisoft validate <file>
//   phisoft combine --op eintersect <a> <b> [-o out]
//   phisoft weights <file>
//   phisoft decide <a> <b> [--op ...] [--agg geometric|linear] [--order es|m|sfaf] [--json out]
//   phisoft laws [--cases N] [--seed S]
//
// Exit status: 0 success, 1 validation or law failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "phisoft/decision.hpp"
#include "phisoft/io.hpp"
#include "phisoft/laws.hpp"

namespace {

using namespace phisoft;

const std::map<std::string, CombineOp> combine_ops{
    {"eintersect", CombineOp::extended_intersection},
    {"eunion", CombineOp::extended_union},
    {"runion", CombineOp::restricted_union},
    {"rintersect", CombineOp::restricted_intersection},
};

const std::map<std::string, Aggregator> aggregators{
    {"geometric", Aggregator::geometric},
    {"linear", Aggregator::linear},
};

const std::map<std::string, OrderKind> orders{
    {"es", OrderKind::es_then_membership},
    {"m", OrderKind::membership_then_es},
    {"sfaf", OrderKind::score_accuracy},
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::parse_error, "cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pythagorean fuzzy parameterized soft sets: combination, aggregation and ranking"};
  app.require_subcommand(1);

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "Parse a table and check its invariants");
  validate->add_option("file", validate_file, "CSV or JSON table")->required();

  std::string combine_op = "eintersect";
  std::string combine_a, combine_b, combine_out;
  auto* combine_cmd = app.add_subcommand("combine", "Combine two tables");
  combine_cmd->add_option("--op", combine_op, "eunion | eintersect | runion | rintersect")
      ->check(CLI::IsMember(combine_ops));
  combine_cmd->add_option("a", combine_a)->required();
  combine_cmd->add_option("b", combine_b)->required();
  combine_cmd->add_option("-o,--output", combine_out, "Output path (.json for JSON, CSV otherwise; stdout if omitted)");

  std::string weights_file;
  auto* weights_cmd = app.add_subcommand("weights", "Print the expectation-score weight of each parameter");
  weights_cmd->add_option("file", weights_file)->required();

  std::string decide_a, decide_b, decide_json;
  std::string decide_op = "eintersect", decide_agg = "geometric", decide_order = "es";
  auto* decide_cmd = app.add_subcommand("decide", "Combine, aggregate and rank two expert tables");
  decide_cmd->add_option("a", decide_a)->required();
  decide_cmd->add_option("b", decide_b)->required();
  decide_cmd->add_option("--op", decide_op)->check(CLI::IsMember(combine_ops));
  decide_cmd->add_option("--agg", decide_agg)->check(CLI::IsMember(aggregators));
  decide_cmd->add_option("--order", decide_order)->check(CLI::IsMember(orders));
  decide_cmd->add_option("--json", decide_json, "Also write the full report as JSON");

  laws::Options law_options;
  auto* laws_cmd = app.add_subcommand("laws", "Run the randomized algebraic-law suites");
  laws_cmd->add_option("--cases", law_options.cases, "Cases per suite")->check(CLI::PositiveNumber);
  laws_cmd->add_option("--seed", law_options.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      const PhiSoftSet set = io::load_table(validate_file);
      std::cout << validate_file << ": ok (" << set.rows() << " alternatives, " << set.cols() << " parameters)\n";
    } else if (*combine_cmd) {
      const PhiSoftSet result = combine(io::load_table(combine_a), io::load_table(combine_b), combine_ops.at(combine_op));
      if (combine_out.empty()) {
        std::cout << io::emit_csv(result);
      } else {
        io::save_table(result, combine_out);
      }
    } else if (*weights_cmd) {
      std::cout << io::render_weights(weights_from_importances(io::load_table(weights_file).parameters()));
    } else if (*decide_cmd) {
      const DecisionConfig cfg{combine_ops.at(decide_op), aggregators.at(decide_agg), orders.at(decide_order)};
      const DecisionReport report = decide(io::load_table(decide_a), io::load_table(decide_b), cfg);
      std::cout << io::render_report(report);
      if (!decide_json.empty()) write_output(decide_json, io::emit_json(report));
    } else if (*laws_cmd) {
      std::cout << "seed: " << law_options.seed << "\ncases per suite: " << law_options.cases << '\n';
      bool ok = true;
      for (const auto& r : laws::run_all(law_options)) {
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
        if (!r.passed()) {
          ok = false;
          std::cout << "  counterexample: " << *r.counterexample << '\n';
        }
      }
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
