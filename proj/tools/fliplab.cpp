// fliplab: JSON in, verdicts and constructed fans out.
//
// fliplab <command> [--input FILE|-] [--output FILE|-] [--fixture NAME]
//         [--bound N] [--all-pairs] [--quiet]
//
// Exit codes: 0 success, 2 domain error, 3 schema error, 4 internal error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toric/jobs.hpp"

namespace {

const std::vector<std::string> kCommands = {
    "dual-cone",  "hilbert-basis", "intersect",    "ccr",          "validate-fan",
    "wall-relation", "flip-fans",  "classify",     "check-normal", "check-reduced",
    "diagnose",   "torus-fp",      "fan-fp",       "emit-fixture"};

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toric flip/flop diagnostics"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output = "-";
  std::string fixture;
  long bound = -1;
  bool all_pairs = false;
  bool quiet = false;

  std::vector<CLI::App*> subs;
  for (const std::string& name : kCommands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", input, "JSON payload file, or - for stdin");
    sub->add_option("--output", output, "output file, or - for stdout");
    sub->add_option("--fixture", fixture, "use a named fixture as the payload");
    sub->add_option("--bound", bound, "bound for enumeration oracles");
    sub->add_flag("--all-pairs", all_pairs, "check all cone pairs, not just wall-crossing ones");
    sub->add_flag("--quiet", quiet, "suppress diagnostics on stderr");
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  toric::JobSpec job;
  job.command = app.get_subcommands().front()->get_name();
  job.all_pairs = all_pairs;
  if (bound >= 0) job.bound = bound;
  job.fixture = fixture;

  if (job.command == "emit-fixture") {
    if (fixture.empty()) {
      if (!quiet) std::cerr << "emit-fixture requires --fixture NAME\n";
      return 3;
    }
  } else if (!fixture.empty()) {
    toric::JobSpec fj;
    fj.command = "emit-fixture";
    fj.fixture = fixture;
    toric::RunResult fr = toric::run(fj);
    if (fr.exit_code != 0) {
      std::cout << fr.document.dump(2) << "\n";
      return fr.exit_code;
    }
    job.payload = fr.document.at("result");
  } else {
    std::string text;
    if (input == "-") {
      text = read_all(std::cin);
    } else {
      std::ifstream f(input);
      if (!f) {
        if (!quiet) std::cerr << "cannot open input file: " << input << "\n";
        return 3;
      }
      text = read_all(f);
    }
    if (!text.empty()) {
      try {
        job.payload = toric::Json::parse(text);
      } catch (const std::exception& e) {
        toric::Json doc;
        doc["schema"] = toric::kSchemaTag;
        doc["command"] = job.command;
        doc["error"] = {{"code", "SchemaError"},
                        {"message", std::string("malformed JSON: ") + e.what()},
                        {"location", "input"}};
        std::cout << doc.dump(2) << "\n";
        return 3;
      }
    }
  }

  toric::RunResult result = toric::run(job);
  std::string rendered = result.document.dump(2);
  if (output == "-") {
    std::cout << rendered << "\n";
  } else {
    std::ofstream f(output);
    if (!f) {
      if (!quiet) std::cerr << "cannot open output file: " << output << "\n";
      return 3;
    }
    f << rendered << "\n";
  }
  if (result.exit_code != 0 && !quiet)
    std::cerr << job.command << ": " << result.document.at("error").at("message").get<std::string>()
              << "\n";
  return result.exit_code;
}
