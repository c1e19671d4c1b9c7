// Command-line front end. Flags are assembled into one request document and
// handed to the C API; the result JSON goes to standard output.
//
// Exit codes: 0 yes (or plain success for emitters), 1 no, 2 unknown or
// no-within-box, 3 parse failure or missing file, 4 invalid input,
// 5 unsupported, 6 budget exhausted, 7 internal.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "grouppack.h"

namespace {

using Json = nlohmann::json;

struct CliError {
  int exit_code;
  std::string message;
};

// Flag values that name JSON: inline text when it looks like JSON, else a
// file path.
Json json_arg(const std::string& arg) {
  std::string text = arg;
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos ||
      (text[first] != '{' && text[first] != '[' &&
       (text[first] < '0' || text[first] > '9'))) {
    std::ifstream in(arg);
    if (!in) throw CliError{3, "cannot open file: " + arg};
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw CliError{3, "malformed JSON in " + arg};
  return j;
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{3, "cannot open file: " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run(const Json& request) {
  gp_result* res = nullptr;
  int status = gp_run(request.dump().c_str(), &res);
  if (status == GP_OK) {
    std::cout << gp_result_json(res) << "\n";
    int d = gp_result_decision(res);
    gp_result_free(res);
    return d < 0 ? 0 : d;
  }
  std::cerr << gp_result_json(res) << "\n";
  gp_result_free(res);
  return 2 + status;  // parse 3, invalid 4, unsupported 5, limit 6, internal 7
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact subset-sum and knapsack procedures over groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gp_version());

  std::string instance, group, items, target, word, automaton, grammar;
  std::string fixture, emit, poly, a_value = "0", expression, problem;
  std::string cnf_file;
  std::vector<long> moduli;
  long box = -1;
  std::size_t budget = 0;
  double wall = 0;
  int validate_len = -1;

  auto add_budget_flags = [&](CLI::App* cmd) {
    cmd->add_option("--box", box, "per-exponent search bound");
    cmd->add_option("--budget", budget, "candidate or node cap");
    cmd->add_option("--wall", wall, "wall-clock cap in seconds");
  };

  CLI::App* ssp = app.add_subcommand("ssp", "exact subset-sum decision");
  ssp->add_option("--instance", instance, "instance file (kind ssp)");
  ssp->add_option("--group", group, "group descriptor (JSON or file)");
  ssp->add_option("--items", items, "item words (JSON or file)");
  ssp->add_option("--target", target, "target word (JSON or file)");
  add_budget_flags(ssp);

  CLI::App* h3 = app.add_subcommand(
      "knapsack-h3", "knapsack decision over the Heisenberg group");
  h3->add_option("--instance", instance, "instance file (kind kp)")
      ->required();
  h3->add_option("--moduli", moduli, "moduli for no-certificates")
      ->delimiter(',');
  add_budget_flags(h3);

  CLI::App* gkp = app.add_subcommand(
      "gkp", "generalized knapsack over the infinite dihedral group");
  gkp->add_option("--instance", instance, "instance file (kind gkp)")
      ->required();
  std::string gkp_group = "dinf";
  gkp->add_option("--group", gkp_group, "group name (only dinf is wired)");

  CLI::App* aratmp = app.add_subcommand(
      "aratmp", "acyclic rational membership");
  aratmp->add_option("--group", group, "group descriptor (JSON or file)")
      ->required();
  aratmp->add_option("--automaton", automaton, "automaton (JSON or file)")
      ->required();
  aratmp->add_option("--word", word, "target word (JSON or file)")
      ->required();

  CLI::App* cocf = app.add_subcommand(
      "cocf", "knapsack via a co-word grammar");
  cocf->add_option("--instance", instance, "instance file (kind cocf)");
  cocf->add_option("--grammar", grammar, "co-word grammar (JSON or file)");
  cocf->add_option("--fixture", fixture, "built-in grammar name (z, z2)");
  cocf->add_option("--emit-grammar", emit,
                   "print a built-in grammar instead of deciding");
  cocf->add_option("--validate-len", validate_len,
                   "grammar validation word length");

  CLI::App* cnf = app.add_subcommand(
      "reduce-3cnf", "compile a DIMACS formula to a subset-sum instance");
  cnf->add_option("file", cnf_file, "DIMACS file")->required();

  CLI::App* enc = app.add_subcommand(
      "encode-poly", "compile a polynomial equation to knapsack");
  enc->add_option("--poly", poly, "polynomial (JSON or file)")->required();
  enc->add_option("--a", a_value, "right-hand side value");

  CLI::App* four = app.add_subcommand(
      "emit-4subgroups", "regroup a compiled expression into four subgroups");
  four->add_option("--expression", expression, "expression (JSON or file)")
      ->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle", "brute-force reference search");
  oracle->add_option("problem", problem, "ssp or kp")->required();
  oracle->add_option("--instance", instance, "instance file")->required();
  add_budget_flags(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 3;
  }

  try {
    Json req;
    auto pass_budget = [&]() {
      if (box >= 0) req["box"] = box;
      if (budget > 0) req["budget"] = budget;
      if (wall > 0) req["wall"] = wall;
    };
    if (app.got_subcommand(ssp)) {
      req["command"] = "ssp";
      if (!instance.empty()) {
        req["instance"] = json_arg(instance);
      } else {
        if (group.empty() || items.empty() || target.empty())
          throw CliError{3, "ssp needs --instance or --group/--items/--target"};
        req["instance"] = Json{{"kind", "ssp"},
                               {"group", json_arg(group)},
                               {"items", json_arg(items)},
                               {"target", json_arg(target)}};
      }
      pass_budget();
    } else if (app.got_subcommand(h3)) {
      req["command"] = "knapsack-h3";
      req["instance"] = json_arg(instance);
      if (!moduli.empty()) req["moduli"] = moduli;
      pass_budget();
    } else if (app.got_subcommand(gkp)) {
      if (gkp_group != "dinf")
        throw CliError{5, "only --group dinf is wired"};
      req["command"] = "gkp";
      req["instance"] = json_arg(instance);
    } else if (app.got_subcommand(aratmp)) {
      req["command"] = "aratmp";
      req["group"] = json_arg(group);
      req["automaton"] = json_arg(automaton);
      req["word"] = json_arg(word);
    } else if (app.got_subcommand(cocf)) {
      req["command"] = "cocf";
      if (!emit.empty()) {
        req["emit"] = emit;
      } else {
        if (instance.empty())
          throw CliError{3, "cocf needs --instance or --emit-grammar"};
        req["instance"] = json_arg(instance);
        if (!grammar.empty()) req["grammar"] = json_arg(grammar);
        if (!fixture.empty()) req["fixture"] = fixture;
        if (validate_len >= 0) req["validate_len"] = validate_len;
      }
    } else if (app.got_subcommand(cnf)) {
      req["command"] = "reduce-3cnf";
      req["dimacs"] = slurp_file(cnf_file);
    } else if (app.got_subcommand(enc)) {
      req["command"] = "encode-poly";
      req["poly"] = json_arg(poly);
      req["a"] = Json::parse(a_value, nullptr, false);
      if (req["a"].is_discarded()) req["a"] = a_value;  // big values as text
    } else if (app.got_subcommand(four)) {
      req["command"] = "emit-4subgroups";
      req["expression"] = json_arg(expression);
    } else if (app.got_subcommand(oracle)) {
      req["command"] = "oracle";
      req["problem"] = problem;
      req["instance"] = json_arg(instance);
      pass_budget();
    }
    return run(req);
  } catch (const CliError& e) {
    std::cerr << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 7;
  }
}
