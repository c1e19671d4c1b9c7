#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "grouppack/jsonio.hpp"

// GROUPPACK_CLI_PATH is injected by the build: the full path of the binary
// under test.

namespace {

struct CliOut {
  int exit_code = -1;
  std::string stdout_text;
};

CliOut run_cli(const std::string& args) {
  std::string cmd = std::string(GROUPPACK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliOut out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.stdout_text.append(buf, n);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  out.exit_code = WEXITSTATUS(status);
  return out;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

const char* kYes =
    R"({"kind":"ssp","group":{"type":"z","n":1},"items":[[1],[1,1]],"target":[1,1,1]})";
const char* kNo =
    R"({"kind":"ssp","group":{"type":"z","n":1},"items":[[1,1]],"target":[1,1,1]})";

}  // namespace

TEST_CASE("the cli prints a version") {
  CliOut out = run_cli("--version");
  CHECK(out.exit_code == 0);
  CHECK(out.stdout_text.find('.') != std::string::npos);
}

TEST_CASE("decisions become exit codes") {
  CliOut yes = run_cli(std::string("ssp --instance '") + kYes + "'");
  CHECK(yes.exit_code == 0);
  gp::Json doc = gp::Json::parse(yes.stdout_text);
  CHECK(doc.at("decision") == "yes");
  CHECK(doc.at("witness") == gp::Json::array({1, 1}));

  CHECK(run_cli(std::string("ssp --instance '") + kNo + "'").exit_code == 1);

  std::string kp =
      R"({"kind":"kp","group":{"type":"z","n":1},"items":[[1,1]],"target":[1,1,1]})";
  CHECK(run_cli("oracle kp --instance '" + kp + "'").exit_code == 2);
}

TEST_CASE("instances load from files") {
  auto p = write_temp("cli_yes.json", kYes);
  CliOut out = run_cli("ssp --instance " + p.string());
  CHECK(out.exit_code == 0);
  CHECK(gp::Json::parse(out.stdout_text).at("decision") == "yes");
}

TEST_CASE("parse problems exit 3") {
  CHECK(run_cli("ssp --instance /nonexistent/missing.json").exit_code == 3);
  auto p = write_temp("cli_bad.json", "{not json");
  CHECK(run_cli("ssp --instance " + p.string()).exit_code == 3);
  CHECK(run_cli("frobnicate").exit_code == 3);
  CHECK(run_cli("ssp --no-such-flag 1").exit_code == 3);
}

TEST_CASE("invalid and unsupported inputs exit 4 and 5") {
  // a kp instance handed to the ssp decider
  std::string kp =
      R"({"kind":"kp","group":{"type":"z","n":1},"items":[[1]],"target":[1]})";
  CHECK(run_cli("ssp --instance '" + kp + "'").exit_code == 4);

  std::string gkp =
      R"({"kind":"gkp","group":{"type":"z","n":1},"constants":[[1]],)"
      R"("powers":[[1]],"domain":"nat"})";
  CHECK(run_cli("gkp --group z --instance '" + gkp + "'").exit_code == 5);
}

TEST_CASE("blown budgets exit 6") {
  std::string big =
      R"({"kind":"ssp","group":{"type":"z","n":1},)"
      R"("items":[[1],[1],[1]],"target":[1]})";
  CHECK(run_cli("oracle ssp --budget 2 --instance '" + big + "'").exit_code == 6);
}

TEST_CASE("reducer output feeds back into the solver") {
  auto cnf = write_temp("cli_f.cnf", "p cnf 2 1\n1 -2 0\n");
  CliOut red = run_cli("reduce-3cnf " + cnf.string());
  REQUIRE(red.exit_code == 0);
  gp::Json doc = gp::Json::parse(red.stdout_text);
  auto inst = write_temp("cli_red.json", doc.at("instance").dump());
  CliOut solve = run_cli("ssp --instance " + inst.string());
  CHECK(solve.exit_code == 0);
  CHECK(gp::Json::parse(solve.stdout_text).at("decision") == "yes");
}

TEST_CASE("emitters exit 0 without a decision") {
  CliOut out = run_cli("cocf --emit-grammar z");
  CHECK(out.exit_code == 0);
  CHECK(gp::Json::parse(out.stdout_text).contains("grammar"));
}
