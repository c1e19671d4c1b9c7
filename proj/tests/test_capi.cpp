#include <doctest.h>

#include <string>

#include "grouppack.h"
#include "grouppack/jsonio.hpp"

namespace {

// run a request and hand back (status, decision, parsed result)
struct RunOut {
  int status = 0;
  int decision = GP_DECISION_NONE;
  gp::Json result;
};

RunOut run(const std::string& request) {
  gp_result* r = nullptr;
  RunOut out;
  out.status = gp_run(request.c_str(), &r);
  REQUIRE(r != nullptr);
  out.decision = gp_result_decision(r);
  out.result = gp::Json::parse(gp_result_json(r));
  gp_result_free(r);
  return out;
}

const char* kSspYes =
    R"({"command":"ssp","instance":{"kind":"ssp","group":{"type":"z","n":1},)"
    R"("items":[[1],[1,1]],"target":[1,1,1]}})";

}  // namespace

TEST_CASE("the c api reports a version") {
  std::string v = gp_version();
  CHECK_FALSE(v.empty());
}

TEST_CASE("requests round-trip through the c api") {
  RunOut out = run(kSspYes);
  CHECK(out.status == GP_OK);
  CHECK(out.decision == GP_DECISION_YES);
  CHECK(out.result.at("decision") == "yes");
  CHECK(out.result.at("witness") == gp::Json::array({1, 1}));
}

TEST_CASE("decisions map to the fixed codes") {
  std::string no_req =
      R"({"command":"ssp","instance":{"kind":"ssp","group":{"type":"z","n":1},)"
      R"("items":[[1,1]],"target":[1,1,1]}})";
  CHECK(run(no_req).decision == GP_DECISION_NO);

  std::string box_req =
      R"({"command":"oracle","problem":"kp","instance":{"kind":"kp",)"
      R"("group":{"type":"z","n":1},"items":[[1,1]],"target":[1,1,1]}})";
  RunOut box = run(box_req);
  CHECK(box.status == GP_OK);
  CHECK(box.decision == GP_DECISION_UNKNOWN);

  // emitters succeed without a decision
  RunOut emit = run(R"({"command":"cocf","emit":"z"})");
  CHECK(emit.status == GP_OK);
  CHECK(emit.decision == GP_DECISION_NONE);
  CHECK(emit.result.contains("grammar"));
}

TEST_CASE("failures carry the status and an error document") {
  CHECK(gp_run(nullptr, nullptr) == GP_ERR_PARSE);

  RunOut bad = run("{not json");
  CHECK(bad.status == GP_ERR_PARSE);
  CHECK(bad.result.contains("error"));
  CHECK(bad.result.at("code") == GP_ERR_PARSE);

  CHECK(run(R"({"command":"warp"})").status == GP_ERR_UNSUPPORTED);
  CHECK(run(R"([1,2,3])").status == GP_ERR_PARSE);

  std::string wrong_kind =
      R"({"command":"ssp","instance":{"kind":"kp","group":{"type":"z","n":1},)"
      R"("items":[[1]],"target":[1]}})";
  CHECK(run(wrong_kind).status == GP_ERR_INVALID);

  std::string too_big =
      R"({"command":"oracle","problem":"ssp","budget":2,"instance":)"
      R"({"kind":"ssp","group":{"type":"z","n":1},)"
      R"("items":[[1],[1],[1]],"target":[1]}})";
  RunOut limit = run(too_big);
  CHECK(limit.status == GP_ERR_LIMIT);
  CHECK(limit.decision == GP_DECISION_NONE);
}

TEST_CASE("null results read as empty") {
  CHECK(std::string(gp_result_json(nullptr)).empty());
  CHECK(gp_result_decision(nullptr) == GP_DECISION_NONE);
  gp_result_free(nullptr);  // must be a no-op
}
