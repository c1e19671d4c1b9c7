#include "grouppack.h"

#include <exception>
#include <string>

#include "grouppack/harness.hpp"

struct gp_result {
  std::string text;
  int decision = GP_DECISION_NONE;
};

namespace {

int status_of(gp::Errc code) {
  switch (code) {
    case gp::Errc::parse:
      return GP_ERR_PARSE;
    case gp::Errc::invalid_argument:
    case gp::Errc::descriptor_mismatch:
    case gp::Errc::precondition:
      return GP_ERR_INVALID;
    case gp::Errc::unsupported:
      return GP_ERR_UNSUPPORTED;
    case gp::Errc::limit_exceeded:
      return GP_ERR_LIMIT;
  }
  return GP_ERR_INTERNAL;
}

gp_result* error_result(int status, const std::string& msg) {
  gp_result* r = new gp_result;
  r->text = gp::Json{{"error", msg}, {"code", status}}.dump();
  return r;
}

}  // namespace

extern "C" {

int gp_run(const char* request_json, gp_result** out) {
  if (out) *out = nullptr;
  int status = GP_ERR_INTERNAL;
  std::string message = "internal error";
  try {
    if (!request_json) {
      status = GP_ERR_PARSE;
      message = "null request";
    } else {
      gp::Json req = gp::parse_json_text(request_json);
      gp::Json res = gp::run_request(req);
      if (out) {
        gp_result* r = new gp_result;
        r->text = res.dump();
        r->decision = gp::result_decision(res);
        *out = r;
      }
      return GP_OK;
    }
  } catch (const gp::Error& e) {
    status = status_of(e.code());
    message = e.what();
  } catch (const std::exception& e) {
    status = GP_ERR_INTERNAL;
    message = e.what();
  } catch (...) {
    status = GP_ERR_INTERNAL;
    message = "unknown failure";
  }
  if (out) *out = error_result(status, message);
  return status;
}

const char* gp_result_json(const gp_result* r) {
  return r ? r->text.c_str() : "";
}

int gp_result_decision(const gp_result* r) {
  return r ? r->decision : GP_DECISION_NONE;
}

void gp_result_free(gp_result* r) { delete r; }

const char* gp_version(void) { return "0.1.0"; }

}  // extern "C"
