#pragma once

#include <stdexcept>
#include <string>

namespace gp {

enum class Errc {
  parse = 1,            // malformed input text or JSON
  invalid_argument,     // structurally valid input violating a schema rule
  descriptor_mismatch,  // elements from different groups combined
  precondition,         // documented operation precondition violated
  unsupported,          // valid input outside the implemented fragment
  limit_exceeded,       // configured search/size cap hit
};

/// All library failures surface as Error; the C API maps codes to ints.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace gp
