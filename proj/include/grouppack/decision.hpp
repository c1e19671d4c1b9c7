#pragma once

#include <string>

namespace gp {

enum class Decision { yes, no, unknown };

inline const char* decision_str(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    default: return "unknown";
  }
}

}  // namespace gp
