#pragma once

#include "grouppack/jsonio.hpp"

namespace gp {

// Run one request document. "command" selects the procedure; the remaining
// fields mirror the CLI flags of the subcommand with the same name:
//   ssp            {"instance"}                     exact subset-sum
//   knapsack-h3    {"instance","budget","moduli","box"}
//   gkp            {"instance"}                     infinite dihedral only
//   aratmp         {"group","automaton","word"}
//   cocf           {"instance","grammar"|"fixture","validate_len"}
//                  or {"emit":"z"|"z2"} to print a fixture grammar
//   reduce-3cnf    {"dimacs"|"cnf"}
//   encode-poly    {"poly","a"}
//   emit-4subgroups{"expression"}
//   oracle         {"problem":"ssp"|"kp","instance","box","budget","wall"}
// Deciders put "decision" in the result; emitters return documents without
// one. Failures throw Error.
Json run_request(const Json& request);

// exit/status discipline shared by the C API and the CLI:
// yes 0, no 1, unknown or no-within-box 2, no decision field -1
int result_decision(const Json& result);

}  // namespace gp
