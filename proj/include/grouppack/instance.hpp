#pragma once

#include <string>
#include <vector>

#include "grouppack/knapsack.hpp"

namespace gp {

// One problem file, discriminated by "kind" so reducer outputs feed straight
// back in as inputs. Kinds and their payloads:
//   ssp         {"kind","group","items","target"}            exponents {0,1}
//   kp          ssp fields plus "domain": "nat" (default) | "int"
//   gkp         {"kind","group","constants","powers","domain"}
//   aratmp      {"kind","group","automaton","word"}
//   cocf        {"kind","group","items","target"} (+ "grammar" | "fixture")
//   expression  {"kind"} plus the expression wire fields
//   system      {"kind"} plus the equation-system wire fields
//   cnf         {"kind"} plus "cnf" (clause lists) or "dimacs" (text)
// Items and targets are generator words; ssp/kp alternatively take
// serialized elements under "items_elems" / "target_elem" for groups whose
// elements are easier to state than words (reducer outputs use this).
struct InstanceFile {
  std::string kind;
  Json doc;  // the full document, "kind" included
};

InstanceFile instance_from_json(const Json& j);
Json instance_to_json(const InstanceFile& f);

// group + evaluated items + target of an ssp/kp instance; kp "domain":"int"
// sets integer_exponents
KnapsackInstance instance_knapsack(const InstanceFile& f);

// the word-level view (ssp/kp/cocf); rejects element-only instances
struct WordInstance {
  GroupDesc group;
  std::vector<GeneratorWord> items;
  GeneratorWord target;
};

WordInstance instance_words(const InstanceFile& f);

}  // namespace gp
