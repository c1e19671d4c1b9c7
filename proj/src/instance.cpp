#include "grouppack/instance.hpp"

#include <set>

namespace gp {

namespace {

const std::set<std::string>& known_kinds() {
  static const std::set<std::string> kinds{"ssp",  "kp",         "gkp",
                                           "aratmp", "cocf",     "expression",
                                           "system", "cnf"};
  return kinds;
}

void require_fields(const Json& j, std::initializer_list<const char*> names) {
  for (const char* n : names)
    require(j.contains(n), Errc::parse,
            std::string("instance missing field \"") + n + "\"");
}

}  // namespace

InstanceFile instance_from_json(const Json& j) {
  require(j.is_object(), Errc::parse, "instance must be a JSON object");
  require(j.contains("kind") && j["kind"].is_string(), Errc::parse,
          "instance missing string field \"kind\"");
  InstanceFile f;
  f.kind = j["kind"].get<std::string>();
  require(known_kinds().count(f.kind) != 0, Errc::parse,
          "unknown instance kind \"" + f.kind + "\"");
  if (f.kind == "ssp" || f.kind == "kp") {
    require_fields(j, {"group"});
    require(j.contains("items") || j.contains("items_elems"), Errc::parse,
            "instance missing field \"items\"");
    require(j.contains("target") || j.contains("target_elem"), Errc::parse,
            "instance missing field \"target\"");
  } else if (f.kind == "gkp") {
    require_fields(j, {"group", "constants", "powers"});
  } else if (f.kind == "aratmp") {
    require_fields(j, {"group", "automaton", "word"});
  } else if (f.kind == "cocf") {
    require_fields(j, {"group", "items", "target"});
  } else if (f.kind == "cnf") {
    require(j.contains("cnf") || j.contains("dimacs"), Errc::parse,
            "cnf instance needs \"cnf\" or \"dimacs\"");
  }
  // expression and system carry their own wire formats; their parsers check
  f.doc = j;
  return f;
}

Json instance_to_json(const InstanceFile& f) { return f.doc; }

KnapsackInstance instance_knapsack(const InstanceFile& f) {
  require(f.kind == "ssp" || f.kind == "kp", Errc::invalid_argument,
          "not a subset-sum or knapsack instance");
  KnapsackInstance inst;
  inst.group = desc_from_json(f.doc.at("group"));
  if (f.doc.contains("items")) {
    for (const Json& w : f.doc.at("items"))
      inst.items.push_back(evaluate_word(inst.group, word_from_json(w)));
  } else {
    for (const Json& e : f.doc.at("items_elems"))
      inst.items.push_back(elem_from_json(inst.group, e));
  }
  if (f.doc.contains("target"))
    inst.target = evaluate_word(inst.group, word_from_json(f.doc.at("target")));
  else
    inst.target = elem_from_json(inst.group, f.doc.at("target_elem"));
  if (f.kind == "kp" && f.doc.contains("domain")) {
    std::string d = f.doc.at("domain").get<std::string>();
    require(d == "nat" || d == "int", Errc::parse,
            "domain must be \"nat\" or \"int\"");
    inst.integer_exponents = d == "int";
  }
  return inst;
}

WordInstance instance_words(const InstanceFile& f) {
  require(f.kind == "ssp" || f.kind == "kp" || f.kind == "cocf",
          Errc::invalid_argument, "instance kind has no word view");
  require(f.doc.contains("items") && f.doc.contains("target"),
          Errc::invalid_argument,
          "instance states elements, not generator words");
  WordInstance w;
  w.group = desc_from_json(f.doc.at("group"));
  int n = w.group.generator_count();
  auto check = [&](const GeneratorWord& gw) {
    for (int x : gw)
      require(x != 0 && x >= -n && x <= n, Errc::invalid_argument,
              "word letter out of range for the group");
  };
  for (const Json& wj : f.doc.at("items")) {
    w.items.push_back(word_from_json(wj));
    check(w.items.back());
  }
  w.target = word_from_json(f.doc.at("target"));
  check(w.target);
  return w;
}

}  // namespace gp
