#include "grouppack/harness.hpp"

#include "grouppack/automaton.hpp"
#include "grouppack/cocf.hpp"
#include "grouppack/extension.hpp"
#include "grouppack/hardness.hpp"
#include "grouppack/instance.hpp"
#include "grouppack/oracle.hpp"

namespace gp {

namespace {

Json vec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const BigInt& x : v) a.push_back(big_to_json(x));
  return a;
}

OracleBudget budget_from(const Json& req) {
  OracleBudget b;
  if (req.contains("box")) b.box = req.at("box").get<long>();
  if (req.contains("budget"))
    b.max_points = req.at("budget").get<std::size_t>();
  if (req.contains("wall")) b.wall_seconds = req.at("wall").get<double>();
  return b;
}

InstanceFile parse_instance(const Json& req, const char* kind) {
  require(req.contains("instance"), Errc::parse,
          "request missing \"instance\"");
  InstanceFile f = instance_from_json(req.at("instance"));
  require(f.kind == kind, Errc::invalid_argument,
          std::string("expected a \"") + kind + "\" instance, got \"" +
              f.kind + "\"");
  return f;
}

void check_witness(const KnapsackInstance& inst, const IntVec& w) {
  require(w.size() == inst.items.size(), Errc::precondition,
          "witness arity mismatch");
  GroupElement acc = identity(inst.group);
  for (std::size_t i = 0; i < w.size(); i++)
    acc = mul(acc, elem_pow(inst.items[i], w[i]));
  require(eq(acc, inst.target), Errc::precondition,
          "witness failed re-verification");
}

Json run_ssp(const Json& req) {
  InstanceFile f = parse_instance(req, "ssp");
  KnapsackInstance inst = instance_knapsack(f);
  SubsetSumAnswer ans = brute_force_subsetsum(inst, budget_from(req));
  Json out{{"command", "ssp"}};
  if (ans.solvable) {
    check_witness(inst, ans.witness);
    out["decision"] = "yes";
    out["witness"] = vec_to_json(ans.witness);
  } else {
    out["decision"] = "no";
    out["certificate"] = Json{
        {"method", "exhaustive_subsets"},
        {"points", big_to_json(BigInt(1) << inst.items.size())}};
  }
  return out;
}

Json run_knapsack_h3(const Json& req) {
  InstanceFile f = parse_instance(req, "kp");
  KnapsackInstance inst = instance_knapsack(f);
  KnapsackOptions opt;
  if (req.contains("moduli")) {
    opt.moduli.clear();
    for (const Json& m : req.at("moduli")) opt.moduli.push_back(m.get<long>());
  }
  if (req.contains("box")) opt.box = req.at("box").get<long>();
  if (req.contains("budget"))
    opt.max_points = req.at("budget").get<std::size_t>();
  KnapsackAnswer ans = decide_knapsack_h3(inst, opt);
  Json out{{"command", "knapsack-h3"},
           {"decision", decision_str(ans.decision)}};
  if (ans.decision == Decision::yes) {
    check_witness(inst, ans.witness);
    out["witness"] = vec_to_json(ans.witness);
  }
  if (!ans.certificate.is_null()) out["certificate"] = ans.certificate;
  return out;
}

Json run_gkp(const Json& req) {
  InstanceFile f = parse_instance(req, "gkp");
  GKPInstance g = gkp_from_json(f.doc);
  require(g.group.kind == GroupDesc::Kind::dinf, Errc::unsupported,
          "generalized knapsack is wired for the infinite dihedral group");
  CosetTable table = dinf_cyclic_table();
  GKPAnswer ans = decide_gkp(g, table, [&table](const HGKPInstance& h) {
    return abelian_gkp_oracle(table.subgroup, h);
  });
  Json out{{"command", "gkp"}, {"decision", decision_str(ans.decision)}};
  if (ans.witness) {
    require(is_identity(eval_gkp(g, *ans.witness)), Errc::precondition,
            "witness failed re-verification");
    out["witness"] = vec_to_json(*ans.witness);
  }
  return out;
}

Json run_aratmp(const Json& req) {
  require(req.contains("group") && req.contains("automaton") &&
              req.contains("word"),
          Errc::parse, "aratmp needs \"group\", \"automaton\", \"word\"");
  GroupDesc g = desc_from_json(req.at("group"));
  Automaton a = automaton_from_json(req.at("automaton"));
  validate_automaton(a, g);
  GeneratorWord w = word_from_json(req.at("word"));
  MembershipResult res = acyclic_membership(a, g, evaluate_word(g, w));
  Json out{{"command", "aratmp"}, {"decision", decision_str(res.decision)}};
  if (res.decision == Decision::yes) out["path"] = res.path;
  out["stats"] = Json{{"states_processed", res.stats.states_processed},
                      {"max_set_size", res.stats.max_set_size},
                      {"elements_stored", res.stats.elements_stored},
                      {"max_norm", big_to_json(res.stats.max_norm)},
                      {"norm_bound", big_to_json(res.stats.norm_bound)}};
  return out;
}

Grammar fixture_grammar(const std::string& name) {
  if (name == "z") return z_coword_grammar();
  if (name == "z2") return z2_coword_grammar();
  fail(Errc::invalid_argument,
       "unknown fixture \"" + name + "\" (have: z, z2)");
}

Json run_cocf(const Json& req) {
  if (req.contains("emit")) {
    Grammar g = fixture_grammar(req.at("emit").get<std::string>());
    return Json{{"command", "cocf"}, {"grammar", grammar_to_json(g)}};
  }
  InstanceFile f = parse_instance(req, "cocf");
  WordInstance w = instance_words(f);
  Grammar grammar;
  if (req.contains("grammar"))
    grammar = grammar_from_json(req.at("grammar"));
  else if (req.contains("fixture"))
    grammar = fixture_grammar(req.at("fixture").get<std::string>());
  else if (f.doc.contains("grammar"))
    grammar = grammar_from_json(f.doc.at("grammar"));
  else if (f.doc.contains("fixture"))
    grammar = fixture_grammar(f.doc.at("fixture").get<std::string>());
  else if (w.group.kind == GroupDesc::Kind::z && w.group.param == 1)
    grammar = z_coword_grammar();
  else if (w.group.kind == GroupDesc::Kind::z && w.group.param == 2)
    grammar = z2_coword_grammar();
  else
    fail(Errc::invalid_argument,
         "no co-word grammar given and no fixture matches the group");
  int vlen = 4;
  if (req.contains("validate_len")) vlen = req.at("validate_len").get<int>();
  CocfAnswer ans = decide_cocf_knapsack(grammar, w.group, w.items, w.target,
                                        vlen);
  Json out{{"command", "cocf"}, {"decision", ans.solvable ? "yes" : "no"}};
  if (ans.witness) out["witness"] = vec_to_json(*ans.witness);
  return out;
}

Json run_reduce_3cnf(const Json& req) {
  CNFFormula f;
  if (req.contains("dimacs"))
    f = cnf_from_dimacs(req.at("dimacs").get<std::string>());
  else if (req.contains("cnf"))
    f = cnf_from_json(req.at("cnf"));
  else
    fail(Errc::parse, "reduce-3cnf needs \"dimacs\" or \"cnf\"");
  SubsetSumReduction r = cnf_to_subsetsum(f);
  Json items = Json::array();
  for (const GeneratorWord& w : r.words) items.push_back(word_to_json(w));
  return Json{{"command", "reduce-3cnf"},
              {"nvars", r.nvars},
              {"nclauses", r.nclauses},
              {"instance", Json{{"kind", "ssp"},
                                {"group", desc_to_json(r.group)},
                                {"items", items},
                                {"target", word_to_json(r.target_word)}}}};
}

Json run_encode_poly(const Json& req) {
  require(req.contains("poly"), Errc::parse, "encode-poly needs \"poly\"");
  Polynomial p = polynomial_from_json(req.at("poly"));
  BigInt a = req.contains("a") ? big_from_json(req.at("a")) : BigInt(0);
  if (a != 0) {
    Polynomial::Term shift;
    shift.coeff = -a;
    shift.exps.assign(static_cast<std::size_t>(p.vars), 0);
    p.terms.push_back(std::move(shift));
  }
  EqSystem sys = polynomial_to_system(p);
  Expression expr = system_to_expression(sys);
  KnapsackInstance kp = expression_to_knapsack(expr);
  Json items = Json::array();
  for (const GroupElement& e : kp.items) items.push_back(elem_to_json(e));
  return Json{
      {"command", "encode-poly"},
      {"system", system_to_json(sys)},
      {"expression", expression_to_json(expr)},
      {"instance",
       Json{{"kind", "kp"},
            {"group", desc_to_json(kp.group)},
            {"items_elems", items},
            {"target_elem", elem_to_json(kp.target)},
            {"domain", kp.integer_exponents ? "int" : "nat"}}}};
}

Json run_emit_4subgroups(const Json& req) {
  require(req.contains("expression"), Errc::parse,
          "emit-4subgroups needs \"expression\"");
  Expression e = expression_from_json(req.at("expression"));
  FourSubgroups f = knapsack_to_four_subgroups(e);
  Json gens = Json::array();
  for (const auto& list : f.generators) {
    Json one = Json::array();
    for (const GroupElement& g : list) one.push_back(elem_to_json(g));
    gens.push_back(std::move(one));
  }
  return Json{{"command", "emit-4subgroups"},
              {"group", desc_to_json(f.group)},
              {"generators", gens},
              {"target", elem_to_json(f.target)}};
}

Json run_oracle(const Json& req) {
  require(req.contains("problem"), Errc::parse, "oracle needs \"problem\"");
  std::string problem = req.at("problem").get<std::string>();
  OracleBudget b = budget_from(req);
  if (problem == "ssp") {
    InstanceFile f = parse_instance(req, "ssp");
    KnapsackInstance inst = instance_knapsack(f);
    SubsetSumAnswer ans = brute_force_subsetsum(inst, b);
    Json out{{"command", "oracle"},
             {"problem", "ssp"},
             {"method", "exhaustive_subsets"}};
    if (ans.solvable) {
      check_witness(inst, ans.witness);
      out["decision"] = "yes";
      out["witness"] = vec_to_json(ans.witness);
    } else {
      out["decision"] = "no";
    }
    return out;
  }
  if (problem == "kp") {
    InstanceFile f = parse_instance(req, "kp");
    KnapsackInstance inst = instance_knapsack(f);
    BruteKnapsackAnswer ans = brute_force_knapsack(inst, b);
    Json out{{"command", "oracle"},
             {"problem", "kp"},
             {"method", "box_enumeration"},
             {"box", b.box}};
    if (ans.found) {
      check_witness(inst, ans.witness);
      out["decision"] = "yes";
      out["witness"] = vec_to_json(ans.witness);
    } else {
      out["decision"] = "no-within-box";
    }
    return out;
  }
  fail(Errc::invalid_argument,
       "unknown oracle problem \"" + problem + "\" (have: ssp, kp)");
}

}  // namespace

Json run_request(const Json& request) {
  require(request.is_object(), Errc::parse, "request must be a JSON object");
  require(request.contains("command") && request.at("command").is_string(),
          Errc::parse, "request missing string field \"command\"");
  std::string cmd = request.at("command").get<std::string>();
  if (cmd == "ssp") return run_ssp(request);
  if (cmd == "knapsack-h3") return run_knapsack_h3(request);
  if (cmd == "gkp") return run_gkp(request);
  if (cmd == "aratmp") return run_aratmp(request);
  if (cmd == "cocf") return run_cocf(request);
  if (cmd == "reduce-3cnf") return run_reduce_3cnf(request);
  if (cmd == "encode-poly") return run_encode_poly(request);
  if (cmd == "emit-4subgroups") return run_emit_4subgroups(request);
  if (cmd == "oracle") return run_oracle(request);
  fail(Errc::unsupported, "unknown command \"" + cmd + "\"");
}

int result_decision(const Json& result) {
  if (!result.is_object() || !result.contains("decision")) return -1;
  std::string d = result.at("decision").get<std::string>();
  if (d == "yes") return 0;
  if (d == "no") return 1;
  if (d == "unknown" || d == "no-within-box") return 2;
  return -1;
}

}  // namespace gp
