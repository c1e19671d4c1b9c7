#include "grouppack/extension.hpp"

#include <map>

namespace gp {

namespace {

constexpr size_t kBranchCap = 200000;

void validate_shape(const GKPInstance& g) {
  require(g.constants.size() == g.powers.size() + 1, Errc::invalid_argument,
          "an instance with k powers carries k+1 constants");
}

IntVec subgroup_word_vector(const GroupDesc& sub, const GeneratorWord& w) {
  IntVec v(static_cast<size_t>(sub.param), 0);
  for (int letter : w) {
    int idx = (letter > 0 ? letter : -letter) - 1;
    require(letter != 0 && idx < sub.param, Errc::invalid_argument,
            "subgroup letter out of range");
    v[static_cast<size_t>(idx)] += letter > 0 ? 1 : -1;
  }
  return v;
}

// exponent substitution recorded while splitting one power
struct Affine {
  BigInt base;
  BigInt scale;
  int hvar = -1;  // index into the subgroup instance's powers, -1 when pinned
};

}  // namespace

GKPInstance gkp_from_json(const Json& j) {
  require(j.is_object() && j.contains("group") && j.contains("constants") &&
              j.contains("powers"),
          Errc::parse, "instance wants {group, constants, powers}");
  GKPInstance g;
  g.group = desc_from_json(j.at("group"));
  require(j.at("constants").is_array() && j.at("powers").is_array(), Errc::parse,
          "constants and powers are word arrays");
  for (const auto& wj : j.at("constants")) g.constants.push_back(word_from_json(wj));
  for (const auto& wj : j.at("powers")) g.powers.push_back(word_from_json(wj));
  if (j.contains("domain")) {
    std::string d = j.at("domain").get<std::string>();
    require(d == "nat" || d == "int", Errc::parse, "domain is 'nat' or 'int'");
    g.integer_exponents = d == "int";
  }
  validate_shape(g);
  return g;
}

Json gkp_to_json(const GKPInstance& g) {
  Json cs = Json::array(), ps = Json::array();
  for (const auto& w : g.constants) cs.push_back(word_to_json(w));
  for (const auto& w : g.powers) ps.push_back(word_to_json(w));
  return Json{{"group", desc_to_json(g.group)},
              {"constants", cs},
              {"powers", ps},
              {"domain", g.integer_exponents ? "int" : "nat"}};
}

GroupElement eval_gkp(const GKPInstance& g, const IntVec& exps) {
  validate_shape(g);
  require(exps.size() == g.powers.size(), Errc::precondition, "exponent count mismatch");
  GroupElement acc = evaluate_word(g.group, g.constants[0]);
  for (size_t i = 0; i < g.powers.size(); i++) {
    acc = mul(acc, elem_pow(evaluate_word(g.group, g.powers[i]), exps[i]));
    acc = mul(acc, evaluate_word(g.group, g.constants[i + 1]));
  }
  return acc;
}

KnapsackInstance gkp_normalize(const GKPInstance& g) {
  validate_shape(g);
  KnapsackInstance out;
  out.group = g.group;
  out.integer_exponents = g.integer_exponents;
  GroupElement pre = evaluate_word(g.group, g.constants[0]);
  for (size_t i = 0; i < g.powers.size(); i++) {
    GroupElement gi = evaluate_word(g.group, g.powers[i]);
    out.items.push_back(mul(mul(pre, gi), inv(pre)));
    pre = mul(pre, evaluate_word(g.group, g.constants[i + 1]));
  }
  out.target = inv(pre);
  return out;
}

GKPInstance knapsack_to_gkp(const KnapsackInstance& inst, const std::vector<GeneratorWord>& items,
                            const GeneratorWord& target) {
  require(items.size() == inst.items.size(), Errc::precondition, "one word per item");
  for (size_t i = 0; i < items.size(); i++)
    require(eq(evaluate_word(inst.group, items[i]), inst.items[i]), Errc::precondition,
            "item word does not evaluate to its element");
  require(eq(evaluate_word(inst.group, target), inst.target), Errc::precondition,
          "target word does not evaluate to the target");
  GKPInstance g;
  g.group = inst.group;
  g.integer_exponents = inst.integer_exponents;
  g.powers = items;
  g.constants.assign(items.size(), GeneratorWord{});
  g.constants.push_back(word_inverse(target));
  return g;
}

CosetDecomposition walk_from_coset(const CosetTable& t, int coset, const GeneratorWord& w) {
  require(coset >= 0 && coset < static_cast<int>(t.reps.size()), Errc::precondition,
          "start coset out of range");
  CosetDecomposition d;
  d.coset = coset;
  for (int letter : w) {
    auto it = t.rewrite.find({d.coset, letter});
    require(it != t.rewrite.end(), Errc::precondition, "rewrite table misses an entry");
    d.hword.insert(d.hword.end(), it->second.first.begin(), it->second.first.end());
    d.coset = it->second.second;
  }
  return d;
}

std::pair<int, int> find_period(const CosetTable& t, int coset, const GeneratorWord& g) {
  std::map<int, int> seen;
  int c = coset, step = 0;
  for (;;) {
    auto it = seen.find(c);
    if (it != seen.end()) return {it->second, step - it->second};
    seen.emplace(c, step);
    c = walk_from_coset(t, c, g).coset;
    step++;
    require(step <= static_cast<int>(t.reps.size()) + 1, Errc::precondition,
            "coset walk failed to close");
  }
}

GeneratorWord move_right(const CosetTable& t, int coset, const GeneratorWord& g, int period) {
  require(period >= 1, Errc::precondition, "period must be positive");
  GeneratorWord h;
  int c = coset;
  for (int i = 0; i < period; i++) {
    CosetDecomposition d = walk_from_coset(t, c, g);
    h.insert(h.end(), d.hword.begin(), d.hword.end());
    c = d.coset;
  }
  require(c == coset, Errc::precondition, "walk does not return to its start coset");
  return h;
}

std::vector<PurifyBranch> purify_power(const CosetTable& t, int coset, const GeneratorWord& g) {
  auto [pre, period] = find_period(t, coset, g);
  std::vector<PurifyBranch> out;
  GeneratorWord acc;
  int c = coset;
  for (int s = 0; s < pre + period; s++) {
    PurifyBranch b;
    b.base = s;
    b.constant = acc;
    b.coset = c;
    if (s < pre) {
      b.scale = 0;  // exponent pinned inside the preperiod
    } else {
      b.scale = period;
      b.power = move_right(t, c, g, period);
    }
    out.push_back(std::move(b));
    CosetDecomposition d = walk_from_coset(t, c, g);
    acc.insert(acc.end(), d.hword.begin(), d.hword.end());
    c = d.coset;
  }
  return out;
}

std::optional<IntVec> abelian_gkp_oracle(const GroupDesc& sub, const HGKPInstance& h,
                                         const SolveLimits& lim) {
  require(sub.kind == GroupDesc::Kind::z, Errc::unsupported,
          "built-in oracle covers free abelian subgroups only");
  require(h.constants.size() == h.powers.size() + 1, Errc::invalid_argument,
          "an instance with k powers carries k+1 constants");
  IntVec base(static_cast<size_t>(sub.param), 0);
  for (const auto& w : h.constants) {
    IntVec v = subgroup_word_vector(sub, w);
    for (size_t i = 0; i < base.size(); i++) base[i] += v[i];
  }
  IntVec target;
  for (const BigInt& b : base) target.push_back(-b);
  if (h.powers.empty()) {
    for (const BigInt& b : target)
      if (b != 0) return std::nullopt;
    return IntVec{};
  }
  IntMat coins;
  for (const auto& w : h.powers) coins.push_back(subgroup_word_vector(sub, w));
  CoinSolution sol = vector_knapsack_nat(coins, target, lim);
  if (sol.decision == Decision::yes) return sol.witness;
  return std::nullopt;
}

GKPAnswer decide_gkp(const GKPInstance& g, const CosetTable& t, const SubgroupGKPOracle& oracle) {
  validate_shape(g);
  require(g.group == t.group, Errc::descriptor_mismatch,
          "instance and table live over different groups");

  if (g.integer_exponents) {
    // run over N on the item pairs g, g^-1 and fold the witness
    GKPInstance nat;
    nat.group = g.group;
    nat.constants.push_back(g.constants[0]);
    for (size_t i = 0; i < g.powers.size(); i++) {
      nat.powers.push_back(g.powers[i]);
      nat.powers.push_back(word_inverse(g.powers[i]));
      nat.constants.push_back(GeneratorWord{});
      nat.constants.push_back(g.constants[i + 1]);
    }
    GKPAnswer a = decide_gkp(nat, t, oracle);
    if (a.decision != Decision::yes) return a;
    IntVec folded;
    for (size_t i = 0; i < g.powers.size(); i++)
      folded.push_back((*a.witness)[2 * i] - (*a.witness)[2 * i + 1]);
    require(is_identity(eval_gkp(g, folded)), Errc::precondition,
            "folded witness failed re-verification");
    return GKPAnswer{Decision::yes, folded};
  }

  size_t leaves = 0;
  std::optional<IntVec> found;

  // depth-first over the exponent splits; the prefix invariant is
  // product-so-far = (subgroup part) * rep[coset]
  std::function<bool(size_t, int, GeneratorWord, HGKPInstance, std::vector<Affine>)> go =
      [&](size_t pos, int coset, GeneratorWord pending, HGKPInstance h,
          std::vector<Affine> aff) -> bool {
    CosetDecomposition d = walk_from_coset(t, coset, g.constants[pos]);
    pending.insert(pending.end(), d.hword.begin(), d.hword.end());
    coset = d.coset;

    if (pos == g.powers.size()) {
      leaves++;
      require(leaves <= kBranchCap, Errc::limit_exceeded, "too many exponent branches");
      if (coset != 0) return false;
      h.constants.push_back(pending);
      auto w = oracle(h);
      if (!w.has_value()) return false;
      IntVec xs;
      for (const Affine& a : aff) {
        BigInt x = a.base;
        if (a.hvar >= 0) x += a.scale * (*w)[static_cast<size_t>(a.hvar)];
        xs.push_back(x);
      }
      found = std::move(xs);
      return true;
    }

    for (const PurifyBranch& b : purify_power(t, coset, g.powers[pos])) {
      GeneratorWord p2 = pending;
      p2.insert(p2.end(), b.constant.begin(), b.constant.end());
      HGKPInstance h2 = h;
      std::vector<Affine> a2 = aff;
      if (b.scale == 0) {
        a2.push_back(Affine{b.base, 0, -1});
        if (go(pos + 1, b.coset, std::move(p2), std::move(h2), std::move(a2))) return true;
      } else {
        h2.constants.push_back(std::move(p2));
        h2.powers.push_back(b.power);
        a2.push_back(Affine{b.base, b.scale, static_cast<int>(h2.powers.size()) - 1});
        if (go(pos + 1, b.coset, GeneratorWord{}, std::move(h2), std::move(a2))) return true;
      }
    }
    return false;
  };

  if (go(0, 0, {}, {}, {})) {
    require(is_identity(eval_gkp(g, *found)), Errc::precondition,
            "witness failed re-verification");
    return GKPAnswer{Decision::yes, found};
  }
  return GKPAnswer{Decision::no, std::nullopt};
}

}  // namespace gp
