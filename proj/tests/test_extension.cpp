#include <doctest.h>

#include <random>

#include "grouppack/extension.hpp"

using namespace gp;

namespace {

std::optional<IntVec> brute_gkp(const GKPInstance& g, long lo, long hi) {
  const size_t k = g.powers.size();
  IntVec exps(k, BigInt(lo));
  for (;;) {
    if (is_identity(eval_gkp(g, exps))) return exps;
    size_t i = 0;
    while (i < k && exps[i] == hi) {
      exps[i] = lo;
      i++;
    }
    if (i == k) return std::nullopt;
    exps[i] += 1;
  }
}

GeneratorWord random_dinf_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 3);
  static const int alphabet[4] = {1, -1, 2, -2};
  GeneratorWord w;
  int n = len(rng);
  for (int i = 0; i < n; i++) w.push_back(alphabet[letter(rng)]);
  return w;
}

GKPInstance random_dinf_gkp(std::mt19937& rng, bool integer) {
  std::uniform_int_distribution<int> kk(0, 2);
  GKPInstance g;
  g.group = GroupDesc::dinf();
  g.integer_exponents = integer;
  int k = kk(rng);
  g.constants.push_back(random_dinf_word(rng, 3));
  for (int i = 0; i < k; i++) {
    g.powers.push_back(random_dinf_word(rng, 3));
    g.constants.push_back(random_dinf_word(rng, 3));
  }
  return g;
}

GroupElement product_at(const KnapsackInstance& inst, const IntVec& exps) {
  GroupElement acc = identity(inst.group);
  for (size_t i = 0; i < inst.items.size(); i++) acc = mul(acc, elem_pow(inst.items[i], exps[i]));
  return acc;
}

}  // namespace

TEST_CASE("generalized instances evaluate and round trip") {
  GKPInstance g;
  g.group = GroupDesc::dinf();
  g.constants = {{2}, {2}};
  g.powers = {{1}};
  // s t^3 s = t^-3
  GroupElement got = eval_gkp(g, {3});
  CHECK(eq(got, evaluate_word(g.group, {-1, -1, -1})));

  GKPInstance back = gkp_from_json(gkp_to_json(g));
  CHECK(back.group == g.group);
  CHECK(back.constants == g.constants);
  CHECK(back.powers == g.powers);
  CHECK(back.integer_exponents == g.integer_exponents);

  Json bad = gkp_to_json(g);
  bad["powers"].push_back(Json::array());
  CHECK_THROWS_AS((void)gkp_from_json(bad), Error);
  CHECK_THROWS_AS((void)eval_gkp(g, {1, 2}), Error);
}

TEST_CASE("normalization folds constants into conjugated items") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> e(0, 4);
  for (int trial = 0; trial < 150; trial++) {
    GKPInstance g = random_dinf_gkp(rng, false);
    KnapsackInstance norm = gkp_normalize(g);
    REQUIRE(norm.items.size() == g.powers.size());
    for (int probe = 0; probe < 6; probe++) {
      IntVec exps;
      for (size_t i = 0; i < g.powers.size(); i++) exps.push_back(e(rng));
      bool direct = is_identity(eval_gkp(g, exps));
      bool folded = eq(product_at(norm, exps), norm.target);
      CHECK(direct == folded);
    }
  }
}

TEST_CASE("coset walks from arbitrary start cosets") {
  CosetTable t = dinf_cyclic_table();
  CosetDecomposition d = walk_from_coset(t, 0, {1, 2, 1});
  CHECK(d.hword == GeneratorWord{1, -1});
  CHECK(d.coset == 1);
  // r_1 (t s t) = s t s t = (s t)^2 = 1
  CosetDecomposition d1 = walk_from_coset(t, 1, {1, 2, 1});
  CHECK(d1.hword == GeneratorWord{-1, 1});
  CHECK(d1.coset == 0);
  CHECK(eq(mul(t.reps[1], evaluate_word(t.group, {1, 2, 1})),
           mul(embed_subgroup_word(t, d1.hword), t.reps[0])));
  CHECK_THROWS_AS((void)walk_from_coset(t, 5, {1}), Error);
}

TEST_CASE("coset power walks are purely periodic") {
  CosetTable t = dinf_cyclic_table();
  CHECK(find_period(t, 0, {1}) == std::pair<int, int>{0, 1});
  CHECK(find_period(t, 1, {1}) == std::pair<int, int>{0, 1});
  CHECK(find_period(t, 0, {2}) == std::pair<int, int>{0, 2});
  CHECK(find_period(t, 0, {2, 1}) == std::pair<int, int>{0, 2});
  CHECK(find_period(t, 0, {}) == std::pair<int, int>{0, 1});

  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; trial++) {
    GeneratorWord w = random_dinf_word(rng, 4);
    auto [m, l] = find_period(t, trial % 2, w);
    CHECK(m == 0);  // right multiplication permutes cosets
    CHECK(l >= 1);
    CHECK(l <= 2);
  }
}

TEST_CASE("move_right conjugates closed walks into the subgroup") {
  CosetTable t = dinf_cyclic_table();
  CHECK(move_right(t, 0, {1}, 1) == GeneratorWord{1});
  CHECK(move_right(t, 1, {1}, 1) == GeneratorWord{-1});
  CHECK(move_right(t, 0, {2}, 2) == GeneratorWord{});
  CHECK_THROWS_AS((void)move_right(t, 0, {2}, 1), Error);

  std::mt19937 rng(78);
  for (int trial = 0; trial < 60; trial++) {
    GeneratorWord w = random_dinf_word(rng, 4);
    int c = trial % 2;
    auto [m, l] = find_period(t, c, w);
    GeneratorWord h = move_right(t, c, w, l);
    // r_c g^l = h r_c in the big group
    GroupElement lhs = mul(t.reps[static_cast<size_t>(c)],
                           elem_pow(evaluate_word(t.group, w), l));
    GroupElement rhs = mul(embed_subgroup_word(t, h), t.reps[static_cast<size_t>(c)]);
    CHECK(eq(lhs, rhs));
  }
}

TEST_CASE("purify splits cover the exponent line") {
  CosetTable t = dinf_cyclic_table();
  auto bs = purify_power(t, 0, {2});
  REQUIRE(bs.size() == 2);
  CHECK(bs[0].base == 0);
  CHECK(bs[0].scale == 2);
  CHECK(bs[0].constant == GeneratorWord{});
  CHECK(bs[0].power == GeneratorWord{});
  CHECK(bs[0].coset == 0);
  CHECK(bs[1].base == 1);
  CHECK(bs[1].scale == 2);
  CHECK(bs[1].coset == 1);

  std::mt19937 rng(79);
  for (int trial = 0; trial < 50; trial++) {
    GeneratorWord w = random_dinf_word(rng, 4);
    int c = trial % 2;
    GroupElement ge = evaluate_word(t.group, w);
    for (const PurifyBranch& b : purify_power(t, c, w)) {
      for (long tt = 0; tt <= 3; tt++) {
        if (b.scale == 0 && tt > 0) continue;
        BigInt x = b.base + b.scale * tt;
        GroupElement lhs = mul(t.reps[static_cast<size_t>(c)], elem_pow(ge, x));
        GroupElement rhs = embed_subgroup_word(t, b.constant);
        rhs = mul(rhs, elem_pow(embed_subgroup_word(t, b.power), tt));
        rhs = mul(rhs, t.reps[static_cast<size_t>(b.coset)]);
        CHECK(eq(lhs, rhs));
      }
    }
  }
}

TEST_CASE("abelian oracle solves subgroup equations exactly") {
  GroupDesc z1 = GroupDesc::z(1);
  HGKPInstance a;
  a.constants = {{1, 1, 1}, {}};
  a.powers = {{-1}};
  auto w = abelian_gkp_oracle(z1, a);
  REQUIRE(w.has_value());
  CHECK(*w == IntVec{3});

  a.powers = {{1}};
  CHECK(!abelian_gkp_oracle(z1, a).has_value());

  HGKPInstance empty;
  empty.constants = {{1, -1}};
  CHECK(abelian_gkp_oracle(z1, empty).has_value());
  empty.constants = {{1}};
  CHECK(!abelian_gkp_oracle(z1, empty).has_value());

  CHECK_THROWS_AS((void)abelian_gkp_oracle(GroupDesc::dinf(), a), Error);
}

TEST_CASE("dihedral generalized knapsack against brute force") {
  CosetTable t = dinf_cyclic_table();
  SubgroupGKPOracle oracle = [&](const HGKPInstance& h) {
    return abelian_gkp_oracle(t.subgroup, h);
  };

  GKPInstance g;
  g.group = GroupDesc::dinf();
  g.constants = {{}, {1, 1}};
  g.powers = {{-1}};
  GKPAnswer a = decide_gkp(g, t, oracle);
  CHECK(a.decision == Decision::yes);
  CHECK(*a.witness == IntVec{2});

  g.constants = {{}, {2}};
  CHECK(decide_gkp(g, t, oracle).decision == Decision::no);

  g.constants = {{}, {1, 1, 1}};
  g.powers = {{1}};
  CHECK(decide_gkp(g, t, oracle).decision == Decision::no);
  g.integer_exponents = true;
  a = decide_gkp(g, t, oracle);
  CHECK(a.decision == Decision::yes);
  CHECK(*a.witness == IntVec{-3});
  g.integer_exponents = false;

  g.constants = {{2}, {2}};
  g.powers = {{1}};
  a = decide_gkp(g, t, oracle);
  CHECK(a.decision == Decision::yes);
  CHECK(*a.witness == IntVec{0});

  GKPInstance k0;
  k0.group = GroupDesc::dinf();
  k0.constants = {{1, 2, 1, 2}};  // (t s)^2 = 1
  a = decide_gkp(k0, t, oracle);
  CHECK(a.decision == Decision::yes);
  CHECK(a.witness->empty());
  k0.constants = {{2}};
  CHECK(decide_gkp(k0, t, oracle).decision == Decision::no);

  std::mt19937 rng(42);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 120; trial++) {
    bool integer = trial % 2 == 1;
    GKPInstance inst = random_dinf_gkp(rng, integer);
    GKPAnswer ans = decide_gkp(inst, t, oracle);
    auto brute = integer ? brute_gkp(inst, -6, 6) : brute_gkp(inst, 0, 8);
    if (ans.decision == Decision::yes) {
      yes++;
      CHECK(is_identity(eval_gkp(inst, *ans.witness)));
      if (!inst.integer_exponents)
        for (const BigInt& x : *ans.witness) CHECK(x >= 0);
    } else {
      no++;
      CHECK(!brute.has_value());
    }
    if (brute.has_value()) CHECK(ans.decision == Decision::yes);
  }
  CHECK(yes >= 10);
  CHECK(no >= 10);
}

TEST_CASE("plain knapsack embeds as a generalized instance") {
  GroupDesc d = GroupDesc::dinf();
  KnapsackInstance inst;
  inst.group = d;
  inst.items = {evaluate_word(d, {1})};
  inst.target = evaluate_word(d, {1, 1});
  GKPInstance g = knapsack_to_gkp(inst, {{1}}, {1, 1});
  CHECK(g.constants.back() == GeneratorWord{-1, -1});

  CosetTable t = dinf_cyclic_table();
  SubgroupGKPOracle oracle = [&](const HGKPInstance& h) {
    return abelian_gkp_oracle(t.subgroup, h);
  };
  GKPAnswer a = decide_gkp(g, t, oracle);
  CHECK(a.decision == Decision::yes);
  CHECK(*a.witness == IntVec{2});

  CHECK_THROWS_AS((void)knapsack_to_gkp(inst, {{2}}, {1, 1}), Error);
}
