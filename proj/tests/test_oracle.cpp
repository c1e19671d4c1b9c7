#include <doctest.h>

#include <random>

#include "grouppack/hardness.hpp"
#include "grouppack/knapsack.hpp"
#include "grouppack/oracle.hpp"

using namespace gp;

namespace {

KnapsackInstance z_instance(const std::vector<long>& items, long target) {
  KnapsackInstance inst;
  inst.group = GroupDesc::z(1);
  GroupElement g = generator(inst.group, 1);
  for (long v : items) inst.items.push_back(elem_pow(g, v));
  inst.target = elem_pow(g, target);
  return inst;
}

GroupElement product_at(const KnapsackInstance& inst, const IntVec& exps) {
  GroupElement acc = identity(inst.group);
  for (size_t i = 0; i < exps.size(); i++) acc = mul(acc, elem_pow(inst.items[i], exps[i]));
  return acc;
}

GeneratorWord random_word(std::mt19937& rng, int gens, int len) {
  std::uniform_int_distribution<int> letter(1, gens), coin(0, 1), length(0, len);
  GeneratorWord w;
  int n = length(rng);
  for (int i = 0; i < n; i++) w.push_back(coin(rng) ? letter(rng) : -letter(rng));
  return w;
}

}  // namespace

TEST_CASE("subset sum over Z hits and misses exactly") {
  KnapsackInstance inst = z_instance({1, 2, 4}, 5);
  SubsetSumAnswer ans = brute_force_subsetsum(inst);
  REQUIRE(ans.solvable);
  CHECK(ans.witness == IntVec{1, 0, 1});
  CHECK(eq(product_at(inst, ans.witness), inst.target));

  // 1 + 2 + 4 = 7, so 8 is out of reach for any subset
  CHECK_FALSE(brute_force_subsetsum(z_instance({1, 2, 4}, 8)).solvable);
}

TEST_CASE("empty subset sum is identity only") {
  KnapsackInstance inst = z_instance({}, 0);
  CHECK(brute_force_subsetsum(inst).solvable);
  inst.target = elem_pow(generator(inst.group, 1), 1);
  CHECK_FALSE(brute_force_subsetsum(inst).solvable);
}

TEST_CASE("subset sum rejects integer-exponent instances") {
  KnapsackInstance inst = z_instance({1}, 1);
  inst.integer_exponents = true;
  CHECK_THROWS_WITH_AS(brute_force_subsetsum(inst), doctest::Contains("subset"),
                       Error);
}

TEST_CASE("knapsack box search on the heisenberg group") {
  KnapsackInstance inst;
  inst.group = GroupDesc::heis_ze(0);
  GroupElement g = mul(generator(inst.group, 1), generator(inst.group, 2));
  inst.items = {g};
  // g = (1,1,0), g^2 = (2,2,1): the center picks up a*b along the way
  inst.target = mul(g, g);
  BruteKnapsackAnswer ans = brute_force_knapsack(inst);
  REQUIRE(ans.found);
  CHECK(ans.witness == IntVec{2});
  CHECK(eq(product_at(inst, ans.witness), inst.target));
}

TEST_CASE("a knapsack miss only rules out the box") {
  // 2x = 3 has no solution at all, but the oracle only reports the box
  KnapsackInstance inst = z_instance({2}, 3);
  OracleBudget b;
  b.box = 20;
  CHECK_FALSE(brute_force_knapsack(inst, b).found);
}

TEST_CASE("integer-exponent knapsack searches negative exponents") {
  KnapsackInstance inst = z_instance({2}, -6);
  inst.integer_exponents = true;
  BruteKnapsackAnswer ans = brute_force_knapsack(inst);
  REQUIRE(ans.found);
  CHECK(ans.witness == IntVec{-3});

  inst.integer_exponents = false;
  CHECK_FALSE(brute_force_knapsack(inst).found);
}

TEST_CASE("budgets refuse oversized searches") {
  OracleBudget tiny;
  tiny.max_points = 4;
  KnapsackInstance inst = z_instance({1, 2, 4}, 5);
  CHECK_THROWS_AS(brute_force_subsetsum(inst, tiny), Error);
  CHECK_THROWS_AS(brute_force_knapsack(inst, tiny), Error);
  try {
    brute_force_knapsack(inst, tiny);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::limit_exceeded);
  }
}

TEST_CASE("cnf reduction solvability matches satisfiability") {
  auto reduce_and_solve = [](const CNFFormula& f) {
    SubsetSumReduction r = cnf_to_subsetsum(f);
    KnapsackInstance inst;
    inst.group = r.group;
    for (const GeneratorWord& w : r.words)
      inst.items.push_back(evaluate_word(r.group, w));
    inst.target = evaluate_word(r.group, r.target_word);
    return brute_force_subsetsum(inst).solvable;
  };

  CNFFormula sat;
  sat.vars = 2;
  sat.clauses = {{1, -2}, {2}};
  CHECK(reduce_and_solve(sat));

  CNFFormula unsat;
  unsat.vars = 1;
  unsat.clauses = {{1}, {-1}};
  CHECK_FALSE(reduce_and_solve(unsat));
}

TEST_CASE("box search agrees with the h3 decision procedure") {
  std::mt19937 rng(4511);
  OracleBudget b;
  b.box = 5;
  int hits = 0;
  for (int round = 0; round < 40; round++) {
    KnapsackInstance inst;
    inst.group = GroupDesc::heis_ze(0);
    int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; i++)
      inst.items.push_back(evaluate_word(inst.group, random_word(rng, 2, 2)));
    inst.target = evaluate_word(inst.group, random_word(rng, 2, 3));
    BruteKnapsackAnswer brute = brute_force_knapsack(inst, b);
    KnapsackAnswer exact = decide_knapsack_h3(inst);
    if (brute.found) {
      hits++;
      CHECK(exact.decision == Decision::yes);
      CHECK(eq(product_at(inst, brute.witness), inst.target));
    }
    if (exact.decision == Decision::no) CHECK_FALSE(brute.found);
  }
  CHECK(hits >= 10);
}
