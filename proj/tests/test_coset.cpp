#include <doctest.h>

#include <random>
#include <set>

#include "grouppack/coset.hpp"

using namespace gp;

namespace {

GeneratorWord random_word(const GroupDesc& g, std::mt19937_64& rng, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen), gen(1, g.generator_count()), s(0, 1);
  GeneratorWord w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back(s(rng) ? gen(rng) : -gen(rng));
  return w;
}

Automaton random_dag(const GroupDesc& g, std::mt19937_64& rng, int states, int edges,
                     int maxlen) {
  Automaton a;
  a.states = states;
  a.initial = 0;
  a.finals = {states - 1};
  std::uniform_int_distribution<int> st(0, states - 1);
  for (int e = 0; e < edges; ++e) {
    int p = st(rng), q = st(rng);
    if (p == q) continue;
    if (p > q) std::swap(p, q);
    a.transitions.push_back({p, random_word(g, rng, maxlen), q, std::nullopt});
  }
  return a;
}

}  // namespace

TEST_CASE("the built-in dihedral table validates and round-trips") {
  CosetTable t = dinf_cyclic_table();
  CHECK(t.reps.size() == 2);
  CHECK(t.rewrite.size() == 8);
  Json j = coset_table_to_json(t);
  CosetTable back = coset_table_from_json(j);
  CHECK(back.reps.size() == 2);
  CHECK(back.rewrite == t.rewrite);
}

TEST_CASE("coset walks decompose dihedral words") {
  CosetTable t = dinf_cyclic_table();
  // t s t  =  t t^-1 followed by the reflection representative
  CosetDecomposition d = decompose_coset(t, {1, 2, 1});
  CHECK(d.hword == GeneratorWord{1, -1});
  CHECK(d.coset == 1);
  // every random word decomposes consistently (the walk self-checks)
  std::mt19937_64 rng(97);
  GroupDesc g = GroupDesc::dinf();
  for (int i = 0; i < 300; ++i) {
    GeneratorWord w = random_word(g, rng, 12);
    CosetDecomposition dd = decompose_coset(t, w);
    GroupElement lhs = evaluate_word(g, w);
    GroupElement rhs = mul(embed_subgroup_word(t, dd.hword), t.reps[dd.coset]);
    CHECK(eq(lhs, rhs));
    // coset index equals the flip bit of the value
    CHECK(dd.coset == std::get<DihedralElem>(lhs.payload).flip);
  }
}

TEST_CASE("malformed tables are rejected") {
  CosetTable t = dinf_cyclic_table();
  Json j = coset_table_to_json(t);
  Json missing = j;
  missing["rewrite"].erase(0);
  CHECK_THROWS_AS((void)coset_table_from_json(missing), Error);
  Json wrongid = j;
  wrongid["representatives"][0] = Json::array({3, 0});
  CHECK_THROWS_AS((void)coset_table_from_json(wrongid), Error);
  Json badword = j;
  badword["rewrite"][0][2] = Json::array({1, 1, 1});
  CHECK_THROWS_AS((void)coset_table_from_json(badword), Error);
}

TEST_CASE("transfer preserves membership through the subgroup") {
  CosetTable t = dinf_cyclic_table();
  GroupDesc g = GroupDesc::dinf();
  GroupDesc h = t.subgroup;
  std::mt19937_64 rng(101);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Automaton a = random_dag(g, rng, 5, 8, 3);
    GeneratorWord target_word = random_word(g, rng, 6);
    GroupElement target = evaluate_word(g, target_word);
    auto direct = acyclic_membership(a, g, target);

    CosetDecomposition dec = decompose_coset(t, target_word);
    Automaton lifted = transfer_to_subgroup(t, a, dec.coset);
    GroupElement htarget = evaluate_word(h, dec.hword);
    auto viah = acyclic_membership(lifted, h, htarget);

    CHECK(direct.decision == viah.decision);
    (direct.decision == Decision::yes ? yes : no) += 1;
  }
  // both outcomes must actually occur for the comparison to mean anything
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("transferred state space is the product with the coset set") {
  CosetTable t = dinf_cyclic_table();
  Automaton a;
  a.states = 3;
  a.initial = 0;
  a.finals = {2};
  a.transitions.push_back({0, {2}, 1, std::nullopt});
  a.transitions.push_back({1, {2, 1}, 2, std::nullopt});
  Automaton lifted = transfer_to_subgroup(t, a, 0);
  CHECK(lifted.states == 6);
  CHECK(lifted.transitions.size() == 4);
  CHECK(lifted.finals == std::vector<int>{4});
  // s then s t lands back in the trivial coset with h = t
  GroupDesc h = t.subgroup;
  auto r = acyclic_membership(lifted, h, generator(h, 1));
  CHECK(r.decision == Decision::yes);
}
