#include <doctest.h>

#include <random>
#include <set>

#include "grouppack/automaton.hpp"

using namespace gp;

namespace {

GeneratorWord random_word(const GroupDesc& g, std::mt19937_64& rng, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen), gen(1, g.generator_count()), s(0, 1);
  GeneratorWord w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back(s(rng) ? gen(rng) : -gen(rng));
  return w;
}

// random acyclic automaton: transitions only go from lower to higher states
Automaton random_dag(const GroupDesc& g, std::mt19937_64& rng, int states, int edges,
                     int maxlen) {
  Automaton a;
  a.states = states;
  a.initial = 0;
  std::uniform_int_distribution<int> st(0, states - 1);
  std::set<int> fins;
  fins.insert(states - 1);
  if (st(rng) % 2) fins.insert(st(rng));
  a.finals.assign(fins.begin(), fins.end());
  for (int e = 0; e < edges; ++e) {
    int p = st(rng), q = st(rng);
    if (p == q) continue;
    if (p > q) std::swap(p, q);
    a.transitions.push_back({p, random_word(g, rng, maxlen), q, std::nullopt});
  }
  return a;
}

// all values reachable at final states, by explicit path enumeration
std::vector<GroupElement> enumerate_values(const Automaton& a, const GroupDesc& g) {
  std::vector<std::vector<GroupElement>> at(a.states);
  std::vector<GroupElement> out;
  // states are topologically indexed in these tests
  at[a.initial].push_back(identity(g));
  for (int s = 0; s < a.states; ++s)
    for (const auto& t : a.transitions)
      if (t.from == s)
        for (const auto& v : at[s]) at[t.to].push_back(mul(v, label_value(t, g)));
  for (int f : a.finals)
    for (const auto& v : at[f]) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("JSON round trip and validation") {
  Json j = {{"states", 3},
            {"initial", 0},
            {"finals", Json::array({2})},
            {"transitions",
             Json::array({Json::array({0, Json::array({1, -2}), 1}),
                          Json::array({1, Json::array(), 2})})}};
  Automaton a = automaton_from_json(j);
  CHECK(a.states == 3);
  CHECK(a.transitions.size() == 2);
  CHECK(a.transitions[0].word == GeneratorWord{1, -2});
  CHECK(automaton_from_json(automaton_to_json(a)).transitions.size() == 2);
  validate_automaton(a, GroupDesc::heis_ze(0));
  CHECK_THROWS_AS(validate_automaton(a, GroupDesc::z(1)), Error);  // letter 2 illegal
  Automaton bad = a;
  bad.finals = {7};
  CHECK_THROWS_AS(validate_automaton(bad, GroupDesc::heis_ze(0)), Error);
}

TEST_CASE("membership rejects cyclic automata") {
  GroupDesc g = GroupDesc::z(1);
  Automaton a;
  a.states = 2;
  a.finals = {1};
  a.transitions.push_back({0, {1}, 1, std::nullopt});
  a.transitions.push_back({1, {1}, 0, std::nullopt});
  CHECK_THROWS_AS((void)acyclic_membership(a, g, identity(g)), Error);
  Automaton loop;
  loop.states = 1;
  loop.finals = {0};
  loop.transitions.push_back({0, {1}, 0, std::nullopt});
  CHECK_THROWS_AS((void)acyclic_membership(loop, g, identity(g)), Error);
}

TEST_CASE("split preserves the evaluated language") {
  std::mt19937_64 rng(71);
  for (const GroupDesc& g : {GroupDesc::heis_ze(0), GroupDesc::dinf(), GroupDesc::ut(3)}) {
    for (int trial = 0; trial < 25; ++trial) {
      Automaton a = random_dag(g, rng, 5, 8, 4);
      Automaton sp = split_transitions(a, g);
      std::size_t expect = a.states;
      for (const auto& t : a.transitions)
        expect += t.word.size() > 1 ? t.word.size() - 1 : 0;
      CHECK(sp.states == (int)expect);
      for (const auto& t : sp.transitions) CHECK(t.word.size() <= 1);
      for (int probe = 0; probe < 6; ++probe) {
        GroupElement target =
            probe == 0 ? identity(g) : evaluate_word(g, random_word(g, rng, 6));
        auto r1 = acyclic_membership(a, g, target);
        // the split automaton is no longer topologically indexed, which
        // acyclic_membership handles on its own
        auto r2 = acyclic_membership(sp, g, target);
        CHECK(r1.decision == r2.decision);
      }
    }
  }
}

TEST_CASE("membership agrees with explicit path enumeration") {
  std::mt19937_64 rng(73);
  for (const GroupDesc& g :
       {GroupDesc::heis_ze(0), GroupDesc::dinf(), GroupDesc::ut(3), GroupDesc::z(2)}) {
    for (int trial = 0; trial < 30; ++trial) {
      Automaton a = random_dag(g, rng, 5, 7, 3);
      auto values = enumerate_values(a, g);
      std::set<std::string> keys;
      for (const auto& v : values) keys.insert(canonical_key(v));
      for (int probe = 0; probe < 8; ++probe) {
        GroupElement target = probe < 2 && !values.empty()
                                  ? values[probe % values.size()]
                                  : evaluate_word(g, random_word(g, rng, 5));
        auto r = acyclic_membership(a, g, target);
        CHECK((r.decision == Decision::yes) == keys.count(canonical_key(target)));
        if (r.decision == Decision::yes) {
          GroupElement acc = identity(g);
          for (int e : r.path) acc = mul(acc, label_value(a.transitions[e], g));
          CHECK(eq(acc, target));
        }
      }
    }
  }
}

TEST_CASE("subset-sum chain automaton enumerates exactly the subset products") {
  std::mt19937_64 rng(79);
  for (const GroupDesc& g : {GroupDesc::heis_ze(0), GroupDesc::dinf(), GroupDesc::ut(3)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const int k = 1 + trial % 6;
      std::vector<GeneratorWord> items;
      for (int i = 0; i < k; ++i) items.push_back(random_word(g, rng, 3));
      Automaton a = subsetsum_to_automaton(g, items);
      CHECK(a.states == k + 1);
      // brute force all subsets
      std::set<std::string> subset_keys;
      for (int mask = 0; mask < (1 << k); ++mask) {
        GroupElement acc = identity(g);
        for (int i = 0; i < k; ++i)
          if (mask & (1 << i)) acc = mul(acc, evaluate_word(g, items[i]));
        subset_keys.insert(canonical_key(acc));
      }
      for (int probe = 0; probe < 8; ++probe) {
        GroupElement target = evaluate_word(g, random_word(g, rng, 4));
        auto r = acyclic_membership(a, g, target);
        CHECK((r.decision == Decision::yes) == subset_keys.count(canonical_key(target)));
      }
      GroupElement everything = identity(g);
      for (const auto& w : items) everything = mul(everything, evaluate_word(g, w));
      CHECK(acyclic_membership(a, g, everything).decision == Decision::yes);
    }
  }
}

TEST_CASE("element-labeled chains work without words") {
  GroupDesc g = GroupDesc::galpha();
  std::mt19937_64 rng(83);
  std::vector<GroupElement> items;
  for (int i = 0; i < 4; ++i) items.push_back(evaluate_word(g, random_word(g, rng, 3)));
  Automaton a = subsetsum_to_automaton_elems(g, items);
  GroupElement t = mul(items[0], items[2]);
  auto r = acyclic_membership(a, g, t);
  CHECK(r.decision == Decision::yes);
  CHECK_THROWS_AS((void)automaton_to_json(a), Error);
  CHECK_THROWS_AS((void)split_transitions(a, g), Error);
  CHECK_THROWS_AS((void)path_word(a, r.path), Error);
}

TEST_CASE("entry growth bound values") {
  CHECK(entry_growth_bound(3, BigInt(6), BigInt(5)) == 6753);
  CHECK(entry_growth_bound(4, BigInt(8), BigInt(7)) == 14751748);
  CHECK(entry_growth_bound(2, BigInt(4), BigInt(9)) == 2 + 1 * 4 * 1 * 9);
}

TEST_CASE("intermediate products respect the growth bound on unitriangular input") {
  std::mt19937_64 rng(89);
  GroupDesc g = GroupDesc::ut(3);
  for (int trial = 0; trial < 40; ++trial) {
    Automaton a = random_dag(g, rng, 6, 9, 2);
    GroupElement target = evaluate_word(g, random_word(g, rng, 5));
    auto r = acyclic_membership(a, g, target);
    CHECK(r.stats.norm_bound > 0);
    CHECK(r.stats.max_norm <= r.stats.norm_bound);
  }
}
