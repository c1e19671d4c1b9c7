#pragma once

#include <optional>
#include <vector>

#include "grouppack/decision.hpp"
#include "grouppack/group.hpp"

namespace gp {

// Finite automaton whose transitions are labeled by generator words of a
// group. Wire format:
//   {"states": n, "initial": q0, "finals": [..],
//    "transitions": [[p, [word], q], ..]}
struct Automaton {
  int states = 0;
  int initial = 0;
  std::vector<int> finals;
  struct Trans {
    int from = 0;
    GeneratorWord word;
    int to = 0;
    // set only for automata built in memory from elements; never on the wire
    std::optional<GroupElement> elem;
  };
  std::vector<Trans> transitions;
};

Automaton automaton_from_json(const Json& j);
Json automaton_to_json(const Automaton& a);

// structural checks: state ranges, generator letters legal for the group
void validate_automaton(const Automaton& a, const GroupDesc& g);

// value of one transition label in the group
GroupElement label_value(const Automaton::Trans& t, const GroupDesc& g);

// equivalent automaton whose labels all have length at most one
Automaton split_transitions(const Automaton& a, const GroupDesc& g);

// chain automaton for products  items[0]^e0 ... items[k-1]^e(k-1), e in {0,1}
Automaton subsetsum_to_automaton(const GroupDesc& g,
                                 const std::vector<GeneratorWord>& items);
Automaton subsetsum_to_automaton_elems(const GroupDesc& g,
                                       const std::vector<GroupElement>& items);

// Proven ceiling on the absolute value of any entry of a product of at most n
// unitriangular d x d integer matrices whose entries are bounded by m:
//   d + (d-1) * binom(n, d-1) * d^(2(d-2)) * m^(d-1)
BigInt entry_growth_bound(int d, const BigInt& n, const BigInt& m);

struct MembershipStats {
  std::size_t states_processed = 0;
  std::size_t max_set_size = 0;
  std::size_t elements_stored = 0;
  // filled for unitriangular groups: every intermediate product is checked
  // against the entry growth bound
  BigInt max_norm = 0;
  BigInt norm_bound = 0;
};

struct MembershipResult {
  Decision decision = Decision::no;
  std::vector<int> path;  // transition indices of an accepting path when yes
  MembershipStats stats;
};

// Does some accepting path of the acyclic automaton evaluate to target?
// Exact set-valued dynamic program over a topological order; rejects cyclic
// automata. The returned path is re-verified before returning.
MembershipResult acyclic_membership(const Automaton& a, const GroupDesc& g,
                                    const GroupElement& target);

// concatenated label word along a path (requires word labels)
GeneratorWord path_word(const Automaton& a, const std::vector<int>& path);

}  // namespace gp
