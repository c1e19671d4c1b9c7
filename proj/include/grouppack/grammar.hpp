#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grouppack/error.hpp"
#include "grouppack/jsonio.hpp"

namespace gp {

// Context-free grammar over named symbols. Wire format:
//   {"nonterminals":[...], "terminals":[...], "start":"S",
//    "productions":[["S",["a","S","b"]], ...]}
struct Grammar {
  struct Production {
    std::string lhs;
    std::vector<std::string> rhs;
  };
  std::vector<std::string> nonterminals;
  std::vector<std::string> terminals;
  std::string start;
  std::vector<Production> productions;
};

Grammar grammar_from_json(const Json& j);
Json grammar_to_json(const Grammar& g);
void validate_grammar(const Grammar& g);

// All derivable terminal words of length at most maxlen, sorted.
std::vector<std::vector<std::string>> words_up_to(const Grammar& g,
                                                  int maxlen);

// Exact membership via normalization to binary rules and chart parsing.
bool cfg_member(const Grammar& g, const std::vector<std::string>& word);

// Same language, every right side of length at most two.
Grammar cfg_binarize(const Grammar& g);

// Drop nongenerating and unreachable nonterminals. Terminal list unchanged.
Grammar cfg_reduce(const Grammar& g);

// Language union; nonterminals are renamed apart as needed.
Grammar cfg_union(const Grammar& a, const Grammar& b);

// Letter-to-word substitution extended to a monoid homomorphism.
// Wire format: {"b": ["a", "abar"], ...}
struct FreeMonoidHom {
  std::map<std::string, std::vector<std::string>> images;
};

FreeMonoidHom hom_from_json(const Json& j);
Json hom_to_json(const FreeMonoidHom& h);
std::vector<std::string> hom_apply(const FreeMonoidHom& h,
                                   const std::vector<std::string>& w);

// L(result) = h(L(g)). Every terminal of g must have an image. The result's
// terminal list is derived from the images unless given explicitly (it must
// then cover every letter the images use).
Grammar cfg_image(
    const Grammar& g, const FreeMonoidHom& h,
    const std::optional<std::vector<std::string>>& out_terminals = {});

// L(result) = {w over the domain of h : h(w) in L(g)}. Built by simulating
// a pushdown device that buffers one image at a time, then converting back
// to a grammar through the state-pair construction.
Grammar cfg_inverse_hom(const Grammar& g, const FreeMonoidHom& h);

// Nondeterministic finite automaton over named letters. Wire format:
//   {"states":n, "initial":0, "finals":[..],
//    "transitions":[[p,"letter",q], ...]}
struct LetterAutomaton {
  int states = 0;
  int initial = 0;
  std::vector<int> finals;
  struct Trans {
    int from = 0;
    std::string letter;
    int to = 0;
  };
  std::vector<Trans> transitions;
};

LetterAutomaton letter_automaton_from_json(const Json& j);
Json letter_automaton_to_json(const LetterAutomaton& a);
void validate_letter_automaton(const LetterAutomaton& a);
bool automaton_accepts(const LetterAutomaton& a,
                       const std::vector<std::string>& w);

// L(result) = L(g) intersected with L(a), by the state-pair product
// construction on an epsilon-free form of g.
Grammar cfg_intersect_regular(const Grammar& g, const LetterAutomaton& a);

}  // namespace gp
