#include "grouppack/cocf.hpp"

#include <algorithm>
#include <set>

namespace gp {

namespace {

using Word = std::vector<std::string>;

Grammar coword(int rank) {
  // Per coordinate c: Mc derives the words whose c-surplus is zero, other
  // letters free; Pc and Qc force a positive or negative c-surplus. Any
  // word with nonzero surplus splits after the last visit to each level
  // between zero and the final surplus, so Pc and Qc are complete; Mc is
  // complete by splitting at the first return to surplus zero.
  Grammar g;
  for (int c = 0; c < rank; c++) {
    std::string pos(1, (char)('a' + c));
    std::string neg(1, (char)('A' + c));
    g.terminals.push_back(pos);
    g.terminals.push_back(neg);
  }
  g.start = "S";
  for (int c = 0; c < rank; c++) {
    std::string tag = rank == 1 ? "" : std::to_string(c + 1);
    std::string M = "M" + tag, P = "P" + tag, Q = "Q" + tag;
    std::string pos = g.terminals[2 * (size_t)c];
    std::string neg = g.terminals[2 * (size_t)c + 1];
    g.nonterminals.push_back(M);
    g.nonterminals.push_back(P);
    g.nonterminals.push_back(Q);
    g.productions.push_back({M, {}});
    g.productions.push_back({M, {M, M}});
    g.productions.push_back({M, {pos, M, neg}});
    g.productions.push_back({M, {neg, M, pos}});
    for (int o = 0; o < rank; o++) {
      if (o == c) continue;
      g.productions.push_back({M, {g.terminals[2 * (size_t)o], M}});
      g.productions.push_back({M, {g.terminals[2 * (size_t)o + 1], M}});
    }
    g.productions.push_back({P, {M, pos, P}});
    g.productions.push_back({P, {M, pos, M}});
    g.productions.push_back({Q, {M, neg, Q}});
    g.productions.push_back({Q, {M, neg, M}});
  }
  g.nonterminals.push_back("S");
  for (int c = 0; c < rank; c++) {
    std::string tag = rank == 1 ? "" : std::to_string(c + 1);
    g.productions.push_back({"S", {"P" + tag}});
    g.productions.push_back({"S", {"Q" + tag}});
  }
  validate_grammar(g);
  return g;
}

}  // namespace

Grammar z_coword_grammar() { return coword(1); }
Grammar z2_coword_grammar() { return coword(2); }

std::vector<std::string> word_to_letters(const Grammar& w,
                                         const GeneratorWord& word) {
  require(w.terminals.size() % 2 == 0, Errc::invalid_argument,
          "word_to_letters: odd terminal count");
  int rank = (int)w.terminals.size() / 2;
  Word out;
  for (int x : word) {
    require(x != 0 && x >= -rank && x <= rank, Errc::invalid_argument,
            "word_to_letters: letter out of range");
    int i = x > 0 ? x : -x;
    out.push_back(w.terminals[2 * (size_t)(i - 1) + (x > 0 ? 0 : 1)]);
  }
  return out;
}

void validate_coword_grammar(const Grammar& w, const GroupDesc& g,
                             int maxlen) {
  validate_grammar(w);
  require(maxlen >= 1, Errc::invalid_argument,
          "validate_coword_grammar: bound must be positive");
  require((int)w.terminals.size() == 2 * g.generator_count(),
          Errc::invalid_argument,
          "validate_coword_grammar: terminal count does not match the group");
  std::set<Word> lang;
  for (const auto& u : words_up_to(w, maxlen)) lang.insert(u);

  std::vector<GeneratorWord> frontier = {{}};
  require(!lang.count({}), Errc::invalid_argument,
          "validate_coword_grammar: grammar derives the identity word");
  int n = g.generator_count();
  for (int len = 1; len <= maxlen; len++) {
    std::vector<GeneratorWord> next;
    for (const auto& u : frontier)
      for (int x = 1; x <= n; x++)
        for (int s : {x, -x}) {
          GeneratorWord v = u;
          v.push_back(s);
          next.push_back(std::move(v));
        }
    for (const auto& v : next) {
      bool expect = !is_identity(evaluate_word(g, v));
      bool got = lang.count(word_to_letters(w, v)) != 0;
      if (expect != got) {
        std::string s;
        for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
        fail(Errc::invalid_argument,
             "validate_coword_grammar: grammar disagrees with the group on "
             "word [" + s + "]");
      }
    }
    frontier = std::move(next);
  }
}

Grammar build_knapsack_language(const Grammar& w,
                                const std::vector<GeneratorWord>& items,
                                const GeneratorWord& target) {
  validate_grammar(w);
  int k = (int)items.size();
  std::vector<std::string> xs;
  for (int i = 1; i <= k; i++) xs.push_back("a" + std::to_string(i));

  FreeMonoidHom eval;
  for (int i = 0; i < k; i++) eval.images[xs[i]] = word_to_letters(w, items[i]);
  eval.images["a"] = word_to_letters(w, word_inverse(target));

  Grammar pre = cfg_inverse_hom(w, eval);

  // a1* a2* ... ak* a : state i has seen blocks up to i, k+1 is final.
  LetterAutomaton shape;
  shape.states = k + 2;
  shape.initial = 0;
  shape.finals = {k + 1};
  for (int i = 1; i <= k; i++) {
    shape.transitions.push_back({i, xs[i - 1], i});
    for (int j = 0; j < i; j++) shape.transitions.push_back({j, xs[i - 1], i});
  }
  for (int j = 0; j <= k; j++) shape.transitions.push_back({j, "a", k + 1});

  Grammar cut = cfg_intersect_regular(pre, shape);

  FreeMonoidHom erase;
  for (int i = 0; i < k; i++) erase.images[xs[i]] = {xs[i]};
  erase.images["a"] = {};
  return cfg_image(cut, erase, xs);
}

CocfAnswer decide_cocf_knapsack(const Grammar& w, const GroupDesc& g,
                                const std::vector<GeneratorWord>& items,
                                const GeneratorWord& target, int validate_len,
                                const SolveLimits& lim) {
  validate_coword_grammar(w, g, validate_len);
  Grammar m = build_knapsack_language(w, items, target);
  SemilinearSet psi = parikh_image(m, lim);
  SemilinearSet sol = semilinear_complement(psi, lim);
  if (sol.components.empty()) return {};

  CocfAnswer ans;
  ans.solvable = true;
  IntVec e = sol.components.front().base;
  GroupElement acc = identity(g);
  for (size_t i = 0; i < items.size(); i++)
    acc = mul(acc, elem_pow(evaluate_word(g, items[i]), e[i]));
  require(eq(acc, evaluate_word(g, target)), Errc::precondition,
          "decide_cocf_knapsack: pipeline witness failed group verification");
  ans.witness = std::move(e);
  return ans;
}

}  // namespace gp
