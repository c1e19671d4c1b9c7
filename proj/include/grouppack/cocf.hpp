#pragma once

#include <optional>

#include "grouppack/group.hpp"
#include "grouppack/parikh.hpp"

namespace gp {

// Grammars for the set of words that are NOT the identity, over the letter
// convention [g1, g1 inverse, g2, g2 inverse, ...] named a, A, b, B.
Grammar z_coword_grammar();
Grammar z2_coword_grammar();

// Map a signed generator word to co-word grammar letters: generator i
// becomes terminal 2(i-1), its inverse terminal 2(i-1)+1.
std::vector<std::string> word_to_letters(const Grammar& w,
                                         const GeneratorWord& word);

// Check that L(w) agrees with "not the identity in g" on every word of at
// most maxlen letters; throws on the first disagreement.
void validate_coword_grammar(const Grammar& w, const GroupDesc& g, int maxlen);

// The language of exponent words a1^e1 ... ak^ek that do NOT solve the
// instance, as a grammar whose terminals are exactly a1..ak in item order.
Grammar build_knapsack_language(const Grammar& w,
                                const std::vector<GeneratorWord>& items,
                                const GeneratorWord& target);

struct CocfAnswer {
  bool solvable = false;
  std::optional<IntVec> witness;  // exponents, item order
};

// Full pipeline: validate the co-word grammar against the group on short
// words, build the non-solution language, take its Parikh image, and test
// the complement for nonemptiness. A witness is re-verified in the group.
CocfAnswer decide_cocf_knapsack(const Grammar& w, const GroupDesc& g,
                                const std::vector<GeneratorWord>& items,
                                const GeneratorWord& target,
                                int validate_len = 4,
                                const SolveLimits& lim = {});

}  // namespace gp
