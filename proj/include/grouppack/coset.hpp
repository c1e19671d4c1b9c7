#pragma once

#include <map>

#include "grouppack/automaton.hpp"
#include "grouppack/group.hpp"

namespace gp {

// Right-coset rewriting table for a finite-index subgroup H <= G with coset
// representatives r_0 = 1, r_1, ..., r_n: for every coset i and generator a,
//   r_i * a = h * r_j   with h a word over the generators of H.
// Wire format:
//   {"group": D, "subgroup": D, "representatives": [elem..],
//    "embed": [elem..], "rewrite": [[i, a, [hword], j], ..]}
// where embed lists the image in G of each subgroup generator.
struct CosetTable {
  GroupDesc group;
  GroupDesc subgroup;
  std::vector<GroupElement> reps;
  std::vector<GroupElement> embed;
  std::map<std::pair<int, int>, std::pair<GeneratorWord, int>> rewrite;
};

CosetTable coset_table_from_json(const Json& j);
Json coset_table_to_json(const CosetTable& t);

// Checks the table is total, reps[0] is the identity, representatives are
// pairwise distinct, and every rewrite entry satisfies its defining identity
// in G. Distinctness of the cosets themselves is the supplier's contract;
// the transfer only relies on the verified identities.
void validate_coset_table(const CosetTable& t);

// value in G of a word over the subgroup generators
GroupElement embed_subgroup_word(const CosetTable& t, const GeneratorWord& hword);

// walk a word over G through the table: eval(w) = embed(hword) * reps[coset]
struct CosetDecomposition {
  GeneratorWord hword;
  int coset = 0;
};
CosetDecomposition decompose_coset(const CosetTable& t, const GeneratorWord& gword);

// Automaton over the subgroup whose accepting paths (into finals x {coset})
// evaluate to exactly the h-parts of original accepting paths landing in that
// coset. States are pairs (state of a, coset).
Automaton transfer_to_subgroup(const CosetTable& t, const Automaton& a, int target_coset);

// index of the subgroup Z = <t> inside the infinite dihedral group
CosetTable dinf_cyclic_table();

}  // namespace gp
