#pragma once

#include <functional>

#include "grouppack/coset.hpp"
#include "grouppack/decision.hpp"
#include "grouppack/knapsack.hpp"

namespace gp {

// Generalized knapsack over a group: do exponents x_1..x_k (over N, or Z
// when integer_exponents) exist with
//   f_0 g_1^{x_1} f_1 g_2^{x_2} ... g_k^{x_k} f_k = 1?
// Constants and powers are generator words so they can be walked through a
// coset table. Wire format:
//   {"group": D, "constants": [[word]..], "powers": [[word]..],
//    "domain": "nat"|"int"}
struct GKPInstance {
  GroupDesc group;
  std::vector<GeneratorWord> constants;  // k+1 words
  std::vector<GeneratorWord> powers;     // k words
  bool integer_exponents = false;
};

GKPInstance gkp_from_json(const Json& j);
Json gkp_to_json(const GKPInstance& g);

GroupElement eval_gkp(const GKPInstance& g, const IntVec& exps);

// fold the constants into the powers: the instance holds at x iff
// h_1^{x_1} ... h_k^{x_k} = t with h_i the power conjugated by the constant
// prefix f_0..f_{i-1} and t = (f_0 f_1 ... f_k)^-1
KnapsackInstance gkp_normalize(const GKPInstance& g);

// knapsack as a generalized instance with identity constants
GKPInstance knapsack_to_gkp(const KnapsackInstance& inst, const std::vector<GeneratorWord>& items,
                            const GeneratorWord& target);

// Coset walk c, c.g, c.g^2, ... under repeated right multiplication: minimal
// (m, l) with the (m+l)-th coset equal to the m-th. Right multiplication
// permutes cosets, so m = 0 on honest tables; the detector still handles
// arbitrary eventually-periodic walks.
std::pair<int, int> find_period(const CosetTable& t, int coset, const GeneratorWord& g);

// rewrite r_c * w as h * r_{c'}: subgroup word plus the coset reached
CosetDecomposition walk_from_coset(const CosetTable& t, int coset, const GeneratorWord& w);

// The conjugated power for a closed walk: r_c g^period = h r_c, so
// r_c g^{period*t} = h^t r_c. Errc::precondition when the walk does not
// return to its start coset after `period` steps.
GeneratorWord move_right(const CosetTable& t, int coset, const GeneratorWord& g, int period);

// One exponent split of a power at a prefix coset: either the exponent is
// pinned below the walk preperiod (scale 0), or x = base + period * t with a
// fresh variable t and the residue folded into a constant.
struct PurifyBranch {
  BigInt base;             // fixed part of the exponent
  BigInt scale;            // 0, or the walk period
  GeneratorWord constant;  // h-part of r_c g^base
  GeneratorWord power;     // h-part of the closed loop; empty when scale = 0
  int coset = 0;           // coset after the constant part
};
std::vector<PurifyBranch> purify_power(const CosetTable& t, int coset, const GeneratorWord& g);

// Instance over the subgroup in its own generators, same equation shape.
struct HGKPInstance {
  std::vector<GeneratorWord> constants;
  std::vector<GeneratorWord> powers;
};

// exact decision procedure for the subgroup: a witness or a definite no
using SubgroupGKPOracle = std::function<std::optional<IntVec>(const HGKPInstance&)>;

// oracle for free abelian subgroups z(n): words become vectors and the
// equation one linear system over N
std::optional<IntVec> abelian_gkp_oracle(const GroupDesc& sub, const HGKPInstance& h,
                                         const SolveLimits& lim = {});

struct GKPAnswer {
  Decision decision = Decision::no;
  std::optional<IntVec> witness;  // exponents for the original instance
};

// Decide a generalized knapsack instance over the table's big group given an
// exact oracle for its subgroup: powers are split along their coset periods
// into finitely many pure branches, each decided by the oracle; witnesses
// map back through the recorded affine substitutions and are re-verified by
// evaluation.
GKPAnswer decide_gkp(const GKPInstance& g, const CosetTable& t, const SubgroupGKPOracle& oracle);

}  // namespace gp
