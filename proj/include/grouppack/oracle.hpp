#pragma once

#include "grouppack/knapsack.hpp"

namespace gp {

// Caps for exhaustive searches. A search that would overrun them refuses to
// run (Errc::limit_exceeded) instead of silently truncating.
struct OracleBudget {
  long box = 6;                       // per-exponent bound for knapsack search
  std::size_t max_points = 1u << 22;  // candidate cap for the whole search
  double wall_seconds = 60.0;         // wall-clock cap
};

struct SubsetSumAnswer {
  bool solvable = false;
  IntVec witness;  // entries in {0,1} when solvable
};

// Exhaustive subset-sum over {0,1}^k with exact group arithmetic. Complete:
// a miss is a definite no. Rejects integer-exponent instances (the subset
// domain is fixed) and instances with 2^k above the candidate cap.
SubsetSumAnswer brute_force_subsetsum(const KnapsackInstance& inst,
                                      const OracleBudget& budget = {});

struct BruteKnapsackAnswer {
  bool found = false;  // found a witness inside the box
  IntVec witness;
};

// Exhaustive knapsack search over [0, box]^k, or [-box, box]^k for
// integer-exponent instances. A miss means no solution inside the box and
// nothing more; it is never a proof of unsolvability.
BruteKnapsackAnswer brute_force_knapsack(const KnapsackInstance& inst,
                                         const OracleBudget& budget = {});

}  // namespace gp
