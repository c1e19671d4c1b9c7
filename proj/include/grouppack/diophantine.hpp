#pragma once

#include <optional>
#include <vector>

#include "grouppack/bigint.hpp"
#include "grouppack/decision.hpp"
#include "grouppack/error.hpp"

namespace gp {

// Linear algebra over the naturals. All solvers are exact and either return a
// certified answer or throw Errc::limit_exceeded; they never approximate.

using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>;  // row-major, rows all of equal length

struct SolveLimits {
  // nodes explored by the minimal-solution search before giving up
  std::size_t max_nodes = 2000000;
  // modulus bound for the shortest-path representability check
  BigInt residue_cap = 1000000;
};

// Minimal nonzero solutions of A x = 0 with x over N (the Hilbert basis).
// Every nonzero solution dominates some basis element componentwise, and the
// solution set is exactly the set of N-combinations of basis elements.
IntMat hilbert_basis(const IntMat& a, int vars, const SolveLimits& lim = {});

struct NatSystemSolution {
  bool solvable = false;
  IntVec witness;     // one solution of A x = b when solvable
  IntMat minimal;     // all minimal solutions of A x = b
  IntMat homogeneous; // Hilbert basis of A x = 0
};

// Complete solution structure of A x = b with x over N: the solutions are
// exactly  m + (N-combination of homogeneous elements)  for m in `minimal`.
NatSystemSolution solve_nat_system(const IntMat& a, const IntVec& b, int vars,
                                   const SolveLimits& lim = {});

struct CoinSolution {
  Decision decision = Decision::no;  // always yes or no, never unknown
  IntVec witness;                    // multiplicities, present iff yes
};

// Does  sum coins[i] * x_i = target  have a solution over N?  Coins may be
// zero, positive, or negative. Exact for every input; large smallest-coin
// moduli beyond lim.residue_cap raise limit_exceeded.
CoinSolution scalar_knapsack_nat(const IntVec& coins, const BigInt& target,
                                 const SolveLimits& lim = {});

// Vector variant:  sum coins[i] * x_i = target  in Z^n with x over N.
CoinSolution vector_knapsack_nat(const IntMat& coins, const IntVec& target,
                                 const SolveLimits& lim = {});

// One linear constraint over the rationals:  a . x >= b  or  a . x = b.
struct RatConstraint {
  std::vector<BigRat> a;
  BigRat b;
  bool is_eq = false;
};

// Exact feasibility over Q^vars by variable elimination. Returns a point
// satisfying every constraint, or nullopt when the system is infeasible.
// Nonnegativity is not implicit; add explicit rows where needed.
std::optional<std::vector<BigRat>> rational_feasible(
    const std::vector<RatConstraint>& cs, int vars);

}  // namespace gp
