#pragma once

#include "grouppack/diophantine.hpp"
#include "grouppack/group.hpp"

namespace gp {

// Knapsack instance over a group: do exponents x_1..x_k exist with
//   items[0]^x_1 * ... * items[k-1]^x_k = target ?
// Exponents range over N, or over Z when integer_exponents is set.
struct KnapsackInstance {
  GroupDesc group;
  std::vector<GroupElement> items;
  GroupElement target;
  bool integer_exponents = false;
};

// Z-exponent instances reduce to N-exponent ones by replacing each item g
// with the adjacent pair g, g^-1; powers of one element commute, so
// g^p * (g^-1)^n = g^(p-n) covers every integer exponent.
KnapsackInstance int_exponents_to_nat(const KnapsackInstance& inst);

// The exponent equations of a knapsack instance over H3(Z) x Z^e:
// linear rows for the two top coordinates and the Z^e part, plus one
// quadratic row for the center accumulated by the multiplication law.
struct HeisKnapsackSystem {
  int k = 0;           // number of exponent variables
  IntMat lin_rows;     // (2 + e) x k
  IntVec lin_rhs;      // 2 + e
  IntVec c_lin;        // center: sum c_lin[i] x_i
  IntVec c_diag;       //       + sum c_diag[i] x_i (x_i - 1) / 2
  IntMat c_cross;      //       + sum_{j<i} c_cross[j][i] x_j x_i
  BigInt c_rhs;
};

HeisKnapsackSystem knapsack_to_diophantine(const KnapsackInstance& inst);

// value of the quadratic center row at integer exponents x
BigInt center_row_value(const HeisKnapsackSystem& sys, const IntVec& x);
// do the exponents satisfy every equation of the system?
bool system_satisfied(const HeisKnapsackSystem& sys, const IntVec& x);

// True when no residue vector passes the system modulo q (exponents run over
// residues mod 2q because the center's half-integer terms have period 2q).
// A true return is a complete, re-checkable no-certificate.
bool modular_obstruction(const HeisKnapsackSystem& sys, long q, std::size_t max_points);

struct KnapsackOptions {
  std::vector<long> moduli = {2, 3, 4, 5, 8, 9};
  long box = 8;                      // per-variable bound of the witness search
  std::size_t max_points = 4000000;  // enumeration budget per phase
};

struct KnapsackAnswer {
  Decision decision = Decision::unknown;
  IntVec witness;    // exponents when yes (integers when the instance is over Z)
  Json certificate;  // no: how it was refuted; unknown: what was exhausted
};

// Three-valued decider for knapsack over H3(Z) x Z^e. A yes always carries a
// witness re-verified by group evaluation; a no always carries one of the
// certificates {linear_exact, relaxation, modular}; anything else is unknown.
KnapsackAnswer decide_knapsack_h3(const KnapsackInstance& inst,
                                  const KnapsackOptions& opt = {});

}  // namespace gp
