#pragma once

#include <array>

#include "grouppack/knapsack.hpp"

namespace gp {

// ---- base-alpha digit arithmetic, alpha = 1 + sqrt(2) ----

// alpha^p as an element of Z[sqrt 2], p >= 0
QuadInt alpha_pow(long p);

// sum digits[i] * alpha^(3i)
QuadInt alpha_value(const std::vector<int>& digits);

// every digit string in {0..5}^len denotes a distinct value (exhaustive)
bool digits_distinct(int len);

// sum_{i<len} 5 alpha^(3i) < alpha^(3 len): a full tail cannot reach the
// next position, so positions never interact
bool digit_tail_bound(int len);

// the commuting one-parameter family [[1, v], [0, 1]] inside the matrix group
GroupElement upper_unitriangular_alpha(const QuadInt& v);
// generator word evaluating to [[1, alpha^p], [0, 1]], p >= 0
GeneratorWord conjugate_power_word(long p);

// ---- CNF to subset sum ----

struct CNFFormula {
  int vars = 0;
  std::vector<std::vector<int>> clauses;  // 1..3 nonzero literals each
};

CNFFormula cnf_from_json(const Json& j);
Json cnf_to_json(const CNFFormula& f);
CNFFormula cnf_from_dimacs(const std::string& text);
bool cnf_eval(const CNFFormula& f, const std::vector<bool>& assign);

// Subset-sum instance whose solutions are the satisfying assignments: two
// items per variable (digit 1 at the variable position, digit 1 at each
// clause the literal satisfies) and two filler items per clause. The target
// asks for digit 1 at every variable position and digit 3 at every clause
// position; digits stay below 6, where representations are unique.
struct SubsetSumReduction {
  GroupDesc group;                   // the matrix group over Z[sqrt 2]
  std::vector<QuadInt> values;       // u_1..u_2n then the fillers
  std::vector<GeneratorWord> words;  // the same items as generator words
  QuadInt target_value;
  GeneratorWord target_word;
  int nvars = 0;
  int nclauses = 0;
};

SubsetSumReduction cnf_to_subsetsum(const CNFFormula& f);

// item indices selected for an assignment: the matching literal item per
// variable plus 3 - (satisfied literals) fillers per clause; an unsatisfied
// clause takes both fillers and the sum misses the target
std::vector<int> assignment_to_subset(const CNFFormula& f, const std::vector<bool>& assign);

QuadInt subset_value(const SubsetSumReduction& r, const std::vector<int>& subset);

// ---- polynomial roots to knapsack ----

struct Polynomial {
  int vars = 0;
  struct Term {
    BigInt coeff;
    std::vector<int> exps;  // one exponent per variable
  };
  std::vector<Term> terms;
};

Polynomial polynomial_from_json(const Json& j);
Json polynomial_to_json(const Polynomial& p);
BigInt eval_polynomial(const Polynomial& p, const IntVec& x);

// Flat equation system over N: z = x*y, z = x+y, or x = c. A polynomial root
// search P = 0 compiles to one system; coefficients are expanded as repeated
// sums, guarded by coeff_guard.
struct EqSystem {
  enum class Op { mul, add, cnst };
  struct Eq {
    Op op = Op::cnst;
    int x = -1, y = -1, z = -1;
    BigInt c;
  };
  int vars = 0;    // all variables
  int inputs = 0;  // the first `inputs` are the polynomial's variables
  std::vector<Eq> eqs;
};

EqSystem system_from_json(const Json& j);
Json system_to_json(const EqSystem& s);
EqSystem polynomial_to_system(const Polynomial& p, const BigInt& coeff_guard = 10000);
bool system_holds(const EqSystem& s, const IntVec& assign);
// fill auxiliary variables left to right from the inputs; nullopt when a
// check equation fails, which happens exactly when P(inputs) != 0
std::optional<IntVec> extend_solution(const EqSystem& s, const IntVec& inputs);

// Product expression g_1^{x_{v_1}} ... g_k^{x_{v_k}} = target where distinct
// atoms may share variables. Multiplication gadgets live in their own
// Heisenberg factor (block positions 0..3, center at 0), additions and
// constants in fresh Z coordinates.
struct Expression {
  GroupDesc group;
  std::vector<GroupElement> atom_elems;
  std::vector<int> atom_vars;
  std::vector<int> positions;  // block position 0..3 per atom
  GroupElement target;
  int vars = 0;
  bool integer_domain = false;
};

Expression expression_from_json(const Json& j);
Json expression_to_json(const Expression& e);
Expression system_to_expression(const EqSystem& s);
GroupElement eval_expression(const Expression& e, const IntVec& assign);
std::optional<IntVec> expression_bounded_solve(const Expression& e, long box,
                                               std::size_t max_points);

// One fresh Z coordinate per atom ties every atom's knapsack exponent to its
// variable's: items are the atoms extended by minus their unit coordinate,
// preceded by one central item per variable carrying the units of its atoms.
KnapsackInstance expression_to_knapsack(const Expression& e);
IntVec expression_to_knapsack_exponents(const Expression& e, const IntVec& assign);

// The compiled knapsack items regrouped into four abelian factors by block
// position (variable items and central atoms join position 0); the target
// lies in the ordered product of the four subgroups exactly when the
// expression is solvable over Z.
struct FourSubgroups {
  GroupDesc group;
  std::array<std::vector<GroupElement>, 4> generators;
  GroupElement target;
};

FourSubgroups knapsack_to_four_subgroups(const Expression& e);
// search integer exponents in [-box, box] per generator for an ordered
// product hitting the target
std::optional<IntVec> bounded_product_membership(const FourSubgroups& f, long box,
                                                 std::size_t max_points);

}  // namespace gp
