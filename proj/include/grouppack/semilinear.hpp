#pragma once

#include <optional>
#include <vector>

#include "grouppack/diophantine.hpp"
#include "grouppack/jsonio.hpp"

namespace gp {

// Finite unions of linear sets  base + N p_1 + ... + N p_n  inside N^k.
// All entries are nonnegative; the empty component list denotes the empty
// set. Every operation below is exact.

struct LinearSet {
  IntVec base;     // length k
  IntMat periods;  // rows of length k
};

struct SemilinearSet {
  int k = 0;
  std::vector<LinearSet> components;
};

SemilinearSet semilinear_from_json(const Json& j);
Json semilinear_to_json(const SemilinearSet& s);
void validate_semilinear(const SemilinearSet& s);

SemilinearSet semilinear_empty(int k);
SemilinearSet semilinear_singleton(const IntVec& v);
SemilinearSet semilinear_full(int k);

bool semilinear_member(const SemilinearSet& s, const IntVec& v,
                       const SolveLimits& lim = {});

SemilinearSet semilinear_union(const SemilinearSet& a, const SemilinearSet& b);

// Minkowski sum {x + y : x in a, y in b}.
SemilinearSet semilinear_sum(const SemilinearSet& a, const SemilinearSet& b);

// All finite sums of elements of s, including the empty sum.
SemilinearSet semilinear_star(const SemilinearSet& s,
                              const SolveLimits& lim = {});

SemilinearSet semilinear_intersect(const SemilinearSet& a,
                                   const SemilinearSet& b,
                                   const SolveLimits& lim = {});

// Exact complement within N^k.
SemilinearSet semilinear_complement(const SemilinearSet& s,
                                    const SolveLimits& lim = {});

// Membership-preserving cleanup: drops zero and duplicate periods, duplicate
// components, and components provably contained in another one.
SemilinearSet semilinear_simplify(const SemilinearSet& s,
                                  const SolveLimits& lim = {});

// True when the period vectors are linearly independent over the rationals.
bool periods_independent(const LinearSet& c, int k);

// Split one linear set into finitely many whose periods are independent,
// preserving the union of the described sets.
std::vector<LinearSet> decompose_independent_periods(const LinearSet& c,
                                                     int k);

bool semilinear_universal(const SemilinearSet& s, const SolveLimits& lim = {});

// A point of N^k outside s, or nullopt when s covers everything.
std::optional<IntVec> semilinear_witness_outside(const SemilinearSet& s,
                                                 const SolveLimits& lim = {});

}  // namespace gp
