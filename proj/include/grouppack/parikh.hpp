#pragma once

#include "grouppack/grammar.hpp"
#include "grouppack/semilinear.hpp"

namespace gp {

// Exact Parikh image of L(g) as a semilinear subset of N^k, where k is the
// number of terminals and coordinates follow the order of g.terminals.
// Computed by solving the commutative system of language equations one
// strongly connected component at a time with the least-fixpoint rule
// mu X. p(X) = p(0) (p'(p(0)))*.
SemilinearSet parikh_image(const Grammar& g, const SolveLimits& lim = {});

}  // namespace gp
