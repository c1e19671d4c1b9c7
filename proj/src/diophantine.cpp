#include "grouppack/diophantine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace gp {

namespace {

std::string vec_key(const IntVec& v) {
  std::ostringstream os;
  for (const BigInt& x : v) os << x << ',';
  return os.str();
}

bool dominates(const IntVec& x, const IntVec& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < y[i]) return false;
  return true;
}

bool is_zero_vec(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

// Minimal nonzero solutions of a x = 0 over N by breadth-first expansion from
// the unit vectors, growing a coordinate only while it decreases the residual
// (negative scalar product) and pruning anything above a known minimum.
IntMat minimal_nonneg_solutions(const IntMat& a, int vars, const SolveLimits& lim) {
  require(vars >= 0, Errc::invalid_argument, "negative variable count");
  for (const IntVec& row : a)
    require((int)row.size() == vars, Errc::invalid_argument, "ragged coefficient matrix");
  IntMat minimals;
  if (vars == 0) return minimals;
  const std::size_t m = a.size();

  IntMat cols(vars, IntVec(m));
  for (std::size_t i = 0; i < m; ++i)
    for (int j = 0; j < vars; ++j) cols[j][i] = a[i][j];

  struct Node {
    IntVec t, v;  // candidate and its image a t
  };
  std::vector<Node> frontier;
  std::unordered_set<std::string> seen;
  for (int j = 0; j < vars; ++j) {
    Node n;
    n.t.assign(vars, 0);
    n.t[j] = 1;
    n.v = cols[j];
    seen.insert(vec_key(n.t));
    frontier.push_back(std::move(n));
  }

  std::size_t explored = 0;
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (Node& node : frontier) {
      if (++explored > lim.max_nodes)
        fail(Errc::limit_exceeded, "minimal-solution search exceeded node budget");
      bool above = false;
      for (const IntVec& mv : minimals)
        if (dominates(node.t, mv)) {
          above = true;
          break;
        }
      if (above) continue;
      if (is_zero_vec(node.v)) {
        minimals.push_back(node.t);
        continue;
      }
      for (int j = 0; j < vars; ++j) {
        BigInt dot = 0;
        for (std::size_t i = 0; i < m; ++i) dot += node.v[i] * cols[j][i];
        if (dot >= 0) continue;
        Node child;
        child.t = node.t;
        child.t[j] += 1;
        if (!seen.insert(vec_key(child.t)).second) continue;
        bool pruned = false;
        for (const IntVec& mv : minimals)
          if (dominates(child.t, mv)) {
            pruned = true;
            break;
          }
        if (pruned) continue;
        child.v = node.v;
        for (std::size_t i = 0; i < m; ++i) child.v[i] += cols[j][i];
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return minimals;
}

// extended gcd: returns g > 0 with a s + b t = g (a, b not both zero)
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t) {
  BigInt old_r = a, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * ss;
    old_s = ss;
    ss = tmp;
    tmp = old_t - q * tt;
    old_t = tt;
    tt = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  // den > 0
  BigInt q = num / den, r = num % den;
  if (r > 0) ++q;
  return q;
}

void check_scalar_witness(const IntVec& coins, const BigInt& target, const IntVec& w) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < coins.size(); ++i) {
    require(w[i] >= 0, Errc::precondition, "internal: negative witness entry");
    sum += coins[i] * w[i];
  }
  require(sum == target, Errc::precondition, "internal: witness does not hit target");
}

CoinSolution positive_coin_solve(const IntVec& coins, const BigInt& target,
                                 const SolveLimits& lim) {
  // all coins >= 0, at least one > 0, target > 0
  CoinSolution out;
  out.witness.assign(coins.size(), 0);
  BigInt a0 = 0;
  std::size_t i0 = 0;
  for (std::size_t i = 0; i < coins.size(); ++i)
    if (coins[i] > 0 && (a0 == 0 || coins[i] < a0)) {
      a0 = coins[i];
      i0 = i;
    }
  if (a0 > lim.residue_cap)
    fail(Errc::limit_exceeded, "smallest coin exceeds the residue cap");
  const long n = a0.convert_to<long>();

  // shortest value reaching each residue class mod the smallest coin
  std::vector<BigInt> dist(n, -1);
  std::vector<std::pair<long, std::size_t>> pred(n, {-1, 0});
  std::set<std::pair<BigInt, long>> pq;
  dist[0] = 0;
  pq.insert({BigInt(0), 0});
  while (!pq.empty()) {
    auto [d, r] = *pq.begin();
    pq.erase(pq.begin());
    if (d != dist[r]) continue;
    for (std::size_t i = 0; i < coins.size(); ++i) {
      if (coins[i] <= 0 || coins[i] % a0 == 0) continue;
      long nr = ((BigInt(r) + coins[i]) % a0).convert_to<long>();
      BigInt nd = d + coins[i];
      if (dist[nr] < 0 || nd < dist[nr]) {
        if (dist[nr] >= 0) pq.erase({dist[nr], nr});
        dist[nr] = nd;
        pred[nr] = {r, i};
        pq.insert({nd, nr});
      }
    }
  }

  long rt = (target % a0).convert_to<long>();
  if (dist[rt] < 0 || dist[rt] > target) {
    out.decision = Decision::no;
    return out;
  }
  out.decision = Decision::yes;
  long r = rt;
  while (r != 0) {
    auto [pr, ci] = pred[r];
    out.witness[ci] += 1;
    r = pr;
  }
  out.witness[i0] += (target - dist[rt]) / a0;
  check_scalar_witness(coins, target, out.witness);
  return out;
}

}  // namespace

IntMat hilbert_basis(const IntMat& a, int vars, const SolveLimits& lim) {
  return minimal_nonneg_solutions(a, vars, lim);
}

NatSystemSolution solve_nat_system(const IntMat& a, const IntVec& b, int vars,
                                   const SolveLimits& lim) {
  require(a.size() == b.size(), Errc::invalid_argument, "row/rhs count mismatch");
  IntMat ext(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    require((int)a[i].size() == vars, Errc::invalid_argument, "ragged coefficient matrix");
    ext[i] = a[i];
    ext[i].push_back(-b[i]);
  }
  IntMat mins = minimal_nonneg_solutions(ext, vars + 1, lim);
  NatSystemSolution out;
  for (const IntVec& v : mins) {
    IntVec head(v.begin(), v.begin() + vars);
    if (v[vars] == 0)
      out.homogeneous.push_back(std::move(head));
    else if (v[vars] == 1)
      out.minimal.push_back(std::move(head));
  }
  out.solvable = !out.minimal.empty();
  if (out.solvable) out.witness = out.minimal.front();
  return out;
}

CoinSolution scalar_knapsack_nat(const IntVec& coins, const BigInt& target,
                                 const SolveLimits& lim) {
  CoinSolution out;
  out.witness.assign(coins.size(), 0);
  if (target == 0) {
    out.decision = Decision::yes;
    return out;
  }
  std::vector<std::size_t> nz;
  bool has_pos = false, has_neg = false;
  for (std::size_t i = 0; i < coins.size(); ++i)
    if (coins[i] != 0) {
      nz.push_back(i);
      (coins[i] > 0 ? has_pos : has_neg) = true;
    }
  if (nz.empty()) {
    out.decision = Decision::no;
    out.witness.clear();
    return out;
  }
  BigInt g = 0;
  for (std::size_t i : nz) g = big_gcd(g, coins[i]);
  if (target % g != 0) {
    out.decision = Decision::no;
    out.witness.clear();
    return out;
  }

  if (has_pos && has_neg) {
    // integer solution by running extended gcds, then shift into N along
    // two-coin null vectors (|a_j|, |a_i|) for an opposite-signed pair
    std::vector<BigInt> y(nz.size(), 0);
    BigInt run = coins[nz[0]];
    y[0] = 1;
    for (std::size_t t = 1; t < nz.size(); ++t) {
      BigInt s, u;
      BigInt g2 = ext_gcd(run, coins[nz[t]], s, u);
      for (std::size_t j = 0; j < t; ++j) y[j] *= s;
      y[t] = u;
      run = g2;
    }
    BigInt scale = target / run;
    for (std::size_t t = 0; t < nz.size(); ++t) out.witness[nz[t]] = y[t] * scale;

    std::size_t ip = 0, in = 0;
    for (std::size_t i : nz)
      if (coins[i] > 0)
        ip = i;
      else
        in = i;
    for (std::size_t i : nz) {
      if (out.witness[i] >= 0) continue;
      if (coins[i] > 0) {
        BigInt t = ceil_div(-out.witness[i], -coins[in]);
        out.witness[i] += t * (-coins[in]);
        out.witness[in] += t * coins[i];
      } else {
        BigInt t = ceil_div(-out.witness[i], coins[ip]);
        out.witness[i] += t * coins[ip];
        out.witness[ip] += t * (-coins[i]);
      }
    }
    out.decision = Decision::yes;
    check_scalar_witness(coins, target, out.witness);
    return out;
  }

  IntVec work = coins;
  BigInt tgt = target;
  if (has_neg) {
    for (BigInt& c : work) c = -c;
    tgt = -tgt;
  }
  if (tgt < 0) {
    out.decision = Decision::no;
    out.witness.clear();
    return out;
  }
  out = positive_coin_solve(work, tgt, lim);
  if (out.decision == Decision::no) out.witness.clear();
  return out;
}

CoinSolution vector_knapsack_nat(const IntMat& coins, const IntVec& target,
                                 const SolveLimits& lim) {
  const std::size_t n = target.size();
  for (const IntVec& c : coins)
    require(c.size() == n, Errc::invalid_argument, "coin dimension mismatch");
  IntMat a(n, IntVec(coins.size()));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i < coins.size(); ++i) a[r][i] = coins[i][r];
  NatSystemSolution sol = solve_nat_system(a, target, (int)coins.size(), lim);
  CoinSolution out;
  out.decision = sol.solvable ? Decision::yes : Decision::no;
  if (sol.solvable) out.witness = sol.witness;
  return out;
}

namespace {

struct WorkRow {
  std::vector<BigRat> a;
  BigRat b;
  bool is_eq;
};

struct ElimRecord {
  enum Kind { eq_sub, ineq, free_var } kind;
  int var = -1;
  std::vector<BigRat> expr;  // eq_sub: x_var = cst + expr . x
  BigRat cst;
  // ineq: evaluated bounds  x_var >= cst + expr . x  /  <=
  std::vector<std::pair<std::vector<BigRat>, BigRat>> lowers, uppers;
};

BigRat eval_affine(const std::vector<BigRat>& expr, const BigRat& cst,
                   const std::vector<BigRat>& x) {
  BigRat v = cst;
  for (std::size_t j = 0; j < expr.size(); ++j)
    if (!rat_zero(expr[j])) v += expr[j] * x[j];
  return v;
}

}  // namespace

std::optional<std::vector<BigRat>> rational_feasible(
    const std::vector<RatConstraint>& cs, int vars) {
  require(vars >= 0, Errc::invalid_argument, "negative variable count");
  std::vector<WorkRow> rows;
  for (const RatConstraint& c : cs) {
    require((int)c.a.size() == vars, Errc::invalid_argument, "constraint width mismatch");
    rows.push_back({c.a, c.b, c.is_eq});
  }

  std::vector<ElimRecord> recs;
  std::vector<bool> alive(vars, true);

  for (int round = 0; round < vars; ++round) {
    // prefer solving an equation for one of its variables
    int ev = -1;
    std::size_t erow = 0;
    for (std::size_t r = 0; r < rows.size() && ev < 0; ++r)
      if (rows[r].is_eq)
        for (int j = 0; j < vars && ev < 0; ++j)
          if (alive[j] && !rat_zero(rows[r].a[j])) {
            ev = j;
            erow = r;
          }
    if (ev >= 0) {
      ElimRecord rec;
      rec.kind = ElimRecord::eq_sub;
      rec.var = ev;
      const BigRat piv = rows[erow].a[ev];
      rec.expr.assign(vars, BigRat(0));
      for (int j = 0; j < vars; ++j)
        if (j != ev && !rat_zero(rows[erow].a[j])) rec.expr[j] = -rows[erow].a[j] / piv;
      rec.cst = rows[erow].b / piv;
      rows.erase(rows.begin() + erow);
      for (WorkRow& row : rows) {
        if (rat_zero(row.a[ev])) continue;
        const BigRat f = row.a[ev];
        row.a[ev] = 0;
        for (int j = 0; j < vars; ++j)
          if (!rat_zero(rec.expr[j])) row.a[j] += f * rec.expr[j];
        row.b -= f * rec.cst;
      }
      alive[ev] = false;
      recs.push_back(std::move(rec));
      continue;
    }

    // otherwise eliminate the inequality variable with the cheapest pairing
    int best = -1;
    std::size_t best_cost = 0;
    for (int j = 0; j < vars; ++j) {
      if (!alive[j]) continue;
      std::size_t np = 0, nn = 0;
      for (const WorkRow& row : rows) {
        if (rat_sign(row.a[j]) > 0) ++np;
        if (rat_sign(row.a[j]) < 0) ++nn;
      }
      if (np + nn == 0) continue;
      std::size_t cost = np * nn;
      if (best < 0 || cost < best_cost) {
        best = j;
        best_cost = cost;
      }
    }
    if (best < 0) {
      // remaining variables are unconstrained
      for (int j = 0; j < vars; ++j)
        if (alive[j]) {
          ElimRecord rec;
          rec.kind = ElimRecord::free_var;
          rec.var = j;
          alive[j] = false;
          recs.push_back(std::move(rec));
        }
      break;
    }

    ElimRecord rec;
    rec.kind = ElimRecord::ineq;
    rec.var = best;
    std::vector<WorkRow> kept;
    for (WorkRow& row : rows) {
      if (rat_zero(row.a[best])) {
        kept.push_back(std::move(row));
        continue;
      }
      const BigRat piv = row.a[best];
      std::vector<BigRat> expr(vars, BigRat(0));
      for (int j = 0; j < vars; ++j)
        if (j != best && !rat_zero(row.a[j])) expr[j] = -row.a[j] / piv;
      BigRat cst = row.b / piv;
      if (rat_sign(piv) > 0)
        rec.lowers.push_back({std::move(expr), std::move(cst)});
      else
        rec.uppers.push_back({std::move(expr), std::move(cst)});
    }
    for (const auto& lo : rec.lowers)
      for (const auto& up : rec.uppers) {
        WorkRow nr;
        nr.is_eq = false;
        nr.a.assign(vars, BigRat(0));
        bool nontrivial = false;
        for (int j = 0; j < vars; ++j) {
          nr.a[j] = up.first[j] - lo.first[j];
          if (!rat_zero(nr.a[j])) nontrivial = true;
        }
        nr.b = lo.second - up.second;
        if (!nontrivial && rat_sign(nr.b) > 0) return std::nullopt;
        if (nontrivial || !rat_zero(nr.b)) kept.push_back(std::move(nr));
      }
    rows = std::move(kept);
    alive[best] = false;
    recs.push_back(std::move(rec));
  }

  for (const WorkRow& row : rows) {
    for (const BigRat& c : row.a)
      require(rat_zero(c), Errc::precondition, "internal: leftover variable after elimination");
    if (row.is_eq) {
      if (!rat_zero(row.b)) return std::nullopt;
    } else if (rat_sign(row.b) > 0) {
      return std::nullopt;
    }
  }

  std::vector<BigRat> x(vars, BigRat(0));
  for (auto it = recs.rbegin(); it != recs.rend(); ++it) {
    const ElimRecord& rec = *it;
    if (rec.kind == ElimRecord::free_var) {
      x[rec.var] = 0;
    } else if (rec.kind == ElimRecord::eq_sub) {
      x[rec.var] = eval_affine(rec.expr, rec.cst, x);
    } else {
      bool has_lo = false, has_up = false;
      BigRat lo, up;
      for (const auto& b : rec.lowers) {
        BigRat v = eval_affine(b.first, b.second, x);
        if (!has_lo || v > lo) lo = v;
        has_lo = true;
      }
      for (const auto& b : rec.uppers) {
        BigRat v = eval_affine(b.first, b.second, x);
        if (!has_up || v < up) up = v;
        has_up = true;
      }
      if (has_lo && has_up) {
        require(lo <= up, Errc::precondition, "internal: crossed bounds in back-substitution");
        x[rec.var] = (lo + up) / BigRat(2);
      } else if (has_lo) {
        x[rec.var] = lo;
      } else if (has_up) {
        x[rec.var] = up;
      } else {
        x[rec.var] = 0;
      }
    }
  }

  for (const RatConstraint& c : cs) {
    BigRat v = -c.b;
    for (int j = 0; j < vars; ++j)
      if (!rat_zero(c.a[j])) v += c.a[j] * x[j];
    if (c.is_eq)
      require(rat_zero(v), Errc::precondition, "internal: witness fails an equation");
    else
      require(rat_sign(v) >= 0, Errc::precondition, "internal: witness fails an inequality");
  }
  return x;
}

}  // namespace gp
