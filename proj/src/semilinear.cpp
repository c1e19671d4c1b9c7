#include "grouppack/semilinear.hpp"

#include <algorithm>
#include <tuple>

namespace gp {

namespace {

using RatVec = std::vector<BigRat>;
using RatMat = std::vector<RatVec>;

BigRat rat(const BigInt& v) { return BigRat(v); }

bool vec_zero(const IntVec& v) {
  for (const BigInt& x : v)
    if (x != 0) return false;
  return true;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); i++) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); i++) r[i] = a[i] - b[i];
  return r;
}

BigInt dot(const IntVec& a, const IntVec& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); i++) s += a[i] * b[i];
  return s;
}

void clean_linear(LinearSet& c) {
  IntMat kept;
  for (IntVec& p : c.periods)
    if (!vec_zero(p)) kept.push_back(std::move(p));
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  c.periods = std::move(kept);
}

bool comp_less(const LinearSet& a, const LinearSet& b) {
  if (a.base != b.base) return a.base < b.base;
  return a.periods < b.periods;
}

bool comp_eq(const LinearSet& a, const LinearSet& b) {
  return a.base == b.base && a.periods == b.periods;
}

void dedupe_components(SemilinearSet& s) {
  std::sort(s.components.begin(), s.components.end(), comp_less);
  s.components.erase(
      std::unique(s.components.begin(), s.components.end(), comp_eq),
      s.components.end());
}

// v in {sum lambda_i p_i : lambda over N}
bool monoid_member(const IntMat& periods, const IntVec& v,
                   const SolveLimits& lim) {
  if (periods.empty()) return vec_zero(v);
  return vector_knapsack_nat(periods, v, lim).decision == Decision::yes;
}

bool linear_member(const LinearSet& c, const IntVec& v,
                   const SolveLimits& lim) {
  IntVec rest = vec_sub(v, c.base);
  for (const BigInt& x : rest)
    if (x < 0) return false;
  return monoid_member(c.periods, rest, lim);
}

// A period the remaining periods already generate can be dropped without
// changing the component: the set is base + monoid(periods). Shorter period
// lists keep the solver systems built from them small, so this pays for
// itself on intersection chains. A probe that runs out of budget just keeps
// the period.
void reduce_periods(LinearSet& c, const SolveLimits& lim) {
  if (c.periods.size() < 2) return;
  SolveLimits probe = lim;
  if (probe.max_nodes > 50000) probe.max_nodes = 50000;
  for (std::size_t i = c.periods.size(); i-- > 0;) {
    if (c.periods.size() < 2) break;
    IntMat rest;
    rest.reserve(c.periods.size() - 1);
    for (std::size_t j = 0; j < c.periods.size(); j++)
      if (j != i) rest.push_back(c.periods[j]);
    bool drop = false;
    try {
      drop = monoid_member(rest, c.periods[i], probe);
    } catch (const Error& e) {
      if (e.code() != Errc::limit_exceeded) throw;
    }
    if (drop)
      c.periods.erase(c.periods.begin() + static_cast<std::ptrdiff_t>(i));
  }
}

// Reduced row echelon form in place; returns the pivot row of each column.
std::vector<int> rref(RatMat& a) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivot(cols, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; c++) {
    int pr = -1;
    for (int i = r; i < rows; i++)
      if (!rat_zero(a[i][c])) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[r], a[pr]);
    BigRat piv = a[r][c];
    for (int j = 0; j < cols; j++) a[r][j] /= piv;
    for (int i = 0; i < rows; i++) {
      if (i == r || rat_zero(a[i][c])) continue;
      BigRat f = a[i][c];
      for (int j = 0; j < cols; j++) a[i][j] -= f * a[r][j];
    }
    pivot[c] = r;
    r++;
  }
  return pivot;
}

// k x n matrix whose columns are the periods.
RatMat period_columns(const LinearSet& c, int k) {
  int n = static_cast<int>(c.periods.size());
  RatMat m(static_cast<std::size_t>(k), RatVec(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < k; j++) m[j][i] = rat(c.periods[i][j]);
  return m;
}

// A primitive integer kernel vector of the period matrix, or nullopt when
// the periods are independent.
std::optional<IntVec> period_kernel(const LinearSet& c, int k) {
  int n = static_cast<int>(c.periods.size());
  if (n == 0) return std::nullopt;
  if (k == 0) {
    IntVec z(static_cast<std::size_t>(n), BigInt(0));
    z[0] = 1;
    return z;
  }
  RatMat a = period_columns(c, k);
  std::vector<int> pivot = rref(a);
  int free_col = -1;
  for (int col = 0; col < n; col++)
    if (pivot[col] < 0) {
      free_col = col;
      break;
    }
  if (free_col < 0) return std::nullopt;
  RatVec x(static_cast<std::size_t>(n), BigRat());
  x[free_col] = rat(1);
  for (int col = 0; col < n; col++)
    if (pivot[col] >= 0) x[col] = -a[pivot[col]][free_col];
  BigInt den = 1;
  for (const BigRat& e : x) {
    BigInt d = e.denominator();
    den = den / big_gcd(den, d) * d;
  }
  IntVec out(static_cast<std::size_t>(n));
  BigInt g = 0;
  for (int i = 0; i < n; i++) {
    out[i] = x[i].numerator() * (den / x[i].denominator());
    g = big_gcd(g, big_abs(out[i]));
  }
  if (g > 1)
    for (BigInt& e : out) e /= g;
  return out;
}

RatMat rat_inverse(const RatMat& m) {
  int n = static_cast<int>(m.size());
  RatMat aug(static_cast<std::size_t>(n),
             RatVec(static_cast<std::size_t>(2 * n), BigRat()));
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) aug[i][j] = m[i][j];
    aug[i][n + i] = rat(1);
  }
  for (int c = 0; c < n; c++) {
    int pr = -1;
    for (int i = c; i < n; i++)
      if (!rat_zero(aug[i][c])) {
        pr = i;
        break;
      }
    require(pr >= 0, Errc::precondition, "matrix not invertible");
    std::swap(aug[c], aug[pr]);
    BigRat piv = aug[c][c];
    for (int j = 0; j < 2 * n; j++) aug[c][j] /= piv;
    for (int i = 0; i < n; i++) {
      if (i == c || rat_zero(aug[i][c])) continue;
      BigRat f = aug[i][c];
      for (int j = 0; j < 2 * n; j++) aug[i][j] -= f * aug[c][j];
    }
  }
  RatMat inv(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) inv[i][j] = aug[i][n + j];
  return inv;
}

// Scale a rational row to integers; returns the common denominator used.
BigInt scale_row(const RatVec& row, IntVec& out) {
  BigInt den = 1;
  for (const BigRat& e : row) {
    BigInt d = e.denominator();
    den = den / big_gcd(den, d) * d;
  }
  out.assign(row.size(), BigInt(0));
  for (std::size_t i = 0; i < row.size(); i++)
    out[i] = row[i].numerator() * (den / row[i].denominator());
  return den;
}

// One negated membership condition over x in N^k.
struct Atom {
  int type = 0;  // 0: a.x >= c   1: a.x <= c   2: a.x congruent to c mod m
  IntVec a;
  BigInt c;
  BigInt m;
};

bool atom_less(const Atom& x, const Atom& y) {
  return std::tie(x.type, x.a, x.c, x.m) < std::tie(y.type, y.a, y.c, y.m);
}

bool atom_eq(const Atom& x, const Atom& y) {
  return x.type == y.type && x.a == y.a && x.c == y.c && x.m == y.m;
}

// Components of the projected solution set of a one-row slack system.
SemilinearSet project_solution(const NatSystemSolution& sol, int k) {
  SemilinearSet out;
  out.k = k;
  if (!sol.solvable) return out;
  IntMat periods;
  for (const IntVec& h : sol.homogeneous) {
    IntVec p(h.begin(), h.begin() + k);
    if (!vec_zero(p)) periods.push_back(std::move(p));
  }
  std::sort(periods.begin(), periods.end());
  periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
  for (const IntVec& m : sol.minimal) {
    LinearSet c;
    c.base.assign(m.begin(), m.begin() + k);
    c.periods = periods;
    out.components.push_back(std::move(c));
  }
  dedupe_components(out);
  return out;
}

SemilinearSet compile_atom(const Atom& at, int k, const SolveLimits& lim) {
  IntVec row = at.a;
  if (at.type == 0) {
    row.push_back(BigInt(-1));
  } else if (at.type == 1) {
    row.push_back(BigInt(1));
  } else {
    row.push_back(-at.m);
    row.push_back(at.m);
  }
  IntMat sys{row};
  NatSystemSolution sol =
      solve_nat_system(sys, {at.c}, static_cast<int>(row.size()), lim);
  return project_solution(sol, k);
}

// Sign-normalized primitive integer version of a rational row, empty when
// the row is zero.
IntVec normalized_row(const RatVec& row) {
  IntVec out;
  BigInt den = scale_row(row, out);
  (void)den;
  BigInt g = 0;
  for (const BigInt& e : out) g = big_gcd(g, big_abs(e));
  if (g == 0) return {};
  for (BigInt& e : out) e /= g;
  for (const BigInt& e : out) {
    if (e == 0) continue;
    if (e < 0)
      for (BigInt& f : out) f = -f;
    break;
  }
  return out;
}

// Complement of a single linear set with independent periods.
SemilinearSet complement_independent(const LinearSet& c, int k,
                                     const SolveLimits& lim) {
  int n = static_cast<int>(c.periods.size());
  RatMat cols = period_columns(c, k);
  RatMat r;  // n x k, recovers the unique multipliers on the period span
  if (n > 0) {
    RatMat gram(static_cast<std::size_t>(n),
                RatVec(static_cast<std::size_t>(n), BigRat()));
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) {
        BigInt s = 0;
        for (int t = 0; t < k; t++) s += c.periods[i][t] * c.periods[j][t];
        gram[i][j] = rat(s);
      }
    RatMat inv = rat_inverse(gram);
    r.assign(static_cast<std::size_t>(n),
             RatVec(static_cast<std::size_t>(k), BigRat()));
    for (int i = 0; i < n; i++)
      for (int j = 0; j < k; j++) {
        BigRat s;
        for (int t = 0; t < n; t++) s += inv[i][t] * rat(c.periods[t][j]);
        r[i][j] = s;
      }
  }

  std::vector<Atom> atoms;

  // off-span directions: rows of I - cols * r
  IntMat span_rows;
  for (int i = 0; i < k; i++) {
    RatVec q(static_cast<std::size_t>(k), BigRat());
    q[i] = rat(1);
    for (int j = 0; j < k; j++) {
      BigRat s;
      for (int t = 0; t < n; t++) s += cols[i][t] * r[t][j];
      q[j] -= s;
    }
    IntVec g = normalized_row(q);
    if (!g.empty()) span_rows.push_back(std::move(g));
  }
  std::sort(span_rows.begin(), span_rows.end());
  span_rows.erase(std::unique(span_rows.begin(), span_rows.end()),
                  span_rows.end());
  for (const IntVec& g : span_rows) {
    BigInt gb = dot(g, c.base);
    atoms.push_back({0, g, gb + 1, BigInt(0)});
    atoms.push_back({1, g, gb - 1, BigInt(0)});
  }

  // negative or fractional multipliers
  for (int i = 0; i < n; i++) {
    IntVec f;
    BigInt d = scale_row(r[i], f);
    require(!vec_zero(f), Errc::precondition, "degenerate multiplier row");
    BigInt fb = dot(f, c.base);
    atoms.push_back({1, f, fb - 1, BigInt(0)});
    for (BigInt rem = 1; rem < d; ++rem) {
      BigInt cc = ((fb + rem) % d + d) % d;
      atoms.push_back({2, f, cc, d});
    }
  }

  std::sort(atoms.begin(), atoms.end(), atom_less);
  atoms.erase(std::unique(atoms.begin(), atoms.end(), atom_eq), atoms.end());

  SemilinearSet out;
  out.k = k;
  for (const Atom& at : atoms) {
    SemilinearSet part = compile_atom(at, k, lim);
    out.components.insert(out.components.end(), part.components.begin(),
                          part.components.end());
  }
  dedupe_components(out);
  return semilinear_simplify(out, lim);
}

}  // namespace

void validate_semilinear(const SemilinearSet& s) {
  require(s.k >= 0, Errc::invalid_argument, "negative dimension");
  for (const LinearSet& c : s.components) {
    require(static_cast<int>(c.base.size()) == s.k, Errc::invalid_argument,
            "base length mismatch");
    for (const BigInt& x : c.base)
      require(x >= 0, Errc::invalid_argument, "negative base entry");
    for (const IntVec& p : c.periods) {
      require(static_cast<int>(p.size()) == s.k, Errc::invalid_argument,
              "period length mismatch");
      for (const BigInt& x : p)
        require(x >= 0, Errc::invalid_argument, "negative period entry");
    }
  }
}

SemilinearSet semilinear_from_json(const Json& j) {
  require(j.is_object() && j.contains("k") && j.contains("components"),
          Errc::parse, "semilinear set wants k and components");
  SemilinearSet s;
  require(j.at("k").is_number_integer(), Errc::parse, "k must be an integer");
  s.k = j.at("k").get<int>();
  const Json& comps = j.at("components");
  require(comps.is_array(), Errc::parse, "components must be an array");
  for (const Json& cj : comps) {
    require(cj.is_object() && cj.contains("base") && cj.contains("periods"),
            Errc::parse, "component wants base and periods");
    LinearSet c;
    require(cj.at("base").is_array(), Errc::parse, "base must be an array");
    for (const Json& e : cj.at("base")) c.base.push_back(big_from_json(e));
    require(cj.at("periods").is_array(), Errc::parse,
            "periods must be an array");
    for (const Json& pj : cj.at("periods")) {
      require(pj.is_array(), Errc::parse, "period must be an array");
      IntVec p;
      for (const Json& e : pj) p.push_back(big_from_json(e));
      c.periods.push_back(std::move(p));
    }
    s.components.push_back(std::move(c));
  }
  validate_semilinear(s);
  return s;
}

Json semilinear_to_json(const SemilinearSet& s) {
  Json comps = Json::array();
  for (const LinearSet& c : s.components) {
    Json base = Json::array();
    for (const BigInt& x : c.base) base.push_back(big_to_json(x));
    Json periods = Json::array();
    for (const IntVec& p : c.periods) {
      Json row = Json::array();
      for (const BigInt& x : p) row.push_back(big_to_json(x));
      periods.push_back(std::move(row));
    }
    comps.push_back(Json{{"base", std::move(base)},
                         {"periods", std::move(periods)}});
  }
  return Json{{"k", s.k}, {"components", std::move(comps)}};
}

SemilinearSet semilinear_empty(int k) {
  require(k >= 0, Errc::invalid_argument, "negative dimension");
  SemilinearSet s;
  s.k = k;
  return s;
}

SemilinearSet semilinear_singleton(const IntVec& v) {
  SemilinearSet s;
  s.k = static_cast<int>(v.size());
  s.components.push_back({v, {}});
  validate_semilinear(s);
  return s;
}

SemilinearSet semilinear_full(int k) {
  require(k >= 0, Errc::invalid_argument, "negative dimension");
  SemilinearSet s;
  s.k = k;
  LinearSet c;
  c.base.assign(static_cast<std::size_t>(k), BigInt(0));
  for (int i = 0; i < k; i++) {
    IntVec unit(static_cast<std::size_t>(k), BigInt(0));
    unit[i] = 1;
    c.periods.push_back(std::move(unit));
  }
  s.components.push_back(std::move(c));
  return s;
}

bool semilinear_member(const SemilinearSet& s, const IntVec& v,
                       const SolveLimits& lim) {
  require(static_cast<int>(v.size()) == s.k, Errc::invalid_argument,
          "query length mismatch");
  for (const BigInt& x : v)
    if (x < 0) return false;
  if (s.k == 0) return !s.components.empty();
  for (const LinearSet& c : s.components)
    if (linear_member(c, v, lim)) return true;
  return false;
}

SemilinearSet semilinear_union(const SemilinearSet& a,
                               const SemilinearSet& b) {
  require(a.k == b.k, Errc::invalid_argument, "dimension mismatch");
  SemilinearSet out = a;
  out.components.insert(out.components.end(), b.components.begin(),
                        b.components.end());
  dedupe_components(out);
  return out;
}

SemilinearSet semilinear_sum(const SemilinearSet& a, const SemilinearSet& b) {
  require(a.k == b.k, Errc::invalid_argument, "dimension mismatch");
  SemilinearSet out;
  out.k = a.k;
  for (const LinearSet& ca : a.components)
    for (const LinearSet& cb : b.components) {
      LinearSet c;
      c.base = vec_add(ca.base, cb.base);
      c.periods = ca.periods;
      c.periods.insert(c.periods.end(), cb.periods.begin(),
                       cb.periods.end());
      clean_linear(c);
      out.components.push_back(std::move(c));
    }
  dedupe_components(out);
  return out;
}

SemilinearSet semilinear_star(const SemilinearSet& s, const SolveLimits& lim) {
  validate_semilinear(s);
  SemilinearSet acc =
      semilinear_singleton(IntVec(static_cast<std::size_t>(s.k), BigInt(0)));
  for (LinearSet comp : s.components) {
    clean_linear(comp);
    LinearSet rep = comp;
    rep.periods.push_back(comp.base);
    clean_linear(rep);
    SemilinearSet term;
    term.k = s.k;
    term.components.push_back(
        {IntVec(static_cast<std::size_t>(s.k), BigInt(0)), {}});
    term.components.push_back(std::move(rep));
    dedupe_components(term);
    acc = semilinear_sum(acc, term);
    acc = semilinear_simplify(acc, lim);
  }
  return acc;
}

SemilinearSet semilinear_intersect(const SemilinearSet& a,
                                   const SemilinearSet& b,
                                   const SolveLimits& lim) {
  require(a.k == b.k, Errc::invalid_argument, "dimension mismatch");
  SemilinearSet out;
  out.k = a.k;
  if (a.k == 0) {
    if (!a.components.empty() && !b.components.empty())
      out.components.push_back({{}, {}});
    return out;
  }
  for (const LinearSet& ca : a.components)
    for (const LinearSet& cb : b.components) {
      int n1 = static_cast<int>(ca.periods.size());
      int n2 = static_cast<int>(cb.periods.size());
      IntVec rhs = vec_sub(cb.base, ca.base);
      if (n1 + n2 == 0) {
        if (vec_zero(rhs)) out.components.push_back({ca.base, {}});
        continue;
      }
      IntMat sys(static_cast<std::size_t>(a.k),
                 IntVec(static_cast<std::size_t>(n1 + n2), BigInt(0)));
      for (int j = 0; j < a.k; j++) {
        for (int i = 0; i < n1; i++) sys[j][i] = ca.periods[i][j];
        for (int i = 0; i < n2; i++) sys[j][n1 + i] = -cb.periods[i][j];
      }
      NatSystemSolution sol = solve_nat_system(sys, rhs, n1 + n2, lim);
      if (!sol.solvable) continue;
      IntMat periods;
      for (const IntVec& h : sol.homogeneous) {
        IntVec p(static_cast<std::size_t>(a.k), BigInt(0));
        for (int i = 0; i < n1; i++)
          for (int j = 0; j < a.k; j++) p[j] += h[i] * ca.periods[i][j];
        if (!vec_zero(p)) periods.push_back(std::move(p));
      }
      std::sort(periods.begin(), periods.end());
      periods.erase(std::unique(periods.begin(), periods.end()),
                    periods.end());
      for (const IntVec& m : sol.minimal) {
        LinearSet c;
        c.base = ca.base;
        for (int i = 0; i < n1; i++)
          for (int j = 0; j < a.k; j++) c.base[j] += m[i] * ca.periods[i][j];
        c.periods = periods;
        out.components.push_back(std::move(c));
      }
    }
  dedupe_components(out);
  return out;
}

namespace {

bool monoid_member_probe(const IntMat& periods, const IntVec& v,
                         const SolveLimits& lim) {
  SolveLimits probe = lim;
  if (probe.max_nodes > 50000) probe.max_nodes = 50000;
  try {
    return monoid_member(periods, v, probe);
  } catch (const Error& e) {
    if (e.code() != Errc::limit_exceeded) throw;
    return false;
  }
}

// Pull bases back along their own periods. If some component L(b; Q) covers
// P minus d, then L(b + d; P) with d in P can be rewritten as L(b; P): any
// element b + q either spends a copy of d (landing in the original) or uses
// only P minus d (landing in L(b; Q)). This collapses arithmetic towers of
// near-identical components that plain subsumption cannot merge.
bool pull_bases(SemilinearSet& s, const SolveLimits& lim) {
  std::map<IntVec, std::vector<std::size_t>> by_base;
  for (std::size_t i = 0; i < s.components.size(); i++)
    by_base[s.components[i].base].push_back(i);
  bool changed = false;
  for (std::size_t i = 0; i < s.components.size(); i++) {
    LinearSet& c = s.components[i];
    for (const IntVec& d : c.periods) {
      IntVec nb = vec_sub(c.base, d);
      bool nonneg = true;
      for (const BigInt& x : nb)
        if (x < 0) {
          nonneg = false;
          break;
        }
      if (!nonneg) continue;
      auto it = by_base.find(nb);
      if (it == by_base.end()) continue;
      bool pulled = false;
      for (std::size_t j : it->second) {
        if (j == i) continue;
        const IntMat& q = s.components[j].periods;
        bool covered = true;
        for (const IntVec& p : c.periods) {
          if (p == d) continue;
          if (!monoid_member_probe(q, p, lim)) {
            covered = false;
            break;
          }
        }
        if (covered) {
          c.base = nb;
          changed = true;
          pulled = true;
          break;
        }
      }
      if (pulled) break;
    }
  }
  return changed;
}

bool prune_subsumed(SemilinearSet& out, const SolveLimits& lim) {
  std::size_t n = out.components.size();
  std::vector<bool> dead(n, false);
  bool changed = false;
  for (std::size_t i = 0; i < n; i++) {
    for (std::size_t j = 0; j < n && !dead[i]; j++) {
      if (i == j || dead[j]) continue;
      const LinearSet& inner = out.components[i];
      const LinearSet& outer = out.components[j];
      if (!linear_member(outer, inner.base, lim)) continue;
      bool all = true;
      for (const IntVec& p : inner.periods)
        if (!monoid_member(outer.periods, p, lim)) {
          all = false;
          break;
        }
      if (all) {
        dead[i] = true;
        changed = true;
      }
    }
  }
  if (!changed) return false;
  SemilinearSet pruned;
  pruned.k = out.k;
  for (std::size_t i = 0; i < n; i++)
    if (!dead[i]) pruned.components.push_back(std::move(out.components[i]));
  out = std::move(pruned);
  return true;
}

}  // namespace

SemilinearSet semilinear_simplify(const SemilinearSet& s,
                                  const SolveLimits& lim) {
  SemilinearSet out = s;
  for (LinearSet& c : out.components) {
    clean_linear(c);
    reduce_periods(c, lim);
  }
  dedupe_components(out);
  for (;;) {
    bool changed = pull_bases(out, lim);
    if (changed) dedupe_components(out);
    if (prune_subsumed(out, lim)) changed = true;
    if (!changed) return out;
  }
}

bool periods_independent(const LinearSet& c, int k) {
  return !period_kernel(c, k).has_value();
}

std::vector<LinearSet> decompose_independent_periods(const LinearSet& c,
                                                     int k) {
  std::vector<LinearSet> out;
  std::vector<LinearSet> work{c};
  std::size_t processed = 0;
  while (!work.empty()) {
    require(++processed <= 4096, Errc::limit_exceeded,
            "period decomposition too large");
    LinearSet cur = std::move(work.back());
    work.pop_back();
    clean_linear(cur);
    std::optional<IntVec> rel = period_kernel(cur, k);
    if (!rel) {
      out.push_back(std::move(cur));
      continue;
    }
    // The relation has entries of both signs because the periods are nonzero
    // and nonnegative. Any value using at least w_j copies of p_j for every
    // negative entry -w_j can shift those multipliers onto the positive
    // side, so pinning one such multiplier below w_j covers the set.
    bool has_neg = false;
    for (const BigInt& e : *rel)
      if (e < 0) has_neg = true;
    require(has_neg, Errc::precondition, "one-sided period relation");
    for (std::size_t j = 0; j < rel->size(); j++) {
      if ((*rel)[j] >= 0) continue;
      BigInt wj = -(*rel)[j];
      for (BigInt repc = 0; repc < wj; ++repc) {
        LinearSet part;
        part.base = cur.base;
        for (int t = 0; t < k; t++) part.base[t] += repc * cur.periods[j][t];
        for (std::size_t i = 0; i < cur.periods.size(); i++)
          if (i != j) part.periods.push_back(cur.periods[i]);
        work.push_back(std::move(part));
      }
    }
  }
  return out;
}

SemilinearSet semilinear_complement(const SemilinearSet& s,
                                    const SolveLimits& lim) {
  validate_semilinear(s);
  if (s.k == 0) {
    if (s.components.empty()) return semilinear_singleton(IntVec{});
    return semilinear_empty(0);
  }
  if (s.components.empty()) return semilinear_full(s.k);
  std::optional<SemilinearSet> acc;
  for (const LinearSet& comp : s.components) {
    std::optional<SemilinearSet> comp_c;
    for (const LinearSet& part : decompose_independent_periods(comp, s.k)) {
      SemilinearSet pc = complement_independent(part, s.k, lim);
      if (comp_c)
        comp_c = semilinear_simplify(semilinear_intersect(*comp_c, pc, lim),
                                     lim);
      else
        comp_c = pc;
    }
    if (acc)
      acc = semilinear_simplify(semilinear_intersect(*acc, *comp_c, lim), lim);
    else
      acc = *comp_c;
  }
  return *acc;
}

bool semilinear_universal(const SemilinearSet& s, const SolveLimits& lim) {
  return semilinear_complement(s, lim).components.empty();
}

std::optional<IntVec> semilinear_witness_outside(const SemilinearSet& s,
                                                 const SolveLimits& lim) {
  SemilinearSet c = semilinear_complement(s, lim);
  if (c.components.empty()) return std::nullopt;
  return c.components.front().base;
}

}  // namespace gp
