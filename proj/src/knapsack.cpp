#include "grouppack/knapsack.hpp"

namespace gp {

KnapsackInstance int_exponents_to_nat(const KnapsackInstance& inst) {
  require(inst.integer_exponents, Errc::invalid_argument,
          "instance already has natural exponents");
  KnapsackInstance out;
  out.group = inst.group;
  out.target = inst.target;
  out.integer_exponents = false;
  for (const GroupElement& g : inst.items) {
    out.items.push_back(g);
    out.items.push_back(inv(g));
  }
  return out;
}

namespace {

const HeisElem& item_coords(const GroupElement& g) {
  return std::get<HeisElem>(g.payload);
}

}  // namespace

HeisKnapsackSystem knapsack_to_diophantine(const KnapsackInstance& inst) {
  require(inst.group.kind == GroupDesc::Kind::heis_ze, Errc::unsupported,
          "exponent equations are defined over heis_ze groups");
  require(!inst.integer_exponents, Errc::invalid_argument,
          "convert integer exponents to natural ones first");
  require(inst.target.desc == inst.group, Errc::descriptor_mismatch,
          "target group mismatch");
  for (const GroupElement& g : inst.items)
    require(g.desc == inst.group, Errc::descriptor_mismatch, "item group mismatch");

  const int e = inst.group.param;
  const int k = (int)inst.items.size();
  HeisKnapsackSystem sys;
  sys.k = k;
  sys.lin_rows.assign(2 + e, IntVec(k, 0));
  sys.lin_rhs.assign(2 + e, 0);
  sys.c_lin.assign(k, 0);
  sys.c_diag.assign(k, 0);
  sys.c_cross.assign(k, IntVec(k, 0));

  for (int i = 0; i < k; ++i) {
    const HeisElem& h = item_coords(inst.items[i]);
    sys.lin_rows[0][i] = h.a;
    sys.lin_rows[1][i] = h.b;
    for (int r = 0; r < e; ++r) sys.lin_rows[2 + r][i] = h.z[r];
    sys.c_lin[i] = h.c;
    sys.c_diag[i] = h.a * h.b;
  }
  for (int j = 0; j < k; ++j)
    for (int i = j + 1; i < k; ++i)
      sys.c_cross[j][i] = item_coords(inst.items[j]).a * item_coords(inst.items[i]).b;

  const HeisElem& t = item_coords(inst.target);
  sys.lin_rhs[0] = t.a;
  sys.lin_rhs[1] = t.b;
  for (int r = 0; r < e; ++r) sys.lin_rhs[2 + r] = t.z[r];
  sys.c_rhs = t.c;
  return sys;
}

BigInt center_row_value(const HeisKnapsackSystem& sys, const IntVec& x) {
  require((int)x.size() == sys.k, Errc::invalid_argument, "exponent arity mismatch");
  BigInt v = 0;
  for (int i = 0; i < sys.k; ++i) {
    v += sys.c_lin[i] * x[i];
    v += sys.c_diag[i] * (x[i] * (x[i] - 1) / 2);
    for (int j = 0; j < i; ++j) v += sys.c_cross[j][i] * x[j] * x[i];
  }
  return v;
}

bool system_satisfied(const HeisKnapsackSystem& sys, const IntVec& x) {
  require((int)x.size() == sys.k, Errc::invalid_argument, "exponent arity mismatch");
  for (std::size_t r = 0; r < sys.lin_rows.size(); ++r) {
    BigInt s = 0;
    for (int i = 0; i < sys.k; ++i) s += sys.lin_rows[r][i] * x[i];
    if (s != sys.lin_rhs[r]) return false;
  }
  return center_row_value(sys, x) == sys.c_rhs;
}

namespace {

BigInt pos_mod(const BigInt& v, const BigInt& m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r;
}

bool enumeration_fits(int k, const BigInt& base, std::size_t budget) {
  BigInt total = 1;
  for (int i = 0; i < k; ++i) {
    total *= base;
    if (total > budget) return false;
  }
  return true;
}

}  // namespace

bool modular_obstruction(const HeisKnapsackSystem& sys, long q, std::size_t max_points) {
  require(q >= 2, Errc::invalid_argument, "modulus must be at least 2");
  const BigInt period = 2 * q;
  if (!enumeration_fits(sys.k, period, max_points))
    fail(Errc::limit_exceeded, "modular enumeration exceeds the budget");
  IntVec x(sys.k, 0);
  while (true) {
    bool pass = true;
    // linear rows are checked modulo the full period, the center modulo q
    for (std::size_t r = 0; r < sys.lin_rows.size() && pass; ++r) {
      BigInt s = 0;
      for (int i = 0; i < sys.k; ++i) s += sys.lin_rows[r][i] * x[i];
      pass = pos_mod(s - sys.lin_rhs[r], period) == 0;
    }
    if (pass && pos_mod(center_row_value(sys, x) - sys.c_rhs, q) == 0) return false;
    int i = 0;
    while (i < sys.k && x[i] == period - 1) x[i++] = 0;
    if (i == sys.k) break;
    x[i] += 1;
  }
  return true;
}

namespace {

void verify_witness(const KnapsackInstance& inst, const IntVec& x) {
  require(x.size() == inst.items.size(), Errc::precondition,
          "internal: witness arity mismatch");
  GroupElement acc = identity(inst.group);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!inst.integer_exponents)
      require(x[i] >= 0, Errc::precondition, "internal: negative natural exponent");
    acc = mul(acc, elem_pow(inst.items[i], x[i]));
  }
  require(eq(acc, inst.target), Errc::precondition,
          "internal: witness fails group evaluation");
}

// exact decision when the center row is linear (no quadratic coefficients)
std::optional<KnapsackAnswer> linear_exact(const KnapsackInstance& inst,
                                           const HeisKnapsackSystem& sys) {
  for (const BigInt& d : sys.c_diag)
    if (d != 0) return std::nullopt;
  for (const IntVec& row : sys.c_cross)
    for (const BigInt& v : row)
      if (v != 0) return std::nullopt;
  IntMat coins(sys.k);
  for (int i = 0; i < sys.k; ++i) {
    for (const IntVec& row : sys.lin_rows) coins[i].push_back(row[i]);
    coins[i].push_back(sys.c_lin[i]);
  }
  IntVec rhs = sys.lin_rhs;
  rhs.push_back(sys.c_rhs);
  KnapsackAnswer ans;
  try {
    CoinSolution sol = vector_knapsack_nat(coins, rhs);
    if (sol.decision == Decision::yes) {
      ans.decision = Decision::yes;
      ans.witness = sol.witness;
      verify_witness(inst, ans.witness);
    } else {
      ans.decision = Decision::no;
      ans.certificate = Json{{"kind", "linear_exact"}};
    }
    return ans;
  } catch (const Error& e) {
    if (e.code() == Errc::limit_exceeded) return std::nullopt;
    throw;
  }
}

// valid relaxation over Q: x_i >= 0 as rationals, the square and cross
// products replaced by fresh nonnegative variables
bool relaxation_feasible(const HeisKnapsackSystem& sys) {
  const int k = sys.k;
  const int nsq = k;
  const int ncr = k * (k - 1) / 2;
  const int vars = k + nsq + ncr;
  auto cross_index = [k](int j, int i) {
    // j < i
    return k + k + (j * (2 * k - j - 1)) / 2 + (i - j - 1);
  };
  std::vector<RatConstraint> cs;
  for (std::size_t r = 0; r < sys.lin_rows.size(); ++r) {
    RatConstraint c;
    c.a.assign(vars, BigRat(0));
    for (int i = 0; i < k; ++i) c.a[i] = BigRat(sys.lin_rows[r][i]);
    c.b = BigRat(sys.lin_rhs[r]);
    c.is_eq = true;
    cs.push_back(std::move(c));
  }
  RatConstraint center;
  center.a.assign(vars, BigRat(0));
  for (int i = 0; i < k; ++i) {
    // x(x-1)/2 contributes -x/2 linearly plus a nonnegative square part
    center.a[i] = BigRat(sys.c_lin[i]) - BigRat(sys.c_diag[i]) / BigRat(2);
    center.a[k + i] = BigRat(sys.c_diag[i]) / BigRat(2);
  }
  for (int j = 0; j < k; ++j)
    for (int i = j + 1; i < k; ++i)
      center.a[cross_index(j, i)] = BigRat(sys.c_cross[j][i]);
  center.b = BigRat(sys.c_rhs);
  center.is_eq = true;
  cs.push_back(std::move(center));
  for (int v = 0; v < vars; ++v) {
    RatConstraint nn;
    nn.a.assign(vars, BigRat(0));
    nn.a[v] = BigRat(1);
    nn.b = BigRat(0);
    cs.push_back(std::move(nn));
  }
  return rational_feasible(cs, vars).has_value();
}

std::optional<IntVec> box_search(const HeisKnapsackSystem& sys, long box,
                                 std::size_t max_points) {
  if (sys.k == 0) {
    IntVec empty;
    if (system_satisfied(sys, empty)) return empty;
    return std::nullopt;
  }
  if (!enumeration_fits(sys.k, BigInt(box + 1), max_points)) return std::nullopt;
  IntVec x(sys.k, 0);
  while (true) {
    if (system_satisfied(sys, x)) return x;
    int i = 0;
    while (i < sys.k && x[i] == box) x[i++] = 0;
    if (i == sys.k) break;
    x[i] += 1;
  }
  return std::nullopt;
}

}  // namespace

KnapsackAnswer decide_knapsack_h3(const KnapsackInstance& inst,
                                  const KnapsackOptions& opt) {
  if (inst.integer_exponents) {
    KnapsackAnswer inner = decide_knapsack_h3(int_exponents_to_nat(inst), opt);
    if (inner.decision == Decision::yes) {
      IntVec folded(inst.items.size());
      for (std::size_t i = 0; i < inst.items.size(); ++i)
        folded[i] = inner.witness[2 * i] - inner.witness[2 * i + 1];
      inner.witness = std::move(folded);
      verify_witness(inst, inner.witness);
    }
    return inner;
  }

  HeisKnapsackSystem sys = knapsack_to_diophantine(inst);
  if (auto exact = linear_exact(inst, sys)) return *exact;

  KnapsackAnswer ans;
  if (!relaxation_feasible(sys)) {
    ans.decision = Decision::no;
    ans.certificate = Json{{"kind", "relaxation"}};
    return ans;
  }
  Json tried = Json::array();
  for (long q : opt.moduli) {
    try {
      if (modular_obstruction(sys, q, opt.max_points)) {
        ans.decision = Decision::no;
        ans.certificate = Json{{"kind", "modular"}, {"modulus", q}};
        return ans;
      }
      tried.push_back(q);
    } catch (const Error& e) {
      if (e.code() != Errc::limit_exceeded) throw;
    }
  }
  if (auto found = box_search(sys, opt.box, opt.max_points)) {
    ans.decision = Decision::yes;
    ans.witness = *found;
    verify_witness(inst, ans.witness);
    return ans;
  }
  ans.decision = Decision::unknown;
  ans.certificate = Json{{"reason", "budget_exhausted"},
                         {"moduli_checked", tried},
                         {"box", opt.box}};
  return ans;
}

}  // namespace gp
