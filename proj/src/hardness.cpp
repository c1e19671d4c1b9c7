#include "grouppack/hardness.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gp {

namespace {

const QuadInt kQuadOne{1, 0};
const QuadInt kQuadAlpha{1, 1};

void validate_cnf(const CNFFormula& f) {
  require(f.vars >= 0, Errc::invalid_argument, "negative variable count");
  for (const auto& cl : f.clauses) {
    require(!cl.empty() && cl.size() <= 3, Errc::invalid_argument,
            "clauses carry one to three literals");
    for (int lit : cl) {
      require(lit != 0, Errc::invalid_argument, "literal 0 is reserved");
      require(std::abs(lit) <= f.vars, Errc::invalid_argument, "literal out of range");
    }
  }
}

// digit positions: variable i (1-based) sits at 3(i-1), clause k at 3n+3(k-1)
long var_power(int i) { return 3L * (i - 1); }
long clause_power(int n, int k) { return 3L * n + 3L * (k - 1); }

int satisfied_count(const std::vector<int>& clause, const std::vector<bool>& assign) {
  int c = 0;
  for (int lit : clause) {
    bool val = lit > 0 ? assign[static_cast<size_t>(lit) - 1]
                       : !assign[static_cast<size_t>(-lit) - 1];
    if (val) c++;
  }
  return c;
}

BigInt pow_big(const BigInt& b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; i++) r *= b;
  return r;
}

GroupElement z_vector_elem(int n, const IntVec& v) {
  ZVec zv;
  zv.v = v;
  return GroupElement{GroupDesc::z(n), std::move(zv)};
}

// group of an expression extended by one Z coordinate per atom, and the lift
// of an element with a prescribed tail
GroupDesc extended_group(const GroupDesc& g, int extra) {
  std::vector<GroupDesc> fs;
  if (g.kind == GroupDesc::Kind::product)
    fs = g.factors;
  else
    fs.push_back(g);
  fs.push_back(GroupDesc::z(extra));
  return GroupDesc::product(std::move(fs));
}

GroupElement extend_element(const GroupDesc& ext, const GroupElement& x, const IntVec& tail) {
  std::vector<GroupElement> parts;
  if (x.desc.kind == GroupDesc::Kind::product)
    parts = std::get<std::vector<GroupElement>>(x.payload);
  else
    parts.push_back(x);
  parts.push_back(z_vector_elem(static_cast<int>(tail.size()), tail));
  return GroupElement{ext, std::move(parts)};
}

}  // namespace

QuadInt alpha_pow(long p) {
  require(p >= 0, Errc::precondition, "alpha_pow wants a nonnegative exponent");
  QuadInt r = kQuadOne;
  for (long i = 0; i < p; i++) r = quad_mul(r, kQuadAlpha);
  return r;
}

QuadInt alpha_value(const std::vector<int>& digits) {
  QuadInt sum{0, 0};
  QuadInt pw = kQuadOne;
  QuadInt step = alpha_pow(3);
  for (int d : digits) {
    QuadInt term = quad_mul(QuadInt{d, 0}, pw);
    sum = quad_add(sum, term);
    pw = quad_mul(pw, step);
  }
  return sum;
}

bool digits_distinct(int len) {
  require(len >= 0, Errc::precondition, "negative length");
  double combos = 1;
  for (int i = 0; i < len; i++) combos *= 6;
  require(combos <= 2e6, Errc::limit_exceeded, "too many digit strings to enumerate");

  std::vector<QuadInt> vals;
  std::vector<int> digits(static_cast<size_t>(len), 0);
  for (;;) {
    vals.push_back(alpha_value(digits));
    int i = 0;
    while (i < len && digits[static_cast<size_t>(i)] == 5) digits[static_cast<size_t>(i++)] = 0;
    if (i == len) break;
    digits[static_cast<size_t>(i)]++;
  }
  std::sort(vals.begin(), vals.end(),
            [](const QuadInt& a, const QuadInt& b) { return quad_compare(a, b) < 0; });
  for (size_t i = 1; i < vals.size(); i++)
    if (quad_compare(vals[i - 1], vals[i]) == 0) return false;
  return true;
}

bool digit_tail_bound(int len) {
  require(len >= 0, Errc::precondition, "negative length");
  std::vector<int> full(static_cast<size_t>(len), 5);
  return quad_compare(alpha_value(full), alpha_pow(3L * len)) < 0;
}

GroupElement upper_unitriangular_alpha(const QuadInt& v) {
  QuadMatrix m = QuadMatrix::identity();
  m.e[1] = v;
  return GroupElement{GroupDesc::galpha(), m};
}

GeneratorWord conjugate_power_word(long p) {
  require(p >= 0, Errc::precondition, "conjugate_power_word wants a nonnegative power");
  GeneratorWord w;
  w.reserve(static_cast<size_t>(2 * p + 1));
  for (long i = 0; i < p; i++) w.push_back(1);
  w.push_back(2);
  for (long i = 0; i < p; i++) w.push_back(-1);
  return w;
}

CNFFormula cnf_from_json(const Json& j) {
  require(j.is_object() && j.contains("vars") && j.contains("clauses"), Errc::parse,
          "formula wants {vars, clauses}");
  require(j.at("vars").is_number_integer(), Errc::parse, "vars must be an integer");
  CNFFormula f;
  f.vars = j.at("vars").get<int>();
  require(j.at("clauses").is_array(), Errc::parse, "clauses must be an array");
  for (const auto& cj : j.at("clauses")) {
    require(cj.is_array(), Errc::parse, "each clause is an array of literals");
    std::vector<int> cl;
    for (const auto& lj : cj) {
      require(lj.is_number_integer(), Errc::parse, "literals are integers");
      cl.push_back(lj.get<int>());
    }
    f.clauses.push_back(std::move(cl));
  }
  validate_cnf(f);
  return f;
}

Json cnf_to_json(const CNFFormula& f) {
  Json cls = Json::array();
  for (const auto& cl : f.clauses) cls.push_back(cl);
  return Json{{"vars", f.vars}, {"clauses", cls}};
}

CNFFormula cnf_from_dimacs(const std::string& text) {
  CNFFormula f;
  int declared_clauses = -1;
  bool seen_header = false;
  std::vector<int> pending;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == 'c' || line[start] == '%') continue;
    if (line[start] == 'p') {
      require(!seen_header, Errc::parse, "duplicate problem line");
      std::istringstream hs(line.substr(start));
      std::string p, fmt;
      hs >> p >> fmt >> f.vars >> declared_clauses;
      require(!hs.fail() && fmt == "cnf", Errc::parse, "problem line is not 'p cnf vars clauses'");
      seen_header = true;
      continue;
    }
    require(seen_header, Errc::parse, "clause before the problem line");
    std::istringstream ls(line.substr(start));
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        f.clauses.push_back(pending);
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
    require(ls.eof(), Errc::parse, "stray token in clause data");
  }
  require(seen_header, Errc::parse, "missing problem line");
  require(pending.empty(), Errc::parse, "unterminated clause");
  require(static_cast<int>(f.clauses.size()) == declared_clauses, Errc::parse,
          "clause count differs from the problem line");
  validate_cnf(f);
  return f;
}

bool cnf_eval(const CNFFormula& f, const std::vector<bool>& assign) {
  require(static_cast<int>(assign.size()) == f.vars, Errc::precondition,
          "assignment size mismatch");
  for (const auto& cl : f.clauses)
    if (satisfied_count(cl, assign) == 0) return false;
  return true;
}

SubsetSumReduction cnf_to_subsetsum(const CNFFormula& f) {
  validate_cnf(f);
  const int n = f.vars;
  const int m = static_cast<int>(f.clauses.size());

  SubsetSumReduction r;
  r.group = GroupDesc::galpha();
  r.nvars = n;
  r.nclauses = m;

  auto literal_item = [&](int lit_var, bool positive) {
    long base = var_power(lit_var);
    QuadInt v = alpha_pow(base);
    GeneratorWord w = conjugate_power_word(base);
    for (int k = 1; k <= m; k++) {
      for (int lit : f.clauses[static_cast<size_t>(k) - 1]) {
        if (lit == (positive ? lit_var : -lit_var)) {
          long cp = clause_power(n, k);
          v = quad_add(v, alpha_pow(cp));
          GeneratorWord cw = conjugate_power_word(cp);
          w.insert(w.end(), cw.begin(), cw.end());
        }
      }
    }
    r.values.push_back(v);
    r.words.push_back(std::move(w));
  };

  for (int i = 1; i <= n; i++) {
    literal_item(i, true);
    literal_item(i, false);
  }
  for (int k = 1; k <= m; k++) {
    long cp = clause_power(n, k);
    for (int copy = 0; copy < 2; copy++) {
      r.values.push_back(alpha_pow(cp));
      r.words.push_back(conjugate_power_word(cp));
    }
  }

  r.target_value = QuadInt{0, 0};
  for (int i = 1; i <= n; i++) {
    r.target_value = quad_add(r.target_value, alpha_pow(var_power(i)));
    GeneratorWord w = conjugate_power_word(var_power(i));
    r.target_word.insert(r.target_word.end(), w.begin(), w.end());
  }
  for (int k = 1; k <= m; k++) {
    long cp = clause_power(n, k);
    QuadInt pw = alpha_pow(cp);
    r.target_value = quad_add(r.target_value, quad_mul(QuadInt{3, 0}, pw));
    GeneratorWord w = conjugate_power_word(cp);
    for (int copy = 0; copy < 3; copy++)
      r.target_word.insert(r.target_word.end(), w.begin(), w.end());
  }
  return r;
}

std::vector<int> assignment_to_subset(const CNFFormula& f, const std::vector<bool>& assign) {
  require(static_cast<int>(assign.size()) == f.vars, Errc::precondition,
          "assignment size mismatch");
  std::vector<int> subset;
  for (int i = 1; i <= f.vars; i++)
    subset.push_back(2 * (i - 1) + (assign[static_cast<size_t>(i) - 1] ? 0 : 1));
  const int filler_base = 2 * f.vars;
  for (int k = 1; k <= static_cast<int>(f.clauses.size()); k++) {
    int sat = satisfied_count(f.clauses[static_cast<size_t>(k) - 1], assign);
    int fillers = sat == 0 ? 2 : 3 - sat;
    for (int c = 0; c < fillers; c++) subset.push_back(filler_base + 2 * (k - 1) + c);
  }
  return subset;
}

QuadInt subset_value(const SubsetSumReduction& r, const std::vector<int>& subset) {
  std::set<int> seen;
  QuadInt sum{0, 0};
  for (int idx : subset) {
    require(idx >= 0 && idx < static_cast<int>(r.values.size()), Errc::invalid_argument,
            "item index out of range");
    require(seen.insert(idx).second, Errc::invalid_argument, "repeated item index");
    sum = quad_add(sum, r.values[static_cast<size_t>(idx)]);
  }
  return sum;
}

Polynomial polynomial_from_json(const Json& j) {
  require(j.is_object() && j.contains("vars") && j.contains("terms"), Errc::parse,
          "polynomial wants {vars, terms}");
  require(j.at("vars").is_number_integer(), Errc::parse, "vars must be an integer");
  Polynomial p;
  p.vars = j.at("vars").get<int>();
  require(p.vars >= 0, Errc::invalid_argument, "negative variable count");
  require(j.at("terms").is_array(), Errc::parse, "terms must be an array");
  for (const auto& tj : j.at("terms")) {
    require(tj.is_object() && tj.contains("coeff") && tj.contains("exps"), Errc::parse,
            "term wants {coeff, exps}");
    Polynomial::Term t;
    t.coeff = big_from_json(tj.at("coeff"));
    require(tj.at("exps").is_array(), Errc::parse, "exps must be an array");
    for (const auto& ej : tj.at("exps")) {
      require(ej.is_number_integer(), Errc::parse, "exponents are integers");
      int e = ej.get<int>();
      require(e >= 0, Errc::invalid_argument, "negative exponent");
      t.exps.push_back(e);
    }
    require(static_cast<int>(t.exps.size()) == p.vars, Errc::invalid_argument,
            "one exponent per variable");
    p.terms.push_back(std::move(t));
  }
  return p;
}

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms)
    terms.push_back(Json{{"coeff", big_to_json(t.coeff)}, {"exps", t.exps}});
  return Json{{"vars", p.vars}, {"terms", terms}};
}

BigInt eval_polynomial(const Polynomial& p, const IntVec& x) {
  require(static_cast<int>(x.size()) == p.vars, Errc::precondition, "assignment size mismatch");
  BigInt sum = 0;
  for (const auto& t : p.terms) {
    BigInt v = t.coeff;
    for (int j = 0; j < p.vars; j++)
      v *= pow_big(x[static_cast<size_t>(j)], t.exps[static_cast<size_t>(j)]);
    sum += v;
  }
  return sum;
}

EqSystem system_from_json(const Json& j) {
  require(j.is_object() && j.contains("vars") && j.contains("inputs") && j.contains("equations"),
          Errc::parse, "system wants {vars, inputs, equations}");
  EqSystem s;
  s.vars = j.at("vars").get<int>();
  s.inputs = j.at("inputs").get<int>();
  require(s.inputs >= 0 && s.inputs <= s.vars, Errc::invalid_argument, "inputs exceed vars");
  auto var_ok = [&](int v) { return v >= 0 && v < s.vars; };
  require(j.at("equations").is_array(), Errc::parse, "equations must be an array");
  for (const auto& ej : j.at("equations")) {
    require(ej.is_array() && ej.size() >= 2 && ej[0].is_string(), Errc::parse,
            "equation wants [op, args...]");
    std::string op = ej[0].get<std::string>();
    EqSystem::Eq e;
    if (op == "mul" || op == "add") {
      require(ej.size() == 4, Errc::parse, "mul/add want [op, x, y, z]");
      e.op = op == "mul" ? EqSystem::Op::mul : EqSystem::Op::add;
      e.x = ej[1].get<int>();
      e.y = ej[2].get<int>();
      e.z = ej[3].get<int>();
      require(var_ok(e.x) && var_ok(e.y) && var_ok(e.z), Errc::invalid_argument,
              "equation variable out of range");
    } else if (op == "const") {
      require(ej.size() == 3, Errc::parse, "const wants [op, x, c]");
      e.op = EqSystem::Op::cnst;
      e.x = ej[1].get<int>();
      e.c = big_from_json(ej[2]);
      require(var_ok(e.x), Errc::invalid_argument, "equation variable out of range");
    } else {
      fail(Errc::parse, "unknown equation op '" + op + "'");
    }
    s.eqs.push_back(std::move(e));
  }
  return s;
}

Json system_to_json(const EqSystem& s) {
  Json eqs = Json::array();
  for (const auto& e : s.eqs) {
    switch (e.op) {
      case EqSystem::Op::mul:
        eqs.push_back(Json::array({"mul", e.x, e.y, e.z}));
        break;
      case EqSystem::Op::add:
        eqs.push_back(Json::array({"add", e.x, e.y, e.z}));
        break;
      case EqSystem::Op::cnst:
        eqs.push_back(Json::array({"const", e.x, big_to_json(e.c)}));
        break;
    }
  }
  return Json{{"vars", s.vars}, {"inputs", s.inputs}, {"equations", eqs}};
}

EqSystem polynomial_to_system(const Polynomial& p, const BigInt& coeff_guard) {
  BigInt weight = 0;
  for (const auto& t : p.terms) weight += abs(t.coeff);
  require(weight <= coeff_guard, Errc::limit_exceeded,
          "coefficient weight exceeds the expansion guard");

  EqSystem s;
  s.inputs = p.vars;
  s.vars = p.vars;
  auto fresh = [&] { return s.vars++; };

  int zero = fresh();
  s.eqs.push_back(EqSystem::Eq{EqSystem::Op::cnst, zero, -1, -1, 0});
  int one = -1;

  int pos = zero, neg = zero;
  for (const auto& t : p.terms) {
    if (t.coeff == 0) continue;
    // monomial value: fold the variable factors with mul equations
    int mono = -1;
    for (int j = 0; j < p.vars; j++) {
      for (int rep = 0; rep < t.exps[static_cast<size_t>(j)]; rep++) {
        if (mono < 0) {
          mono = j;
        } else {
          int t2 = fresh();
          s.eqs.push_back(EqSystem::Eq{EqSystem::Op::mul, mono, j, t2, 0});
          mono = t2;
        }
      }
    }
    if (mono < 0) {
      if (one < 0) {
        one = fresh();
        s.eqs.push_back(EqSystem::Eq{EqSystem::Op::cnst, one, -1, -1, 1});
      }
      mono = one;
    }
    // |coeff| copies into the matching accumulator
    int& acc = t.coeff > 0 ? pos : neg;
    for (BigInt rep = 0; rep < abs(t.coeff); rep++) {
      int t2 = fresh();
      s.eqs.push_back(EqSystem::Eq{EqSystem::Op::add, acc, mono, t2, 0});
      acc = t2;
    }
  }
  // the root condition: positive part equals negative part
  s.eqs.push_back(EqSystem::Eq{EqSystem::Op::add, neg, zero, pos, 0});
  return s;
}

bool system_holds(const EqSystem& s, const IntVec& assign) {
  require(static_cast<int>(assign.size()) == s.vars, Errc::precondition,
          "assignment size mismatch");
  auto v = [&](int i) { return assign[static_cast<size_t>(i)]; };
  for (const auto& e : s.eqs) {
    switch (e.op) {
      case EqSystem::Op::mul:
        if (v(e.z) != v(e.x) * v(e.y)) return false;
        break;
      case EqSystem::Op::add:
        if (v(e.z) != v(e.x) + v(e.y)) return false;
        break;
      case EqSystem::Op::cnst:
        if (v(e.x) != e.c) return false;
        break;
    }
  }
  return true;
}

std::optional<IntVec> extend_solution(const EqSystem& s, const IntVec& inputs) {
  require(static_cast<int>(inputs.size()) == s.inputs, Errc::precondition, "input size mismatch");
  std::vector<bool> defined(static_cast<size_t>(s.vars), false);
  IntVec val(static_cast<size_t>(s.vars), 0);
  for (int i = 0; i < s.inputs; i++) {
    val[static_cast<size_t>(i)] = inputs[static_cast<size_t>(i)];
    defined[static_cast<size_t>(i)] = true;
  }
  auto settle = [&](int var, const BigInt& v) -> bool {
    if (defined[static_cast<size_t>(var)]) return val[static_cast<size_t>(var)] == v;
    defined[static_cast<size_t>(var)] = true;
    val[static_cast<size_t>(var)] = v;
    return true;
  };
  for (const auto& e : s.eqs) {
    if (e.op == EqSystem::Op::cnst) {
      if (!settle(e.x, e.c)) return std::nullopt;
      continue;
    }
    require(defined[static_cast<size_t>(e.x)] && defined[static_cast<size_t>(e.y)],
            Errc::precondition, "equation uses a variable before it is defined");
    BigInt rhs;
    if (e.op == EqSystem::Op::mul)
      rhs = val[static_cast<size_t>(e.x)] * val[static_cast<size_t>(e.y)];
    else
      rhs = val[static_cast<size_t>(e.x)] + val[static_cast<size_t>(e.y)];
    if (!settle(e.z, rhs)) return std::nullopt;
  }
  for (bool d : defined)
    require(d, Errc::precondition, "system leaves a variable undefined");
  return val;
}

Expression system_to_expression(const EqSystem& s) {
  require(!s.eqs.empty(), Errc::invalid_argument, "empty system");
  int heis_copies = 0, coords = 0;
  for (const auto& e : s.eqs) {
    if (e.op == EqSystem::Op::mul)
      heis_copies++;
    else
      coords++;
  }

  std::vector<GroupDesc> factors;
  for (int j = 0; j < heis_copies; j++) factors.push_back(GroupDesc::heis_ze(0));
  if (coords > 0) factors.push_back(GroupDesc::z(coords));
  GroupDesc group = factors.size() == 1 ? factors[0] : GroupDesc::product(std::move(factors));

  Expression e;
  e.group = group;
  e.vars = s.vars;
  e.integer_domain = false;
  e.target = identity(group);

  auto push_atom = [&](int letter, int var, int pos) {
    e.atom_elems.push_back(evaluate_word(group, {letter}));
    e.atom_vars.push_back(var);
    e.positions.push_back(pos);
  };

  int copy = 0, coord = 0;
  const int coord_base = 3 * heis_copies;
  for (const auto& eq : s.eqs) {
    if (eq.op == EqSystem::Op::mul) {
      // y^x x^y y^-x x^-y z^z evaluates to (0, 0, z - x*y) in this copy
      int gx = 3 * copy + 1, gy = 3 * copy + 2, gz = 3 * copy + 3;
      push_atom(gy, eq.x, 0);
      push_atom(gx, eq.y, 1);
      push_atom(-gy, eq.x, 2);
      push_atom(-gx, eq.y, 3);
      push_atom(gz, eq.z, 0);
      copy++;
    } else if (eq.op == EqSystem::Op::add) {
      int g = coord_base + coord + 1;
      push_atom(g, eq.x, 0);
      push_atom(g, eq.y, 0);
      push_atom(-g, eq.z, 0);
      coord++;
    } else {
      int g = coord_base + coord + 1;
      push_atom(g, eq.x, 0);
      e.target = mul(e.target, elem_pow(evaluate_word(group, {g}), eq.c));
      coord++;
    }
  }
  return e;
}

GroupElement eval_expression(const Expression& e, const IntVec& assign) {
  require(static_cast<int>(assign.size()) == e.vars, Errc::precondition,
          "assignment size mismatch");
  GroupElement acc = identity(e.group);
  for (size_t i = 0; i < e.atom_elems.size(); i++)
    acc = mul(acc, elem_pow(e.atom_elems[i], assign[static_cast<size_t>(e.atom_vars[i])]));
  return acc;
}

std::optional<IntVec> expression_bounded_solve(const Expression& e, long box,
                                               std::size_t max_points) {
  require(box >= 0, Errc::precondition, "negative box");
  const long lo = e.integer_domain ? -box : 0;
  const long width = box - lo + 1;
  double points = 1;
  for (int i = 0; i < e.vars; i++) points *= static_cast<double>(width);
  require(points <= static_cast<double>(max_points), Errc::limit_exceeded,
          "assignment box too large to enumerate");

  IntVec assign(static_cast<size_t>(e.vars), BigInt(lo));
  for (;;) {
    if (eq(eval_expression(e, assign), e.target)) return assign;
    int i = 0;
    while (i < e.vars && assign[static_cast<size_t>(i)] == box) {
      assign[static_cast<size_t>(i)] = lo;
      i++;
    }
    if (i == e.vars) return std::nullopt;
    assign[static_cast<size_t>(i)] += 1;
  }
}

KnapsackInstance expression_to_knapsack(const Expression& e) {
  const int k = static_cast<int>(e.atom_elems.size());
  require(k > 0, Errc::invalid_argument, "expression has no atoms");
  GroupDesc ext = extended_group(e.group, k);

  KnapsackInstance inst;
  inst.group = ext;
  inst.integer_exponents = e.integer_domain;
  for (int v = 0; v < e.vars; v++) {
    IntVec tail(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; i++)
      if (e.atom_vars[static_cast<size_t>(i)] == v) tail[static_cast<size_t>(i)] = 1;
    inst.items.push_back(extend_element(ext, identity(e.group), tail));
  }
  for (int i = 0; i < k; i++) {
    IntVec tail(static_cast<size_t>(k), 0);
    tail[static_cast<size_t>(i)] = -1;
    inst.items.push_back(extend_element(ext, e.atom_elems[static_cast<size_t>(i)], tail));
  }
  inst.target = extend_element(ext, e.target, IntVec(static_cast<size_t>(k), 0));
  return inst;
}

IntVec expression_to_knapsack_exponents(const Expression& e, const IntVec& assign) {
  require(static_cast<int>(assign.size()) == e.vars, Errc::precondition,
          "assignment size mismatch");
  IntVec exps = assign;
  for (int v : e.atom_vars) exps.push_back(assign[static_cast<size_t>(v)]);
  return exps;
}

FourSubgroups knapsack_to_four_subgroups(const Expression& e) {
  const int k = static_cast<int>(e.atom_elems.size());
  require(k > 0, Errc::invalid_argument, "expression has no atoms");
  GroupDesc ext = extended_group(e.group, k);

  FourSubgroups f;
  f.group = ext;
  for (int v = 0; v < e.vars; v++) {
    IntVec tail(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; i++)
      if (e.atom_vars[static_cast<size_t>(i)] == v) tail[static_cast<size_t>(i)] = 1;
    f.generators[0].push_back(extend_element(ext, identity(e.group), tail));
  }
  for (int i = 0; i < k; i++) {
    int pos = e.positions[static_cast<size_t>(i)];
    require(pos >= 0 && pos < 4, Errc::invalid_argument, "block position out of range");
    IntVec tail(static_cast<size_t>(k), 0);
    tail[static_cast<size_t>(i)] = -1;
    f.generators[static_cast<size_t>(pos)].push_back(
        extend_element(ext, e.atom_elems[static_cast<size_t>(i)], tail));
  }
  f.target = extend_element(ext, e.target, IntVec(static_cast<size_t>(k), 0));

  for (const auto& gens : f.generators)
    for (size_t a = 0; a < gens.size(); a++)
      for (size_t b = a + 1; b < gens.size(); b++)
        require(eq(mul(gens[a], gens[b]), mul(gens[b], gens[a])), Errc::precondition,
                "subgroup generators must commute");
  return f;
}

std::optional<IntVec> bounded_product_membership(const FourSubgroups& f, long box,
                                                 std::size_t max_points) {
  require(box >= 0, Errc::precondition, "negative box");
  std::vector<GroupElement> gens;
  for (const auto& part : f.generators) gens.insert(gens.end(), part.begin(), part.end());
  const size_t g = gens.size();
  if (g == 0) return is_identity(f.target) ? std::make_optional(IntVec{}) : std::nullopt;

  const long width = 2 * box + 1;
  double points = 1;
  for (size_t i = 0; i < g; i++) points *= static_cast<double>(width);
  require(points <= static_cast<double>(max_points), Errc::limit_exceeded,
          "exponent box too large to enumerate");

  IntVec exps(g, BigInt(-box));
  for (;;) {
    GroupElement acc = identity(f.group);
    for (size_t i = 0; i < g; i++) acc = mul(acc, elem_pow(gens[i], exps[i]));
    if (eq(acc, f.target)) return exps;
    size_t i = 0;
    while (i < g && exps[i] == box) {
      exps[i] = -box;
      i++;
    }
    if (i == g) return std::nullopt;
    exps[i] += 1;
  }
}

Expression expression_from_json(const Json& j) {
  require(j.is_object() && j.contains("group") && j.contains("atoms") && j.contains("target") &&
              j.contains("vars"),
          Errc::parse, "expression wants {group, atoms, target, vars}");
  Expression e;
  e.group = desc_from_json(j.at("group"));
  e.vars = j.at("vars").get<int>();
  require(e.vars >= 0, Errc::invalid_argument, "negative variable count");
  if (j.contains("domain")) {
    std::string d = j.at("domain").get<std::string>();
    require(d == "nat" || d == "int", Errc::parse, "domain is 'nat' or 'int'");
    e.integer_domain = d == "int";
  }
  require(j.at("atoms").is_array(), Errc::parse, "atoms must be an array");
  for (const auto& aj : j.at("atoms")) {
    require(aj.is_array() && aj.size() == 3, Errc::parse, "atom wants [element, var, pos]");
    e.atom_elems.push_back(elem_from_json(e.group, aj[0]));
    int var = aj[1].get<int>();
    int pos = aj[2].get<int>();
    require(var >= 0 && var < e.vars, Errc::invalid_argument, "atom variable out of range");
    require(pos >= 0 && pos < 4, Errc::invalid_argument, "atom position out of range");
    e.atom_vars.push_back(var);
    e.positions.push_back(pos);
  }
  e.target = elem_from_json(e.group, j.at("target"));
  return e;
}

Json expression_to_json(const Expression& e) {
  Json atoms = Json::array();
  for (size_t i = 0; i < e.atom_elems.size(); i++)
    atoms.push_back(Json::array({elem_to_json(e.atom_elems[i]), e.atom_vars[i], e.positions[i]}));
  return Json{{"group", desc_to_json(e.group)},
              {"atoms", atoms},
              {"target", elem_to_json(e.target)},
              {"vars", e.vars},
              {"domain", e.integer_domain ? "int" : "nat"}};
}

}  // namespace gp
