#include "grouppack/parikh.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace gp {

namespace {

// Hash-consed commutative regular expressions over semilinear constants.
// The empty language is the nullary sum; the nullary product is {0}.
enum class Kind { kConst, kVar, kSum, kProd, kStar };

struct Node {
  Kind kind = Kind::kConst;
  int var = -1;
  SemilinearSet set;
  std::vector<int> kids;
};

struct Builder {
  int k = 0;
  SolveLimits lim;
  std::vector<Node> nodes;
  std::map<std::string, int> const_memo;
  std::map<int, int> var_memo;
  std::map<std::pair<int, std::vector<int>>, int> op_memo;
  std::map<std::pair<int, int>, int> deriv_memo;
  std::map<std::tuple<int, int, int>, int> subst_memo;
  int empty_id = -1;

  int add(Node n) {
    require(nodes.size() < 1000000, Errc::limit_exceeded,
            "parikh_image: expression too large");
    nodes.push_back(std::move(n));
    return (int)nodes.size() - 1;
  }

  bool is_const(int id) const { return nodes[id].kind == Kind::kConst; }

  int mk_empty() {
    if (empty_id < 0) {
      Node n;
      n.kind = Kind::kSum;
      empty_id = add(std::move(n));
    }
    return empty_id;
  }

  int mk_const(SemilinearSet s) {
    std::string key = semilinear_to_json(s).dump();
    auto it = const_memo.find(key);
    if (it != const_memo.end()) return it->second;
    Node n;
    n.kind = Kind::kConst;
    n.set = std::move(s);
    int id = add(std::move(n));
    const_memo[key] = id;
    return id;
  }

  int mk_eps() { return mk_const(semilinear_singleton(IntVec(k, BigInt(0)))); }

  int mk_var(int v) {
    auto it = var_memo.find(v);
    if (it != var_memo.end()) return it->second;
    Node n;
    n.kind = Kind::kVar;
    n.var = v;
    int id = add(std::move(n));
    var_memo[v] = id;
    return id;
  }

  int mk_op(Kind kind, std::vector<int> kids) {
    auto key = std::make_pair((int)kind, kids);
    auto it = op_memo.find(key);
    if (it != op_memo.end()) return it->second;
    Node n;
    n.kind = kind;
    n.kids = kids;
    int id = add(std::move(n));
    op_memo[std::move(key)] = id;
    return id;
  }

  int mk_sum(const std::vector<int>& children) {
    std::vector<int> flat;
    std::vector<const SemilinearSet*> consts;
    for (int c : children) {
      if (c == empty_id) continue;
      if (nodes[c].kind == Kind::kSum) {
        for (int cc : nodes[c].kids) {
          if (is_const(cc))
            consts.push_back(&nodes[cc].set);
          else
            flat.push_back(cc);
        }
      } else if (is_const(c)) {
        consts.push_back(&nodes[c].set);
      } else {
        flat.push_back(c);
      }
    }
    if (!consts.empty()) {
      SemilinearSet acc = *consts[0];
      for (size_t i = 1; i < consts.size(); i++)
        acc = semilinear_union(acc, *consts[i]);
      acc = semilinear_simplify(acc, lim);
      if (!acc.components.empty()) flat.push_back(mk_const(std::move(acc)));
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return mk_empty();
    if (flat.size() == 1) return flat[0];
    return mk_op(Kind::kSum, std::move(flat));
  }

  int mk_prod(const std::vector<int>& children) {
    std::vector<int> flat;
    std::vector<const SemilinearSet*> consts;
    for (int c : children) {
      if (c == empty_id) return mk_empty();
      if (nodes[c].kind == Kind::kProd) {
        for (int cc : nodes[c].kids) {
          if (is_const(cc))
            consts.push_back(&nodes[cc].set);
          else
            flat.push_back(cc);
        }
      } else if (is_const(c)) {
        consts.push_back(&nodes[c].set);
      } else {
        flat.push_back(c);
      }
    }
    if (!consts.empty()) {
      SemilinearSet acc = *consts[0];
      for (size_t i = 1; i < consts.size(); i++)
        acc = semilinear_sum(acc, *consts[i]);
      acc = semilinear_simplify(acc, lim);
      if (acc.components.empty()) return mk_empty();
      bool is_zero = acc.components.size() == 1 &&
                     acc.components[0].periods.empty() &&
                     std::all_of(acc.components[0].base.begin(),
                                 acc.components[0].base.end(),
                                 [](const BigInt& x) { return x == 0; });
      if (!is_zero || flat.empty()) flat.push_back(mk_const(std::move(acc)));
    }
    std::sort(flat.begin(), flat.end());
    if (flat.empty()) return mk_eps();
    if (flat.size() == 1) return flat[0];
    return mk_op(Kind::kProd, std::move(flat));
  }

  int mk_star(int c) {
    if (c == empty_id) return mk_eps();
    if (is_const(c))
      return mk_const(semilinear_simplify(semilinear_star(nodes[c].set, lim), lim));
    if (nodes[c].kind == Kind::kStar) return c;
    return mk_op(Kind::kStar, {c});
  }

  int derive(int id, int var) {
    auto key = std::make_pair(id, var);
    auto it = deriv_memo.find(key);
    if (it != deriv_memo.end()) return it->second;
    const Node n = nodes[id];
    int out = mk_empty();
    switch (n.kind) {
      case Kind::kConst:
        break;
      case Kind::kVar:
        out = n.var == var ? mk_eps() : mk_empty();
        break;
      case Kind::kSum: {
        std::vector<int> parts;
        for (int c : n.kids) parts.push_back(derive(c, var));
        out = mk_sum(parts);
        break;
      }
      case Kind::kProd: {
        std::vector<int> parts;
        for (size_t i = 0; i < n.kids.size(); i++) {
          std::vector<int> factors = n.kids;
          factors[i] = derive(n.kids[i], var);
          parts.push_back(mk_prod(factors));
        }
        out = mk_sum(parts);
        break;
      }
      case Kind::kStar:
        out = mk_prod({derive(n.kids[0], var), id});
        break;
    }
    deriv_memo[key] = out;
    return out;
  }

  int subst(int id, int var, int repl) {
    auto key = std::make_tuple(id, var, repl);
    auto it = subst_memo.find(key);
    if (it != subst_memo.end()) return it->second;
    const Node n = nodes[id];
    int out = id;
    switch (n.kind) {
      case Kind::kConst:
        break;
      case Kind::kVar:
        if (n.var == var) out = repl;
        break;
      case Kind::kSum: {
        std::vector<int> parts;
        for (int c : n.kids) parts.push_back(subst(c, var, repl));
        out = mk_sum(parts);
        break;
      }
      case Kind::kProd: {
        std::vector<int> parts;
        for (int c : n.kids) parts.push_back(subst(c, var, repl));
        out = mk_prod(parts);
        break;
      }
      case Kind::kStar:
        out = mk_star(subst(n.kids[0], var, repl));
        break;
    }
    subst_memo[key] = out;
    return out;
  }

  // Least solution of X = p(X) with other variables as parameters.
  int solve_fixpoint(int var, int p) {
    int p0 = subst(p, var, mk_empty());
    int dp = derive(p, var);
    int dp0 = subst(dp, var, p0);
    return mk_prod({p0, mk_star(dp0)});
  }

  void collect_vars(int id, std::set<int>& out, std::set<int>& seen) {
    if (!seen.insert(id).second) return;
    const Node& n = nodes[id];
    if (n.kind == Kind::kVar) out.insert(n.var);
    for (int c : n.kids) collect_vars(c, out, seen);
  }
};

}  // namespace

SemilinearSet parikh_image(const Grammar& g, const SolveLimits& lim) {
  validate_grammar(g);
  int k = (int)g.terminals.size();
  Grammar r = cfg_reduce(g);
  if (r.productions.empty()) return semilinear_empty(k);

  Builder b;
  b.k = k;
  b.lim = lim;
  b.mk_empty();

  std::map<std::string, int> ntid;
  for (const auto& n : r.nonterminals) ntid[n] = (int)ntid.size();
  std::map<std::string, int> tid;
  for (int i = 0; i < k; i++) tid[g.terminals[i]] = i;
  int n = (int)r.nonterminals.size();

  std::vector<int> eq(n);
  {
    std::vector<std::vector<int>> alts(n);
    for (const auto& p : r.productions) {
      std::vector<int> factors;
      for (const auto& s : p.rhs) {
        auto it = ntid.find(s);
        if (it != ntid.end()) {
          factors.push_back(b.mk_var(it->second));
        } else {
          IntVec unit(k, BigInt(0));
          unit[tid.at(s)] = 1;
          factors.push_back(b.mk_const(semilinear_singleton(unit)));
        }
      }
      alts[ntid.at(p.lhs)].push_back(b.mk_prod(factors));
    }
    for (int i = 0; i < n; i++) eq[i] = b.mk_sum(alts[i]);
  }

  // Dependency graph and strongly connected components (iterative Tarjan).
  std::vector<std::vector<int>> dep(n);
  for (int i = 0; i < n; i++) {
    std::set<int> vars, seen;
    b.collect_vars(eq[i], vars, seen);
    dep[i].assign(vars.begin(), vars.end());
  }
  std::vector<int> comp(n, -1), low(n), num(n, -1), stk;
  std::vector<char> on(n, 0);
  int counter = 0, ncomp = 0;
  std::vector<std::pair<int, size_t>> frame;
  for (int root = 0; root < n; root++) {
    if (num[root] >= 0) continue;
    frame.push_back({root, 0});
    while (!frame.empty()) {
      auto& [v, idx] = frame.back();
      if (idx == 0) {
        num[v] = low[v] = counter++;
        stk.push_back(v);
        on[v] = 1;
      }
      if (idx < dep[v].size()) {
        int w = dep[v][idx++];
        if (num[w] < 0)
          frame.push_back({w, 0});
        else if (on[w])
          low[v] = std::min(low[v], num[w]);
      } else {
        if (low[v] == num[v]) {
          while (true) {
            int w = stk.back();
            stk.pop_back();
            on[w] = 0;
            comp[w] = ncomp;
            if (w == v) break;
          }
          ncomp++;
        }
        int done = v;
        frame.pop_back();
        if (!frame.empty())
          low[frame.back().first] =
              std::min(low[frame.back().first], low[done]);
      }
    }
  }
  // Tarjan emits components in reverse topological order: dependencies of a
  // component always lie in components numbered before it.
  std::vector<std::vector<int>> members(ncomp);
  for (int i = 0; i < n; i++) members[comp[i]].push_back(i);

  std::vector<int> solution(n, -1);
  for (int c = 0; c < ncomp; c++) {
    std::vector<int>& vs = members[c];
    // Bring in solutions from earlier components.
    std::vector<int> local(vs.size());
    for (size_t i = 0; i < vs.size(); i++) {
      int e = eq[vs[i]];
      std::set<int> vars, seen;
      b.collect_vars(e, vars, seen);
      for (int v : vars)
        if (comp[v] != c) e = b.subst(e, v, solution[v]);
      local[i] = e;
    }
    // Eliminate variables back to front, then back-substitute.
    std::vector<int> closed(vs.size());
    for (int j = (int)vs.size() - 1; j >= 1; j--) {
      closed[j] = b.solve_fixpoint(vs[j], local[j]);
      for (int i = 0; i < j; i++)
        local[i] = b.subst(local[i], vs[j], closed[j]);
    }
    closed[0] = b.solve_fixpoint(vs[0], local[0]);
    solution[vs[0]] = closed[0];
    for (size_t j = 1; j < vs.size(); j++) {
      int s = closed[j];
      for (size_t i = 0; i < j; i++) s = b.subst(s, vs[i], solution[vs[i]]);
      solution[vs[j]] = s;
    }
  }

  int root = solution[ntid.at(r.start)];
  if (root == b.empty_id) return semilinear_empty(k);
  require(b.is_const(root), Errc::limit_exceeded,
          "parikh_image: solution failed to close");
  return semilinear_simplify(b.nodes[root].set, lim);
}

}  // namespace gp
