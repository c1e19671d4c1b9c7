#include "grouppack/grammar.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace gp {

namespace {

using Word = std::vector<std::string>;
using WordSet = std::set<Word>;

std::set<std::string> symbol_set(const Grammar& g) {
  std::set<std::string> s(g.nonterminals.begin(), g.nonterminals.end());
  s.insert(g.terminals.begin(), g.terminals.end());
  return s;
}

std::string fresh_name(const std::string& base, std::set<std::string>& used) {
  std::string name = base;
  int i = 0;
  while (used.count(name)) name = base + "_" + std::to_string(i++);
  used.insert(name);
  return name;
}

// Nullable nonterminals of a grammar with right sides of any length.
std::set<std::string> nullable_set(const Grammar& g) {
  std::set<std::string> nul;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : g.productions) {
      if (nul.count(p.lhs)) continue;
      bool all = true;
      for (const auto& s : p.rhs)
        if (!nul.count(s)) {
          all = false;
          break;
        }
      if (all) {
        nul.insert(p.lhs);
        changed = true;
      }
    }
  }
  return nul;
}

void dedupe_productions(Grammar& g) {
  std::set<std::pair<std::string, Word>> seen;
  std::vector<Grammar::Production> out;
  for (auto& p : g.productions)
    if (seen.insert({p.lhs, p.rhs}).second) out.push_back(p);
  g.productions = std::move(out);
}

// Binarized grammar with epsilon productions expanded away; second member
// reports whether the empty word was in the language.
std::pair<Grammar, bool> epsilon_free(const Grammar& g) {
  Grammar gb = cfg_binarize(g);
  std::set<std::string> nul = nullable_set(gb);
  Grammar out = gb;
  out.productions.clear();
  for (const auto& p : gb.productions) {
    if (p.rhs.empty()) continue;
    out.productions.push_back(p);
    if (p.rhs.size() == 2) {
      if (nul.count(p.rhs[0])) out.productions.push_back({p.lhs, {p.rhs[1]}});
      if (nul.count(p.rhs[1])) out.productions.push_back({p.lhs, {p.rhs[0]}});
    }
  }
  dedupe_productions(out);
  return {out, nul.count(gb.start) != 0};
}

// Internal binary-rule normal form for parsing. Nonterminals are dense ids;
// rules are either A -> B C or A -> t (t a terminal id).
struct ChartGrammar {
  int symbols = 0;
  int start = 0;
  bool start_nullable = false;
  std::vector<std::tuple<int, int, int>> binary;  // lhs, left, right
  std::vector<std::pair<int, int>> lexical;       // lhs, terminal id
};

ChartGrammar to_chart_form(const Grammar& g,
                           const std::map<std::string, int>& tid) {
  std::map<std::string, int> ntid;
  for (const auto& n : g.nonterminals) ntid[n] = (int)ntid.size();
  int next = (int)ntid.size();

  // Encode terminals as negative: terminal t -> -1 - tid(t).
  struct P {
    int lhs;
    std::vector<int> rhs;
  };
  std::vector<P> prods;
  int start0 = next++;
  prods.push_back({start0, {ntid.at(g.start)}});
  for (const auto& p : g.productions) {
    P q;
    q.lhs = ntid.at(p.lhs);
    for (const auto& s : p.rhs) {
      auto it = ntid.find(s);
      if (it != ntid.end())
        q.rhs.push_back(it->second);
      else
        q.rhs.push_back(-1 - tid.at(s));
    }
    prods.push_back(std::move(q));
  }

  // Lift terminals occurring in long right sides.
  std::map<int, int> lift;
  std::vector<P> added;
  for (auto& p : prods) {
    if (p.rhs.size() < 2) continue;
    for (int& s : p.rhs) {
      if (s >= 0) continue;
      auto it = lift.find(s);
      if (it == lift.end()) {
        it = lift.insert({s, next++}).first;
        added.push_back({it->second, {s}});
      }
      s = it->second;
    }
  }
  prods.insert(prods.end(), added.begin(), added.end());

  // Split long right sides.
  std::vector<P> bin;
  for (auto& p : prods) {
    if (p.rhs.size() <= 2) {
      bin.push_back(p);
      continue;
    }
    int prev = p.lhs;
    for (size_t i = 0; i + 2 < p.rhs.size(); i++) {
      int nn = next++;
      bin.push_back({prev, {p.rhs[i], nn}});
      prev = nn;
    }
    bin.push_back({prev, {p.rhs[p.rhs.size() - 2], p.rhs.back()}});
  }

  // Epsilon removal.
  std::vector<char> nullable(next, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& p : bin) {
      if (nullable[p.lhs]) continue;
      bool all = true;
      for (int s : p.rhs)
        if (s < 0 || !nullable[s]) {
          all = false;
          break;
        }
      if (all) {
        nullable[p.lhs] = 1;
        changed = true;
      }
    }
  }
  std::vector<P> nf;
  for (auto& p : bin) {
    if (p.rhs.empty()) continue;
    nf.push_back(p);
    if (p.rhs.size() == 2) {
      if (p.rhs[0] >= 0 && nullable[p.rhs[0]]) nf.push_back({p.lhs, {p.rhs[1]}});
      if (p.rhs[1] >= 0 && nullable[p.rhs[1]]) nf.push_back({p.lhs, {p.rhs[0]}});
    }
  }

  // Unit closure.
  std::vector<std::set<int>> unit(next);
  for (int i = 0; i < next; i++) unit[i].insert(i);
  changed = true;
  while (changed) {
    changed = false;
    for (auto& p : nf) {
      if (p.rhs.size() != 1 || p.rhs[0] < 0) continue;
      for (int a = 0; a < next; a++) {
        if (!unit[a].count(p.lhs)) continue;
        if (unit[a].insert(p.rhs[0]).second) changed = true;
      }
    }
  }

  ChartGrammar cg;
  cg.symbols = next;
  cg.start = start0;
  cg.start_nullable = nullable[start0] != 0;
  std::set<std::tuple<int, int, int>> bseen;
  std::set<std::pair<int, int>> lseen;
  for (int a = 0; a < next; a++) {
    for (int b : unit[a]) {
      for (auto& p : nf) {
        if (p.lhs != b) continue;
        if (p.rhs.size() == 2) {
          if (bseen.insert({a, p.rhs[0], p.rhs[1]}).second)
            cg.binary.push_back({a, p.rhs[0], p.rhs[1]});
        } else if (p.rhs[0] < 0) {
          if (lseen.insert({a, -1 - p.rhs[0]}).second)
            cg.lexical.push_back({a, -1 - p.rhs[0]});
        }
      }
    }
  }
  return cg;
}

}  // namespace

Grammar grammar_from_json(const Json& j) {
  require(j.is_object(), Errc::parse, "grammar: expected object");
  for (auto& [k, v] : j.items()) {
    (void)v;
    require(k == "nonterminals" || k == "terminals" || k == "start" ||
                k == "productions",
            Errc::parse, "grammar: unknown key " + k);
  }
  require(j.contains("nonterminals") && j.contains("terminals") &&
              j.contains("start") && j.contains("productions"),
          Errc::parse, "grammar: missing key");
  Grammar g;
  require(j["nonterminals"].is_array() && j["terminals"].is_array(),
          Errc::parse, "grammar: symbol lists must be arrays");
  for (auto& s : j["nonterminals"]) {
    require(s.is_string(), Errc::parse, "grammar: nonterminal must be string");
    g.nonterminals.push_back(s.get<std::string>());
  }
  for (auto& s : j["terminals"]) {
    require(s.is_string(), Errc::parse, "grammar: terminal must be string");
    g.terminals.push_back(s.get<std::string>());
  }
  require(j["start"].is_string(), Errc::parse, "grammar: start must be string");
  g.start = j["start"].get<std::string>();
  require(j["productions"].is_array(), Errc::parse,
          "grammar: productions must be an array");
  for (auto& p : j["productions"]) {
    require(p.is_array() && p.size() == 2 && p[0].is_string() &&
                p[1].is_array(),
            Errc::parse, "grammar: production must be [lhs, [rhs...]]");
    Grammar::Production q;
    q.lhs = p[0].get<std::string>();
    for (auto& s : p[1]) {
      require(s.is_string(), Errc::parse,
              "grammar: production symbol must be string");
      q.rhs.push_back(s.get<std::string>());
    }
    g.productions.push_back(std::move(q));
  }
  validate_grammar(g);
  return g;
}

Json grammar_to_json(const Grammar& g) {
  Json j;
  j["nonterminals"] = g.nonterminals;
  j["terminals"] = g.terminals;
  j["start"] = g.start;
  Json ps = Json::array();
  for (const auto& p : g.productions) ps.push_back(Json::array({p.lhs, p.rhs}));
  j["productions"] = ps;
  return j;
}

void validate_grammar(const Grammar& g) {
  std::set<std::string> nt, t;
  for (const auto& s : g.nonterminals) {
    require(!s.empty(), Errc::invalid_argument, "grammar: empty symbol name");
    require(nt.insert(s).second, Errc::invalid_argument,
            "grammar: duplicate nonterminal " + s);
  }
  for (const auto& s : g.terminals) {
    require(!s.empty(), Errc::invalid_argument, "grammar: empty symbol name");
    require(t.insert(s).second, Errc::invalid_argument,
            "grammar: duplicate terminal " + s);
    require(!nt.count(s), Errc::invalid_argument,
            "grammar: symbol is both nonterminal and terminal: " + s);
  }
  require(nt.count(g.start) != 0, Errc::invalid_argument,
          "grammar: start symbol not a nonterminal");
  for (const auto& p : g.productions) {
    require(nt.count(p.lhs) != 0, Errc::invalid_argument,
            "grammar: production left side not a nonterminal: " + p.lhs);
    for (const auto& s : p.rhs)
      require(nt.count(s) || t.count(s), Errc::invalid_argument,
              "grammar: unknown symbol in production: " + s);
  }
}

std::vector<std::vector<std::string>> words_up_to(const Grammar& g,
                                                  int maxlen) {
  validate_grammar(g);
  require(maxlen >= 0, Errc::invalid_argument, "words_up_to: negative bound");
  std::set<std::string> term(g.terminals.begin(), g.terminals.end());
  std::map<std::string, WordSet> sets;
  for (const auto& n : g.nonterminals) sets[n];
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : g.productions) {
      WordSet acc;
      acc.insert(Word{});
      for (const auto& sym : p.rhs) {
        WordSet next;
        if (term.count(sym)) {
          for (const auto& u : acc)
            if ((int)u.size() + 1 <= maxlen) {
              Word w = u;
              w.push_back(sym);
              next.insert(std::move(w));
            }
        } else {
          for (const auto& u : acc)
            for (const auto& v : sets[sym])
              if ((int)(u.size() + v.size()) <= maxlen) {
                Word w = u;
                w.insert(w.end(), v.begin(), v.end());
                next.insert(std::move(w));
              }
        }
        acc = std::move(next);
        if (acc.empty()) break;
      }
      if (acc.empty()) continue;
      WordSet& dst = sets[p.lhs];
      for (const auto& w : acc)
        if (dst.insert(w).second) changed = true;
    }
  }
  const WordSet& s = sets[g.start];
  return std::vector<Word>(s.begin(), s.end());
}

bool cfg_member(const Grammar& g, const std::vector<std::string>& word) {
  validate_grammar(g);
  std::map<std::string, int> tid;
  for (const auto& t : g.terminals) tid[t] = (int)tid.size();
  for (const auto& a : word)
    require(tid.count(a) != 0, Errc::invalid_argument,
            "cfg_member: word uses unknown terminal " + a);
  ChartGrammar cg = to_chart_form(g, tid);
  int m = (int)word.size();
  if (m == 0) return cg.start_nullable;
  // table[i][l] = symbols deriving word[i, i+l)
  std::vector<std::vector<std::set<int>>> table(
      m, std::vector<std::set<int>>(m + 1));
  for (int i = 0; i < m; i++) {
    int t = tid.at(word[i]);
    for (auto& [a, u] : cg.lexical)
      if (u == t) table[i][1].insert(a);
  }
  for (int l = 2; l <= m; l++)
    for (int i = 0; i + l <= m; i++)
      for (int s = 1; s < l; s++)
        for (auto& [a, b, c] : cg.binary)
          if (table[i][s].count(b) && table[i + s][l - s].count(c))
            table[i][l].insert(a);
  return table[0][m].count(cg.start) != 0;
}

Grammar cfg_binarize(const Grammar& g) {
  validate_grammar(g);
  Grammar out = g;
  out.productions.clear();
  std::set<std::string> used = symbol_set(g);
  for (const auto& p : g.productions) {
    if (p.rhs.size() <= 2) {
      out.productions.push_back(p);
      continue;
    }
    std::string prev = p.lhs;
    for (size_t i = 0; i + 2 < p.rhs.size(); i++) {
      std::string nn = fresh_name(p.lhs + ".", used);
      out.nonterminals.push_back(nn);
      out.productions.push_back({prev, {p.rhs[i], nn}});
      prev = nn;
    }
    out.productions.push_back({prev, {p.rhs[p.rhs.size() - 2], p.rhs.back()}});
  }
  return out;
}

Grammar cfg_reduce(const Grammar& g) {
  validate_grammar(g);
  std::set<std::string> term(g.terminals.begin(), g.terminals.end());
  std::set<std::string> gen;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : g.productions) {
      if (gen.count(p.lhs)) continue;
      bool all = true;
      for (const auto& s : p.rhs)
        if (!term.count(s) && !gen.count(s)) {
          all = false;
          break;
        }
      if (all) {
        gen.insert(p.lhs);
        changed = true;
      }
    }
  }
  Grammar out;
  out.terminals = g.terminals;
  out.start = g.start;
  if (!gen.count(g.start)) {
    out.nonterminals = {g.start};
    return out;
  }
  std::vector<Grammar::Production> kept;
  for (const auto& p : g.productions) {
    if (!gen.count(p.lhs)) continue;
    bool all = true;
    for (const auto& s : p.rhs)
      if (!term.count(s) && !gen.count(s)) {
        all = false;
        break;
      }
    if (all) kept.push_back(p);
  }
  std::set<std::string> reach = {g.start};
  changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : kept) {
      if (!reach.count(p.lhs)) continue;
      for (const auto& s : p.rhs)
        if (!term.count(s) && reach.insert(s).second) changed = true;
    }
  }
  for (const auto& n : g.nonterminals)
    if (reach.count(n)) out.nonterminals.push_back(n);
  for (const auto& p : kept)
    if (reach.count(p.lhs)) out.productions.push_back(p);
  dedupe_productions(out);
  return out;
}

Grammar cfg_union(const Grammar& a, const Grammar& b) {
  validate_grammar(a);
  validate_grammar(b);
  Grammar out;
  out.terminals = a.terminals;
  std::set<std::string> tset(a.terminals.begin(), a.terminals.end());
  for (const auto& t : b.terminals)
    if (tset.insert(t).second) out.terminals.push_back(t);
  std::set<std::string> used = tset;
  auto rename_in = [&](const Grammar& g) {
    std::map<std::string, std::string> m;
    for (const auto& n : g.nonterminals) {
      std::string nn = fresh_name(n, used);
      m[n] = nn;
      out.nonterminals.push_back(nn);
    }
    for (const auto& p : g.productions) {
      Grammar::Production q;
      q.lhs = m.at(p.lhs);
      for (const auto& s : p.rhs)
        q.rhs.push_back(tset.count(s) ? s : m.at(s));
      out.productions.push_back(std::move(q));
    }
    return m.at(g.start);
  };
  std::string sa = rename_in(a);
  std::string sb = rename_in(b);
  out.start = fresh_name("S", used);
  out.nonterminals.insert(out.nonterminals.begin(), out.start);
  out.productions.push_back({out.start, {sa}});
  out.productions.push_back({out.start, {sb}});
  return out;
}

FreeMonoidHom hom_from_json(const Json& j) {
  require(j.is_object(), Errc::parse, "hom: expected object");
  FreeMonoidHom h;
  for (auto& [k, v] : j.items()) {
    require(!k.empty(), Errc::parse, "hom: empty letter name");
    require(v.is_array(), Errc::parse, "hom: image must be an array");
    Word img;
    for (auto& s : v) {
      require(s.is_string(), Errc::parse, "hom: image letter must be string");
      img.push_back(s.get<std::string>());
    }
    h.images[k] = std::move(img);
  }
  return h;
}

Json hom_to_json(const FreeMonoidHom& h) {
  Json j = Json::object();
  for (const auto& [k, v] : h.images) j[k] = v;
  return j;
}

std::vector<std::string> hom_apply(const FreeMonoidHom& h,
                                   const std::vector<std::string>& w) {
  Word out;
  for (const auto& a : w) {
    auto it = h.images.find(a);
    require(it != h.images.end(), Errc::invalid_argument,
            "hom_apply: letter without image: " + a);
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

Grammar cfg_image(const Grammar& g, const FreeMonoidHom& h,
                  const std::optional<std::vector<std::string>>& out_terminals) {
  validate_grammar(g);
  for (const auto& t : g.terminals)
    require(h.images.count(t) != 0, Errc::invalid_argument,
            "cfg_image: terminal without image: " + t);
  std::vector<std::string> letters;
  std::set<std::string> lset;
  for (const auto& t : g.terminals)
    for (const auto& a : h.images.at(t))
      if (lset.insert(a).second) letters.push_back(a);
  if (out_terminals) {
    std::set<std::string> given;
    for (const auto& a : *out_terminals)
      require(given.insert(a).second, Errc::invalid_argument,
              "cfg_image: duplicate output terminal " + a);
    for (const auto& a : letters)
      require(given.count(a) != 0, Errc::invalid_argument,
              "cfg_image: output terminals miss image letter " + a);
    letters = *out_terminals;
    lset = given;
  }
  Grammar out;
  out.terminals = letters;
  std::set<std::string> used = lset;
  std::map<std::string, std::string> ntmap;
  for (const auto& n : g.nonterminals) {
    std::string nn = fresh_name(n, used);
    ntmap[n] = nn;
    out.nonterminals.push_back(nn);
  }
  out.start = ntmap.at(g.start);
  std::set<std::string> src_term(g.terminals.begin(), g.terminals.end());
  for (const auto& p : g.productions) {
    Grammar::Production q;
    q.lhs = ntmap.at(p.lhs);
    for (const auto& s : p.rhs) {
      if (src_term.count(s)) {
        const Word& img = h.images.at(s);
        q.rhs.insert(q.rhs.end(), img.begin(), img.end());
      } else {
        q.rhs.push_back(ntmap.at(s));
      }
    }
    out.productions.push_back(std::move(q));
  }
  return out;
}

Grammar cfg_inverse_hom(const Grammar& g, const FreeMonoidHom& h) {
  validate_grammar(g);
  Grammar gb = cfg_binarize(g);
  std::set<std::string> gterm(gb.terminals.begin(), gb.terminals.end());

  // Buffer states: pending rests of a loaded image, empty buffer is id 0.
  std::vector<Word> bufs;
  std::map<Word, int> bid;
  auto intern = [&](const Word& w) {
    auto it = bid.find(w);
    if (it != bid.end()) return it->second;
    int id = (int)bufs.size();
    bufs.push_back(w);
    bid[w] = id;
    return id;
  };
  intern({});
  for (const auto& [y, img] : h.images) {
    (void)y;
    for (size_t i = 0; i <= img.size(); i++)
      intern(Word(img.begin() + (long)i, img.end()));
  }

  std::map<std::string, std::vector<const Grammar::Production*>> by_lhs;
  for (const auto& p : gb.productions) by_lhs[p.lhs].push_back(&p);

  Grammar out;
  for (const auto& [y, img] : h.images) {
    (void)img;
    out.terminals.push_back(y);
  }
  std::set<std::string> used(out.terminals.begin(), out.terminals.end());

  std::map<std::tuple<int, std::string, int>, std::string> tname;
  std::deque<std::tuple<int, std::string, int>> work;
  auto want = [&](int p, const std::string& sym, int q) {
    auto key = std::make_tuple(p, sym, q);
    auto it = tname.find(key);
    if (it != tname.end()) return it->second;
    std::string name =
        "[" + std::to_string(p) + "|" + sym + "|" + std::to_string(q) + "]";
    while (used.count(name)) name += "'";
    used.insert(name);
    tname[key] = name;
    out.nonterminals.push_back(name);
    work.push_back(key);
    return name;
  };

  out.start = fresh_name("S", used);
  out.nonterminals.insert(out.nonterminals.begin(), out.start);
  // Letters with empty images can trail after the last pop; a tail
  // nonterminal absorbs them since no triple remains to read from.
  std::string tail = fresh_name("E", used);
  out.nonterminals.push_back(tail);
  out.productions.push_back({out.start, {want(0, gb.start, 0), tail}});
  out.productions.push_back({tail, {}});
  for (const auto& [y, img] : h.images)
    if (img.empty()) out.productions.push_back({tail, {y, tail}});

  const size_t kProductionCap = 2000000;
  while (!work.empty()) {
    auto [p, sym, q] = work.front();
    work.pop_front();
    const std::string& me = tname.at({p, sym, q});
    if (gterm.count(sym)) {
      // Pop one buffered letter, no input consumed.
      if (p != 0 && bufs[p][0] == sym) {
        Word rest(bufs[p].begin() + 1, bufs[p].end());
        if (bid.at(rest) == q) out.productions.push_back({me, {}});
      }
    } else {
      for (const auto* pr : by_lhs[sym]) {
        if (pr->rhs.empty()) {
          if (p == q) out.productions.push_back({me, {}});
        } else if (pr->rhs.size() == 1) {
          out.productions.push_back({me, {want(p, pr->rhs[0], q)}});
        } else {
          for (int r = 0; r < (int)bufs.size(); r++)
            out.productions.push_back(
                {me, {want(p, pr->rhs[0], r), want(r, pr->rhs[1], q)}});
        }
      }
    }
    if (p == 0) {
      // Empty buffer: read one input letter and load its image.
      for (const auto& [y, img] : h.images)
        out.productions.push_back({me, {y, want(bid.at(img), sym, q)}});
    }
    require(out.productions.size() < kProductionCap, Errc::limit_exceeded,
            "cfg_inverse_hom: construction too large");
  }
  dedupe_productions(out);
  return cfg_reduce(out);
}

LetterAutomaton letter_automaton_from_json(const Json& j) {
  require(j.is_object(), Errc::parse, "automaton: expected object");
  require(j.contains("states") && j.contains("initial") &&
              j.contains("finals") && j.contains("transitions"),
          Errc::parse, "automaton: missing key");
  LetterAutomaton a;
  require(j["states"].is_number_integer(), Errc::parse,
          "automaton: states must be an integer");
  a.states = j["states"].get<int>();
  require(j["initial"].is_number_integer(), Errc::parse,
          "automaton: initial must be an integer");
  a.initial = j["initial"].get<int>();
  require(j["finals"].is_array(), Errc::parse,
          "automaton: finals must be an array");
  for (auto& f : j["finals"]) {
    require(f.is_number_integer(), Errc::parse,
            "automaton: final must be an integer");
    a.finals.push_back(f.get<int>());
  }
  require(j["transitions"].is_array(), Errc::parse,
          "automaton: transitions must be an array");
  for (auto& t : j["transitions"]) {
    require(t.is_array() && t.size() == 3 && t[0].is_number_integer() &&
                t[1].is_string() && t[2].is_number_integer(),
            Errc::parse, "automaton: transition must be [from, letter, to]");
    a.transitions.push_back(
        {t[0].get<int>(), t[1].get<std::string>(), t[2].get<int>()});
  }
  validate_letter_automaton(a);
  return a;
}

Json letter_automaton_to_json(const LetterAutomaton& a) {
  Json j;
  j["states"] = a.states;
  j["initial"] = a.initial;
  j["finals"] = a.finals;
  Json ts = Json::array();
  for (const auto& t : a.transitions)
    ts.push_back(Json::array({t.from, t.letter, t.to}));
  j["transitions"] = ts;
  return j;
}

void validate_letter_automaton(const LetterAutomaton& a) {
  require(a.states > 0, Errc::invalid_argument, "automaton: no states");
  auto ok = [&](int s) { return s >= 0 && s < a.states; };
  require(ok(a.initial), Errc::invalid_argument,
          "automaton: initial state out of range");
  for (int f : a.finals)
    require(ok(f), Errc::invalid_argument,
            "automaton: final state out of range");
  for (const auto& t : a.transitions) {
    require(ok(t.from) && ok(t.to), Errc::invalid_argument,
            "automaton: transition state out of range");
    require(!t.letter.empty(), Errc::invalid_argument,
            "automaton: empty transition letter");
  }
}

bool automaton_accepts(const LetterAutomaton& a,
                       const std::vector<std::string>& w) {
  validate_letter_automaton(a);
  std::set<int> cur = {a.initial};
  for (const auto& x : w) {
    std::set<int> next;
    for (const auto& t : a.transitions)
      if (t.letter == x && cur.count(t.from)) next.insert(t.to);
    cur = std::move(next);
    if (cur.empty()) return false;
  }
  for (int f : a.finals)
    if (cur.count(f)) return true;
  return false;
}

Grammar cfg_intersect_regular(const Grammar& g, const LetterAutomaton& a) {
  validate_grammar(g);
  validate_letter_automaton(a);
  auto [gf, has_eps] = epsilon_free(g);
  std::set<std::string> gterm(gf.terminals.begin(), gf.terminals.end());

  std::set<std::tuple<int, std::string, int>> edge;
  for (const auto& t : a.transitions) edge.insert({t.from, t.letter, t.to});

  std::map<std::string, std::vector<const Grammar::Production*>> by_lhs;
  for (const auto& p : gf.productions) by_lhs[p.lhs].push_back(&p);

  Grammar out;
  out.terminals = g.terminals;
  std::set<std::string> used(out.terminals.begin(), out.terminals.end());

  std::map<std::tuple<int, std::string, int>, std::string> tname;
  std::deque<std::tuple<int, std::string, int>> work;
  auto want = [&](int p, const std::string& sym, int q) {
    auto key = std::make_tuple(p, sym, q);
    auto it = tname.find(key);
    if (it != tname.end()) return it->second;
    std::string name =
        "<" + std::to_string(p) + "|" + sym + "|" + std::to_string(q) + ">";
    while (used.count(name)) name += "'";
    used.insert(name);
    tname[key] = name;
    out.nonterminals.push_back(name);
    work.push_back(key);
    return name;
  };

  out.start = fresh_name("S", used);
  out.nonterminals.insert(out.nonterminals.begin(), out.start);
  for (int f : a.finals)
    out.productions.push_back({out.start, {want(a.initial, gf.start, f)}});
  bool initial_final =
      std::find(a.finals.begin(), a.finals.end(), a.initial) != a.finals.end();
  if (has_eps && initial_final) out.productions.push_back({out.start, {}});

  const size_t kProductionCap = 2000000;
  while (!work.empty()) {
    auto [p, sym, q] = work.front();
    work.pop_front();
    const std::string& me = tname.at({p, sym, q});
    if (gterm.count(sym)) {
      if (edge.count({p, sym, q})) out.productions.push_back({me, {sym}});
      continue;
    }
    for (const auto* pr : by_lhs[sym]) {
      if (pr->rhs.size() == 1) {
        // Skip terminal children with no matching transition.
        if (gterm.count(pr->rhs[0]) && !edge.count({p, pr->rhs[0], q}))
          continue;
        out.productions.push_back({me, {want(p, pr->rhs[0], q)}});
      } else {
        for (int r = 0; r < a.states; r++) {
          if (gterm.count(pr->rhs[0]) && !edge.count({p, pr->rhs[0], r}))
            continue;
          if (gterm.count(pr->rhs[1]) && !edge.count({r, pr->rhs[1], q}))
            continue;
          out.productions.push_back(
              {me, {want(p, pr->rhs[0], r), want(r, pr->rhs[1], q)}});
        }
      }
      require(out.productions.size() < kProductionCap, Errc::limit_exceeded,
              "cfg_intersect_regular: construction too large");
    }
  }
  dedupe_productions(out);
  return cfg_reduce(out);
}

}  // namespace gp
