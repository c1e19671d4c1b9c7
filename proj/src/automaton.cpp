#include "grouppack/automaton.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace gp {

Automaton automaton_from_json(const Json& j) {
  require(j.is_object(), Errc::parse, "automaton must be an object");
  require(j.contains("states") && j["states"].is_number_integer(), Errc::parse,
          "automaton needs an integer state count");
  Automaton a;
  a.states = j["states"].get<int>();
  require(a.states >= 1, Errc::invalid_argument, "automaton needs at least one state");
  a.initial = j.value("initial", 0);
  require(j.contains("finals") && j["finals"].is_array(), Errc::parse,
          "automaton needs a finals array");
  for (const Json& f : j["finals"]) {
    require(f.is_number_integer(), Errc::parse, "final states must be integers");
    a.finals.push_back(f.get<int>());
  }
  require(j.contains("transitions") && j["transitions"].is_array(), Errc::parse,
          "automaton needs a transitions array");
  for (const Json& t : j["transitions"]) {
    require(t.is_array() && t.size() == 3, Errc::parse,
            "each transition must be [from, word, to]");
    Automaton::Trans tr;
    require(t[0].is_number_integer() && t[2].is_number_integer(), Errc::parse,
            "transition endpoints must be integers");
    tr.from = t[0].get<int>();
    tr.word = word_from_json(t[1]);
    tr.to = t[2].get<int>();
    a.transitions.push_back(std::move(tr));
  }
  return a;
}

Json automaton_to_json(const Automaton& a) {
  Json j;
  j["states"] = a.states;
  j["initial"] = a.initial;
  j["finals"] = a.finals;
  Json ts = Json::array();
  for (const auto& t : a.transitions) {
    require(!t.elem.has_value(), Errc::unsupported,
            "element-labeled transitions have no wire form");
    ts.push_back(Json::array({t.from, word_to_json(t.word), t.to}));
  }
  j["transitions"] = std::move(ts);
  return j;
}

void validate_automaton(const Automaton& a, const GroupDesc& g) {
  require(a.states >= 1, Errc::invalid_argument, "automaton needs at least one state");
  auto in_range = [&a](int q) { return q >= 0 && q < a.states; };
  require(in_range(a.initial), Errc::invalid_argument, "initial state out of range");
  for (int f : a.finals)
    require(in_range(f), Errc::invalid_argument, "final state out of range");
  const int gc = g.generator_count();
  for (const auto& t : a.transitions) {
    require(in_range(t.from) && in_range(t.to), Errc::invalid_argument,
            "transition endpoint out of range");
    if (t.elem.has_value())
      require(t.elem->desc == g, Errc::descriptor_mismatch, "label element group mismatch");
    for (int letter : t.word)
      require(letter != 0 && std::abs(letter) <= gc, Errc::invalid_argument,
              "transition letter outside the generator range");
  }
}

GroupElement label_value(const Automaton::Trans& t, const GroupDesc& g) {
  if (t.elem.has_value()) return *t.elem;
  return evaluate_word(g, t.word);
}

Automaton split_transitions(const Automaton& a, const GroupDesc& g) {
  validate_automaton(a, g);
  Automaton out;
  out.states = a.states;
  out.initial = a.initial;
  out.finals = a.finals;
  for (const auto& t : a.transitions) {
    require(!t.elem.has_value(), Errc::unsupported,
            "cannot split an element-labeled transition");
    if (t.word.size() <= 1) {
      out.transitions.push_back({t.from, t.word, t.to, std::nullopt});
      continue;
    }
    int prev = t.from;
    for (std::size_t i = 0; i + 1 < t.word.size(); ++i) {
      int fresh = out.states++;
      out.transitions.push_back({prev, {t.word[i]}, fresh, std::nullopt});
      prev = fresh;
    }
    out.transitions.push_back({prev, {t.word.back()}, t.to, std::nullopt});
  }
  return out;
}

Automaton subsetsum_to_automaton(const GroupDesc& g,
                                 const std::vector<GeneratorWord>& items) {
  Automaton a;
  a.states = (int)items.size() + 1;
  a.initial = 0;
  a.finals = {(int)items.size()};
  for (std::size_t i = 0; i < items.size(); ++i) {
    a.transitions.push_back({(int)i, items[i], (int)i + 1, std::nullopt});
    a.transitions.push_back({(int)i, {}, (int)i + 1, std::nullopt});
  }
  validate_automaton(a, g);
  return a;
}

Automaton subsetsum_to_automaton_elems(const GroupDesc& g,
                                       const std::vector<GroupElement>& items) {
  Automaton a;
  a.states = (int)items.size() + 1;
  a.initial = 0;
  a.finals = {(int)items.size()};
  for (std::size_t i = 0; i < items.size(); ++i) {
    require(items[i].desc == g, Errc::descriptor_mismatch, "item group mismatch");
    a.transitions.push_back({(int)i, {}, (int)i + 1, items[i]});
    a.transitions.push_back({(int)i, {}, (int)i + 1, std::nullopt});
  }
  return a;
}

BigInt entry_growth_bound(int d, const BigInt& n, const BigInt& m) {
  require(d >= 2, Errc::invalid_argument, "growth bound needs dimension >= 2");
  BigInt dd = d;
  return dd + (dd - 1) * big_binomial(n, d - 1) * big_pow(dd, 2 * (d - 2)) *
                 big_pow(m, d - 1);
}

namespace {

std::vector<int> topological_order(const Automaton& a) {
  std::vector<int> indeg(a.states, 0);
  for (const auto& t : a.transitions) ++indeg[t.to];
  std::deque<int> q;
  for (int s = 0; s < a.states; ++s)
    if (indeg[s] == 0) q.push_back(s);
  std::vector<int> order;
  std::vector<std::vector<int>> out_edges(a.states);
  for (std::size_t i = 0; i < a.transitions.size(); ++i)
    out_edges[a.transitions[i].from].push_back((int)i);
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    order.push_back(s);
    for (int e : out_edges[s])
      if (--indeg[a.transitions[e].to] == 0) q.push_back(a.transitions[e].to);
  }
  require((int)order.size() == a.states, Errc::precondition,
          "membership requires an acyclic automaton");
  return order;
}

}  // namespace

MembershipResult acyclic_membership(const Automaton& a, const GroupDesc& g,
                                    const GroupElement& target) {
  validate_automaton(a, g);
  require(target.desc == g, Errc::descriptor_mismatch, "target group mismatch");
  std::vector<int> order = topological_order(a);

  MembershipResult res;
  const bool track_norm = g.kind == GroupDesc::Kind::ut;
  if (track_norm) {
    const int d = g.param;
    BigInt n = std::max<BigInt>(a.states, 2 * d);
    BigInt m = d;
    for (const auto& t : a.transitions) m = std::max(m, ut_norm(std::get<IntMatrix>(
                                             label_value(t, g).payload)));
    res.stats.norm_bound = entry_growth_bound(d, n, m);
  }

  struct Entry {
    GroupElement value;
    int prev_state;
    std::size_t prev_index;
    int via_trans;
  };
  // per state: canonical key -> entry index in its pool
  std::vector<std::vector<Entry>> pool(a.states);
  std::vector<std::unordered_map<std::string, std::size_t>> keys(a.states);

  auto note_norm = [&](const GroupElement& e) {
    if (!track_norm) return;
    BigInt nrm = ut_norm(std::get<IntMatrix>(e.payload));
    res.stats.max_norm = std::max(res.stats.max_norm, nrm);
    require(nrm <= res.stats.norm_bound, Errc::precondition,
            "internal: intermediate product escaped the growth bound");
  };

  GroupElement id = identity(g);
  pool[a.initial].push_back({id, -1, 0, -1});
  keys[a.initial].emplace(canonical_key(id), 0);
  note_norm(id);

  std::vector<std::vector<int>> out_edges(a.states);
  for (std::size_t i = 0; i < a.transitions.size(); ++i)
    out_edges[a.transitions[i].from].push_back((int)i);

  for (int s : order) {
    if (pool[s].empty()) continue;
    ++res.stats.states_processed;
    res.stats.max_set_size = std::max(res.stats.max_set_size, pool[s].size());
    for (int e : out_edges[s]) {
      const auto& tr = a.transitions[e];
      GroupElement step = label_value(tr, g);
      // pool[s] can grow only for states later in the order; fixed size here
      const std::size_t sz = pool[s].size();
      for (std::size_t i = 0; i < sz; ++i) {
        GroupElement next = mul(pool[s][i].value, step);
        std::string key = canonical_key(next);
        if (keys[tr.to].count(key)) continue;
        note_norm(next);
        keys[tr.to].emplace(std::move(key), pool[tr.to].size());
        pool[tr.to].push_back({std::move(next), s, i, e});
      }
    }
  }
  for (const auto& p : pool) res.stats.elements_stored += p.size();

  const std::string want = canonical_key(target);
  for (int f : a.finals) {
    auto it = keys[f].find(want);
    if (it == keys[f].end()) continue;
    res.decision = Decision::yes;
    int s = f;
    std::size_t idx = it->second;
    while (true) {
      const Entry& en = pool[s][idx];
      if (en.via_trans < 0) break;
      res.path.push_back(en.via_trans);
      s = en.prev_state;
      idx = en.prev_index;
    }
    std::reverse(res.path.begin(), res.path.end());
    // re-verify the witness path end to end
    GroupElement acc = identity(g);
    int at = a.initial;
    for (int e : res.path) {
      require(a.transitions[e].from == at, Errc::precondition,
              "internal: witness path is not connected");
      acc = mul(acc, label_value(a.transitions[e], g));
      at = a.transitions[e].to;
    }
    require(at == f && eq(acc, target), Errc::precondition,
            "internal: witness path does not reach the target");
    return res;
  }
  res.decision = Decision::no;
  return res;
}

GeneratorWord path_word(const Automaton& a, const std::vector<int>& path) {
  GeneratorWord w;
  for (int e : path) {
    require(e >= 0 && e < (int)a.transitions.size(), Errc::invalid_argument,
            "path transition index out of range");
    require(!a.transitions[e].elem.has_value(), Errc::unsupported,
            "element-labeled transition has no word");
    const GeneratorWord& lw = a.transitions[e].word;
    w.insert(w.end(), lw.begin(), lw.end());
  }
  return w;
}

}  // namespace gp
