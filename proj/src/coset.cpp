#include "grouppack/coset.hpp"

#include <set>

namespace gp {

CosetTable coset_table_from_json(const Json& j) {
  require(j.is_object(), Errc::parse, "coset table must be an object");
  for (const char* k : {"group", "subgroup", "representatives", "embed", "rewrite"})
    require(j.contains(k), Errc::parse, std::string("coset table needs field ") + k);
  CosetTable t;
  t.group = desc_from_json(j["group"]);
  t.subgroup = desc_from_json(j["subgroup"]);
  require(j["representatives"].is_array() && !j["representatives"].empty(), Errc::parse,
          "representatives must be a nonempty array");
  for (const Json& e : j["representatives"])
    t.reps.push_back(elem_from_json(t.group, e));
  require(j["embed"].is_array(), Errc::parse, "embed must be an array");
  for (const Json& e : j["embed"]) t.embed.push_back(elem_from_json(t.group, e));
  require((int)t.embed.size() == t.subgroup.generator_count(), Errc::invalid_argument,
          "embed needs one image per subgroup generator");
  require(j["rewrite"].is_array(), Errc::parse, "rewrite must be an array");
  for (const Json& r : j["rewrite"]) {
    require(r.is_array() && r.size() == 4, Errc::parse,
            "each rewrite entry must be [coset, letter, hword, coset]");
    require(r[0].is_number_integer() && r[1].is_number_integer() &&
                r[3].is_number_integer(),
            Errc::parse, "rewrite indices must be integers");
    auto key = std::make_pair(r[0].get<int>(), r[1].get<int>());
    require(!t.rewrite.count(key), Errc::invalid_argument, "duplicate rewrite entry");
    t.rewrite[key] = {word_from_json(r[2]), r[3].get<int>()};
  }
  validate_coset_table(t);
  return t;
}

Json coset_table_to_json(const CosetTable& t) {
  Json j;
  j["group"] = desc_to_json(t.group);
  j["subgroup"] = desc_to_json(t.subgroup);
  Json reps = Json::array(), emb = Json::array(), rw = Json::array();
  for (const auto& r : t.reps) reps.push_back(elem_to_json(r));
  for (const auto& e : t.embed) emb.push_back(elem_to_json(e));
  for (const auto& [key, val] : t.rewrite)
    rw.push_back(Json::array({key.first, key.second, word_to_json(val.first), val.second}));
  j["representatives"] = std::move(reps);
  j["embed"] = std::move(emb);
  j["rewrite"] = std::move(rw);
  return j;
}

GroupElement embed_subgroup_word(const CosetTable& t, const GeneratorWord& hword) {
  GroupElement acc = identity(t.group);
  const int hc = (int)t.embed.size();
  for (int letter : hword) {
    require(letter != 0 && std::abs(letter) <= hc, Errc::invalid_argument,
            "subgroup letter outside the generator range");
    const GroupElement& img = t.embed[std::abs(letter) - 1];
    acc = mul(acc, letter > 0 ? img : inv(img));
  }
  return acc;
}

void validate_coset_table(const CosetTable& t) {
  require(!t.reps.empty(), Errc::invalid_argument, "table needs representatives");
  require(is_identity(t.reps[0]), Errc::invalid_argument,
          "first representative must be the identity");
  std::set<std::string> seen;
  for (const auto& r : t.reps) {
    require(r.desc == t.group, Errc::descriptor_mismatch, "representative group mismatch");
    require(seen.insert(canonical_key(r)).second, Errc::invalid_argument,
            "representatives must be pairwise distinct");
  }
  const int n = (int)t.reps.size(), gc = t.group.generator_count();
  for (int i = 0; i < n; ++i)
    for (int a = 1; a <= gc; ++a)
      for (int s : {a, -a})
        require(t.rewrite.count({i, s}), Errc::invalid_argument,
                "rewrite table is not total");
  for (const auto& [key, val] : t.rewrite) {
    auto [i, a] = key;
    const auto& [hword, jdx] = val;
    require(i >= 0 && i < n && jdx >= 0 && jdx < n, Errc::invalid_argument,
            "rewrite coset index out of range");
    require(a != 0 && std::abs(a) <= gc, Errc::invalid_argument,
            "rewrite letter outside the generator range");
    GroupElement lhs = mul(t.reps[i], evaluate_word(t.group, {a}));
    GroupElement rhs = mul(embed_subgroup_word(t, hword), t.reps[jdx]);
    require(eq(lhs, rhs), Errc::invalid_argument,
            "rewrite entry violates its defining identity");
  }
}

CosetDecomposition decompose_coset(const CosetTable& t, const GeneratorWord& gword) {
  CosetDecomposition d;
  for (int letter : gword) {
    auto it = t.rewrite.find({d.coset, letter});
    require(it != t.rewrite.end(), Errc::invalid_argument,
            "letter missing from the rewrite table");
    d.hword.insert(d.hword.end(), it->second.first.begin(), it->second.first.end());
    d.coset = it->second.second;
  }
  GroupElement lhs = evaluate_word(t.group, gword);
  GroupElement rhs = mul(embed_subgroup_word(t, d.hword), t.reps[d.coset]);
  require(eq(lhs, rhs), Errc::precondition, "internal: coset walk lost the value");
  return d;
}

Automaton transfer_to_subgroup(const CosetTable& t, const Automaton& a, int target_coset) {
  validate_automaton(a, t.group);
  const int n = (int)t.reps.size();
  require(target_coset >= 0 && target_coset < n, Errc::invalid_argument,
          "target coset out of range");
  Automaton out;
  out.states = a.states * n;
  auto enc = [n](int q, int c) { return q * n + c; };
  out.initial = enc(a.initial, 0);
  for (int f : a.finals) out.finals.push_back(enc(f, target_coset));
  for (const auto& tr : a.transitions) {
    require(!tr.elem.has_value(), Errc::unsupported,
            "transfer requires word-labeled transitions");
    for (int c = 0; c < n; ++c) {
      GeneratorWord h;
      int at = c;
      for (int letter : tr.word) {
        const auto& [hw, nxt] = t.rewrite.at({at, letter});
        h.insert(h.end(), hw.begin(), hw.end());
        at = nxt;
      }
      out.transitions.push_back({enc(tr.from, c), std::move(h), enc(tr.to, at), std::nullopt});
    }
  }
  return out;
}

CosetTable dinf_cyclic_table() {
  CosetTable t;
  t.group = GroupDesc::dinf();
  t.subgroup = GroupDesc::z(1);
  t.reps = {identity(t.group), generator(t.group, 2)};
  t.embed = {generator(t.group, 1)};
  t.rewrite[{0, 1}] = {{1}, 0};
  t.rewrite[{0, -1}] = {{-1}, 0};
  t.rewrite[{0, 2}] = {{}, 1};
  t.rewrite[{0, -2}] = {{}, 1};
  t.rewrite[{1, 1}] = {{-1}, 1};
  t.rewrite[{1, -1}] = {{1}, 1};
  t.rewrite[{1, 2}] = {{}, 0};
  t.rewrite[{1, -2}] = {{}, 0};
  validate_coset_table(t);
  return t;
}

}  // namespace gp
