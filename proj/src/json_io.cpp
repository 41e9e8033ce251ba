#include "fatdelta/json_io.hpp"

#include <map>
#include <stdexcept>

namespace fatdelta::io {

json to_json(const delta::OrdinalMap& f) {
  return {{"dom", f.dom}, {"cod", f.cod}, {"images", f.images}};
}

delta::OrdinalMap ordinal_map_from_json(const json& j) {
  return {j.at("dom").get<int>(), j.at("cod").get<int>(),
          j.at("images").get<std::vector<int>>()};
}

json to_json(const fat::FatMorphism& f) {
  return {{"dom", f.dom.marking}, {"cod", f.cod.marking}, {"top", f.top}};
}

fat::FatMorphism fat_morphism_from_json(const json& j) {
  return {fat::FatObject(j.at("dom").get<std::string>()),
          fat::FatObject(j.at("cod").get<std::string>()),
          j.at("top").get<std::vector<int>>()};
}

json to_json(const relgraph::RelGraph& g) {
  json edges = json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    edges.push_back({{"src", g.edges[e].src},
                     {"tgt", g.edges[e].tgt},
                     {"marked", static_cast<bool>(g.marked[e])}});
  }
  return {{"vertices", g.vertices}, {"edges", edges}};
}

relgraph::RelGraph relgraph_from_json(const json& j) {
  std::vector<std::tuple<int, int, bool>> es;
  for (const auto& e : j.at("edges")) {
    es.emplace_back(e.at("src").get<int>(), e.at("tgt").get<int>(),
                    e.at("marked").get<bool>());
  }
  return {j.at("vertices").get<int>(), std::move(es)};
}

json to_json(const relgraph::RelGraphMap& f) {
  return {{"dom", to_json(f.dom)},
          {"cod", to_json(f.cod)},
          {"vertex_map", f.vertex_map},
          {"edge_map", f.edge_map}};
}

json to_json(const semicat::RelSemiCategory& c) {
  json morphisms = json::array();
  for (size_t i = 0; i < c.base.morphisms.size(); ++i) {
    const auto& f = c.base.morphisms[i];
    morphisms.push_back({{"id", f.id},
                         {"src", c.base.objects[f.src]},
                         {"tgt", c.base.objects[f.tgt]},
                         {"marked", static_cast<bool>(c.marked[i])}});
  }
  json compose = json::array();
  for (const auto& [pair, gf] : c.base.compose) {
    compose.push_back({c.base.morphisms[pair.first].id, c.base.morphisms[pair.second].id,
                       c.base.morphisms[gf].id});
  }
  return {{"objects", c.base.objects}, {"morphisms", morphisms}, {"compose", compose}};
}

semicat::RelSemiCategory relsemicat_from_json(const json& j) {
  semicat::RelSemiCategory c;
  c.base.objects = j.at("objects").get<std::vector<std::string>>();
  std::map<std::string, int> obj_index, mor_index;
  for (size_t i = 0; i < c.base.objects.size(); ++i) obj_index[c.base.objects[i]] = static_cast<int>(i);
  for (const auto& m : j.at("morphisms")) {
    semicat::SemiMorphism f;
    f.id = m.at("id").get<std::string>();
    auto src = m.at("src").get<std::string>();
    auto tgt = m.at("tgt").get<std::string>();
    if (!obj_index.count(src) || !obj_index.count(tgt)) {
      throw std::invalid_argument("relsemicat_from_json: unknown object in morphism " + f.id);
    }
    f.src = obj_index[src];
    f.tgt = obj_index[tgt];
    mor_index[f.id] = static_cast<int>(c.base.morphisms.size());
    c.base.morphisms.push_back(f);
    c.marked.push_back(m.value("marked", false));
  }
  for (const auto& triple : j.value("compose", json::array())) {
    if (!triple.is_array() || triple.size() != 3) {
      throw std::invalid_argument("relsemicat_from_json: compose entries are [g, f, gf]");
    }
    auto g = triple[0].get<std::string>();
    auto f = triple[1].get<std::string>();
    auto gf = triple[2].get<std::string>();
    if (!mor_index.count(g) || !mor_index.count(f) || !mor_index.count(gf)) {
      throw std::invalid_argument("relsemicat_from_json: unknown morphism id in compose table");
    }
    c.base.compose[{mor_index[g], mor_index[f]}] = mor_index[gf];
  }
  return c;
}

json to_json(const nerve::Presheaf& p) {
  json sets = json::object();
  for (const auto& [marking, labels] : p.sets) sets[marking] = labels;
  json actions = json::array();
  for (const auto& [k, table] : p.actions) {
    json map = json::object();
    const auto& cod_labels = p.sets.at(k.cod);
    const auto& dom_labels = p.sets.at(k.dom);
    for (size_t s = 0; s < table.size(); ++s) map[cod_labels[s]] = dom_labels[table[s]];
    actions.push_back(
        {{"morphism", {{"dom", k.dom}, {"cod", k.cod}, {"top", k.top}}}, {"map", map}});
  }
  return {{"bound", p.bound}, {"sets", sets}, {"actions", actions}};
}

nerve::Presheaf presheaf_from_json(const json& j) {
  nerve::Presheaf p;
  p.bound = j.at("bound").get<int>();
  std::map<std::string, std::map<std::string, int>> index;
  for (const auto& [marking, labels] : j.at("sets").items()) {
    p.sets[marking] = labels.get<std::vector<std::string>>();
    for (size_t i = 0; i < p.sets[marking].size(); ++i) index[marking][p.sets[marking][i]] = static_cast<int>(i);
  }
  for (const auto& a : j.at("actions")) {
    const auto& m = a.at("morphism");
    nerve::MorphismKey k{m.at("dom").get<std::string>(), m.at("cod").get<std::string>(),
                         m.at("top").get<std::vector<int>>()};
    if (!p.sets.count(k.dom) || !p.sets.count(k.cod)) {
      throw std::invalid_argument("presheaf_from_json: action over an object with no set");
    }
    std::vector<int> table(p.sets[k.cod].size(), -1);
    for (const auto& [from, to] : a.at("map").items()) {
      if (!index[k.cod].count(from) || !index[k.dom].count(to.get<std::string>())) {
        throw std::invalid_argument("presheaf_from_json: unknown element label in action");
      }
      table[index[k.cod][from]] = index[k.dom][to.get<std::string>()];
    }
    for (int v : table) {
      if (v < 0) throw std::invalid_argument("presheaf_from_json: partial action table");
    }
    p.actions[k] = std::move(table);
  }
  return p;
}

json to_json(const hyper::GammaMap& f) {
  return {{"dom", f.dom}, {"cod", f.cod}, {"assignment", f.assignment}};
}

json to_json(const CheckReport& r) {
  return {{"suite", r.suite},
          {"checked", r.checked},
          {"pass", r.pass()},
          {"violations", r.violations},
          {"notes", r.notes}};
}

}  // namespace fatdelta::io
