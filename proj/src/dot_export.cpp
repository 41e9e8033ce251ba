#include "fatdelta/dot_export.hpp"

#include <sstream>

namespace fatdelta::io {

namespace {
std::string node_id(const std::string& marking) {
  return "obj_" + (marking.empty() ? std::string("nil") : marking);
}
std::string node_label(const std::string& marking) {
  return marking.empty() ? std::string("[]") : marking;
}
}  // namespace

std::string relgraph_dot(const relgraph::RelGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  node [shape=circle,width=.2];\n";
  for (int v = 0; v < g.vertices; ++v) {
    os << "  v" << v << " [label=\"" << v << "\"];\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    os << "  v" << g.edges[e].src << " -> v" << g.edges[e].tgt;
    if (g.marked[e]) os << " [style=bold,color=red]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string objects_poset_dot(int max_edges) {
  std::ostringstream os;
  os << "digraph \"fatdelta_objects\" {\n";
  os << "  rankdir=TB;\n  node [shape=box];\n";
  std::vector<fat::FatObject> objs = fat::enumerate_objects(max_edges);
  for (const auto& x : objs) {
    os << "  " << node_id(x.marking) << " [label=\"" << node_label(x.marking) << "\"];\n";
  }
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      if (x == y) continue;
      size_t n = fat::enumerate_hom(x, y).size();
      if (n == 0) continue;
      os << "  " << node_id(x.marking) << " -> " << node_id(y.marking) << " [label=\"" << n
         << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

nlohmann::json objects_poset_json(int max_edges) {
  nlohmann::json objects = nlohmann::json::array();
  nlohmann::json arrows = nlohmann::json::array();
  std::vector<fat::FatObject> objs = fat::enumerate_objects(max_edges);
  for (const auto& x : objs) objects.push_back(x.marking);
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      if (x == y) continue;
      size_t n = fat::enumerate_hom(x, y).size();
      if (n == 0) continue;
      arrows.push_back({{"from", x.marking}, {"to", y.marking}, {"count", n}});
    }
  }
  return {{"objects", objects}, {"arrows", arrows}};
}

std::string morphism_diagram_dot(const fat::FatMorphism& f) {
  std::ostringstream os;
  os << "digraph \"fatdelta_morphism\" {\n";
  os << "  rankdir=TB;\n  node [shape=point,width=.1];\n";
  auto column = [&os](const fat::FatObject& x, const std::string& prefix) {
    for (int v = 0; v <= x.edges(); ++v) {
      os << "  " << prefix << v << ";\n";
    }
    for (int e = 0; e < x.edges(); ++e) {
      os << "  " << prefix << e << " -> " << prefix << (e + 1);
      if (x.is_marked(e)) os << " [style=bold,color=red]";
      os << ";\n";
    }
  };
  os << "  subgraph cluster_dom { label=\"" << node_label(f.dom.marking) << "\";\n";
  column(f.dom, "d");
  os << "  }\n";
  os << "  subgraph cluster_cod { label=\"" << node_label(f.cod.marking) << "\";\n";
  column(f.cod, "c");
  os << "  }\n";
  for (int v = 0; v <= f.dom.edges(); ++v) {
    os << "  d" << v << " -> c" << f.top[v] << " [style=dashed,constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json morphism_diagram_json(const fat::FatMorphism& f) {
  return {{"dom", f.dom.marking}, {"cod", f.cod.marking}, {"top", f.top}};
}

}  // namespace fatdelta::io
