#include "fatdelta/relgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fatdelta::relgraph {

RelGraph::RelGraph(int vertices_, std::vector<std::tuple<int, int, bool>> edge_list)
    : vertices(vertices_) {
  if (vertices < 0) throw std::invalid_argument("RelGraph: negative vertex count");
  for (auto& [s, t, m] : edge_list) {
    if (s < 0 || s >= vertices || t < 0 || t >= vertices) {
      throw std::invalid_argument("RelGraph: edge endpoint out of range");
    }
  }
  std::stable_sort(edge_list.begin(), edge_list.end());
  edges.reserve(edge_list.size());
  marked.reserve(edge_list.size());
  for (auto& [s, t, m] : edge_list) {
    edges.push_back({s, t});
    marked.push_back(m);
  }
}

bool RelGraph::operator<(const RelGraph& o) const {
  auto key = [](const RelGraph& g) {
    std::vector<std::tuple<int, int, bool>> es;
    for (int i = 0; i < g.edge_count(); ++i)
      es.emplace_back(g.edges[i].src, g.edges[i].tgt, g.marked[i]);
    return std::make_tuple(g.vertices, es);
  };
  return key(*this) < key(o);
}

RelGraph linear_relgraph(const std::string& marking) {
  int m = static_cast<int>(marking.size());
  std::vector<std::tuple<int, int, bool>> es;
  for (int i = 0; i < m; ++i) {
    if (marking[i] != 'u' && marking[i] != 'm') {
      throw std::invalid_argument("linear_relgraph: marking must be over {u,m}");
    }
    es.emplace_back(i, i + 1, marking[i] == 'm');
  }
  return {m + 1, std::move(es)};
}

bool is_linear(const RelGraph& g) {
  if (g.vertices < 1 || g.edge_count() != g.vertices - 1) return false;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (g.edges[i].src != i || g.edges[i].tgt != i + 1) return false;
  }
  return true;
}

RelGraph terminal_relgraph() { return {1, {{0, 0, true}}}; }

int path_src(const RelGraph& g, const Path& p) { return g.edges[p.edges.front()].src; }
int path_tgt(const RelGraph& g, const Path& p) { return g.edges[p.edges.back()].tgt; }

bool path_marked(const RelGraph& g, const Path& p) {
  return std::all_of(p.edges.begin(), p.edges.end(), [&](int e) { return g.marked[e]; });
}

bool path_valid(const RelGraph& g, const Path& p) {
  if (p.edges.empty()) return false;
  for (int e : p.edges) {
    if (e < 0 || e >= g.edge_count()) return false;
  }
  for (size_t i = 0; i + 1 < p.edges.size(); ++i) {
    if (g.edges[p.edges[i]].tgt != g.edges[p.edges[i + 1]].src) return false;
  }
  return true;
}

std::vector<Path> enumerate_paths(const RelGraph& g, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_paths: length must be >= 1");
  std::vector<Path> out;
  std::vector<int> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(Path{cur});
      return;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!cur.empty() && g.edges[cur.back()].tgt != g.edges[e].src) continue;
      cur.push_back(e);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

Path concat(const RelGraph& g, const Path& p, const Path& q) {
  if (path_tgt(g, p) != path_src(g, q)) {
    throw std::invalid_argument("concat: end of first path is not the start of the second");
  }
  Path r = p;
  r.edges.insert(r.edges.end(), q.edges.begin(), q.edges.end());
  return r;
}

Path mult(const RelGraph& g, const std::vector<Path>& parts, int bound) {
  if (parts.empty()) throw std::invalid_argument("mult: empty sequence");
  Path acc = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) acc = concat(g, acc, parts[i]);
  if (acc.length() > bound) {
    throw TruncationError("mult: concatenated length " + std::to_string(acc.length()) +
                          " exceeds bound " + std::to_string(bound));
  }
  return acc;
}

Path unit_edge(const RelGraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("unit_edge: no such edge");
  return Path{{e}};
}

RelGraphMap::RelGraphMap(RelGraph dom_, RelGraph cod_, std::vector<int> vertex_map_,
                         std::vector<int> edge_map_)
    : dom(std::move(dom_)),
      cod(std::move(cod_)),
      vertex_map(std::move(vertex_map_)),
      edge_map(std::move(edge_map_)) {
  if (static_cast<int>(vertex_map.size()) != dom.vertices ||
      static_cast<int>(edge_map.size()) != dom.edge_count()) {
    throw std::invalid_argument("RelGraphMap: table sizes do not match the domain");
  }
  for (int v : vertex_map) {
    if (v < 0 || v >= cod.vertices) throw std::invalid_argument("RelGraphMap: vertex image out of range");
  }
  for (int i = 0; i < dom.edge_count(); ++i) {
    int e = edge_map[i];
    if (e < 0 || e >= cod.edge_count()) throw std::invalid_argument("RelGraphMap: edge image out of range");
    if (cod.edges[e].src != vertex_map[dom.edges[i].src] ||
        cod.edges[e].tgt != vertex_map[dom.edges[i].tgt]) {
      throw std::invalid_argument("RelGraphMap: endpoints not preserved");
    }
    if (dom.marked[i] && !cod.marked[e]) {
      throw std::invalid_argument("RelGraphMap: marked edge sent to an unmarked edge");
    }
  }
}

RelGraphMap identity_map(const RelGraph& g) {
  std::vector<int> vm(g.vertices), em(g.edge_count());
  for (int v = 0; v < g.vertices; ++v) vm[v] = v;
  for (int e = 0; e < g.edge_count(); ++e) em[e] = e;
  return {g, g, std::move(vm), std::move(em)};
}

RelGraphMap compose(const RelGraphMap& g, const RelGraphMap& f) {
  if (!(f.cod == g.dom)) throw std::invalid_argument("compose: graphs do not match");
  std::vector<int> vm(f.dom.vertices), em(f.dom.edge_count());
  for (int v = 0; v < f.dom.vertices; ++v) vm[v] = g.vertex_map[f.vertex_map[v]];
  for (int e = 0; e < f.dom.edge_count(); ++e) em[e] = g.edge_map[f.edge_map[e]];
  return {f.dom, g.cod, std::move(vm), std::move(em)};
}

RelGraphMap terminal_map(const RelGraph& g) {
  return {g, terminal_relgraph(), std::vector<int>(g.vertices, 0),
          std::vector<int>(g.edge_count(), 0)};
}

std::vector<RelGraphMap> enumerate_maps(const RelGraph& dom, const RelGraph& cod) {
  std::vector<RelGraphMap> out;
  std::vector<int> vm(dom.vertices, 0), em(dom.edge_count(), 0);
  std::function<void(int)> rec_edges = [&](int e) {
    if (e == dom.edge_count()) {
      out.emplace_back(dom, cod, vm, em);
      return;
    }
    for (int c = 0; c < cod.edge_count(); ++c) {
      if (cod.edges[c].src != vm[dom.edges[e].src]) continue;
      if (cod.edges[c].tgt != vm[dom.edges[e].tgt]) continue;
      if (dom.marked[e] && !cod.marked[c]) continue;
      em[e] = c;
      rec_edges(e + 1);
    }
  };
  std::function<void(int)> rec_vertices = [&](int v) {
    if (v == dom.vertices) {
      rec_edges(0);
      return;
    }
    for (int c = 0; c < cod.vertices; ++c) {
      vm[v] = c;
      rec_vertices(v + 1);
    }
  };
  rec_vertices(0);
  return out;
}

Path map_path(const RelGraphMap& f, const Path& p) {
  Path q;
  q.edges.reserve(p.edges.size());
  for (int e : p.edges) q.edges.push_back(f.edge_map[e]);
  return q;
}

PullbackResult pullback(const RelGraphMap& f, const RelGraphMap& g) {
  if (!(f.cod == g.cod)) throw std::invalid_argument("pullback: codomains differ");
  PullbackResult r;
  std::map<std::pair<int, int>, int> vindex;
  for (int u = 0; u < f.dom.vertices; ++u) {
    for (int v = 0; v < g.dom.vertices; ++v) {
      if (f.vertex_map[u] == g.vertex_map[v]) {
        vindex[{u, v}] = static_cast<int>(r.vertex_pairs.size());
        r.vertex_pairs.emplace_back(u, v);
      }
    }
  }
  std::vector<std::tuple<int, int, bool>> es;
  for (int a = 0; a < f.dom.edge_count(); ++a) {
    for (int b = 0; b < g.dom.edge_count(); ++b) {
      if (f.edge_map[a] != g.edge_map[b]) continue;
      int s = vindex.at({f.dom.edges[a].src, g.dom.edges[b].src});
      int t = vindex.at({f.dom.edges[a].tgt, g.dom.edges[b].tgt});
      es.emplace_back(s, t, f.dom.marked[a] && g.dom.marked[b]);
      r.edge_pairs.emplace_back(a, b);
    }
  }
  // keep edge_pairs aligned with the canonical edge sort of RelGraph
  std::vector<int> order(es.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return es[a] < es[b]; });
  std::vector<std::tuple<int, int, bool>> es_sorted;
  std::vector<std::pair<int, int>> ep_sorted;
  for (int i : order) {
    es_sorted.push_back(es[i]);
    ep_sorted.push_back(r.edge_pairs[i]);
  }
  r.edge_pairs = std::move(ep_sorted);
  r.graph = RelGraph(static_cast<int>(r.vertex_pairs.size()), std::move(es_sorted));
  std::vector<int> vm1, vm2, em1, em2;
  for (auto& [u, v] : r.vertex_pairs) {
    vm1.push_back(u);
    vm2.push_back(v);
  }
  for (auto& [a, b] : r.edge_pairs) {
    em1.push_back(a);
    em2.push_back(b);
  }
  r.proj1 = RelGraphMap(r.graph, f.dom, vm1, em1);
  r.proj2 = RelGraphMap(r.graph, g.dom, vm2, em2);
  return r;
}

BoundedFree free_bounded(const RelGraph& x, int bound) {
  if (bound < 1) throw std::invalid_argument("free_bounded: bound must be >= 1");
  BoundedFree f;
  f.base = x;
  f.bound = bound;
  struct Item {
    std::tuple<int, int, bool> key;
    Path path;
  };
  std::vector<Item> items;
  for (int n = 1; n <= bound; ++n) {
    for (Path& p : enumerate_paths(x, n)) {
      items.push_back({{path_src(x, p), path_tgt(x, p), path_marked(x, p)}, std::move(p)});
    }
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) { return a.key < b.key; });
  std::vector<std::tuple<int, int, bool>> es;
  for (auto& it : items) {
    es.push_back(it.key);
    f.paths.push_back(std::move(it.path));
  }
  f.graph = RelGraph(x.vertices, std::move(es));
  return f;
}

int free_edge_of_path(const BoundedFree& f, const Path& p) {
  for (int i = 0; i < static_cast<int>(f.paths.size()); ++i) {
    if (f.paths[i] == p) return i;
  }
  return -1;
}

RelGraphMap induced_free_map(const BoundedFree& fx, const BoundedFree& fy,
                             const RelGraphMap& delta) {
  if (!(delta.dom == fx.base) || !(delta.cod == fy.base)) {
    throw std::invalid_argument("induced_free_map: map does not connect the base graphs");
  }
  if (fy.bound < fx.bound) {
    throw std::invalid_argument("induced_free_map: target bound too small");
  }
  std::vector<int> em(fx.graph.edge_count());
  for (int e = 0; e < fx.graph.edge_count(); ++e) {
    int idx = free_edge_of_path(fy, map_path(delta, fx.paths[e]));
    if (idx < 0) throw std::logic_error("induced_free_map: image path missing");
    em[e] = idx;
  }
  return {fx.graph, fy.graph, delta.vertex_map, std::move(em)};
}

bool is_acyclic(const RelGraph& g) {
  std::vector<int> state(g.vertices, 0);  // 0 new, 1 on stack, 2 done
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.edges[e].src != v) continue;
      int w = g.edges[e].tgt;
      if (state[w] == 1) return false;
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v = 0; v < g.vertices; ++v) {
    if (state[v] == 0 && !dfs(v)) return false;
  }
  return true;
}

}  // namespace fatdelta::relgraph
