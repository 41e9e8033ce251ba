#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace fatdelta::relgraph {

struct Edge {
  int src = 0;
  int tgt = 0;
  bool operator==(const Edge&) const = default;
};

/// A finite directed multigraph with a wide marked subgraph (all vertices,
/// a subset of edges).  Edges are kept sorted by (src, tgt, marked) so that
/// structural equality is canonical; edge identity is positional.
struct RelGraph {
  int vertices = 0;
  std::vector<Edge> edges;
  std::vector<bool> marked;  // parallel to edges

  RelGraph() = default;
  RelGraph(int vertices, std::vector<std::tuple<int, int, bool>> edge_list);

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool operator==(const RelGraph&) const = default;
  bool operator<(const RelGraph& o) const;
};

/// The linearly ordered graph of the marking: vertices 0..m, edge i -> i+1
/// marked where marking[i] == 'm'.
RelGraph linear_relgraph(const std::string& marking);
bool is_linear(const RelGraph& g);

/// One vertex with a single marked loop; every relative graph has exactly
/// one map into it.
RelGraph terminal_relgraph();

/// A composable non-empty sequence of edge indices in some ambient graph.
struct Path {
  std::vector<int> edges;
  bool operator==(const Path&) const = default;
  bool operator<(const Path& o) const { return edges < o.edges; }
  int length() const { return static_cast<int>(edges.size()); }
};

int path_src(const RelGraph& g, const Path& p);
int path_tgt(const RelGraph& g, const Path& p);
bool path_marked(const RelGraph& g, const Path& p);
bool path_valid(const RelGraph& g, const Path& p);

/// All paths of exactly length n (n >= 1), in lexicographic edge order.
std::vector<Path> enumerate_paths(const RelGraph& g, int n);

/// Concatenation; throws if the end of p is not the start of q.
Path concat(const RelGraph& g, const Path& p, const Path& q);

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Concatenates a composable sequence of paths.  Throws TruncationError if
/// the total length exceeds the bound (the result would fall outside the
/// bounded free object).
Path mult(const RelGraph& g, const std::vector<Path>& parts, int bound);

/// The unit: edge e as a path of length one.
Path unit_edge(const RelGraph& g, int e);

/// A marking-preserving graph morphism.
struct RelGraphMap {
  RelGraph dom, cod;
  std::vector<int> vertex_map;  // size dom.vertices
  std::vector<int> edge_map;    // size dom.edge_count()

  RelGraphMap() = default;
  RelGraphMap(RelGraph dom, RelGraph cod, std::vector<int> vertex_map,
              std::vector<int> edge_map);

  bool operator==(const RelGraphMap&) const = default;
};

RelGraphMap identity_map(const RelGraph& g);
RelGraphMap compose(const RelGraphMap& g, const RelGraphMap& f);
RelGraphMap terminal_map(const RelGraph& g);

/// All marking-preserving morphisms dom -> cod, deterministic order.
std::vector<RelGraphMap> enumerate_maps(const RelGraph& dom, const RelGraph& cod);

Path map_path(const RelGraphMap& f, const Path& p);

struct PullbackResult {
  RelGraph graph;
  RelGraphMap proj1, proj2;
  // vertex i of graph is the pair vertex_pairs[i]; edge j the pair edge_pairs[j]
  std::vector<std::pair<int, int>> vertex_pairs;
  std::vector<std::pair<int, int>> edge_pairs;
};

/// Fibre product over a common codomain: vertices and edges are matching
/// pairs, an edge is marked iff both components are marked.
PullbackResult pullback(const RelGraphMap& f, const RelGraphMap& g);

/// The free object truncated at a path-length bound: same vertices, one
/// edge per path of length <= bound, marked iff every constituent edge is
/// marked.  paths[i] is the path realised by edge i of graph.
struct BoundedFree {
  RelGraph base;
  int bound = 0;
  RelGraph graph;
  std::vector<Path> paths;
};

BoundedFree free_bounded(const RelGraph& x, int bound);

/// Index of the edge of the bounded free object realising p; -1 if absent.
int free_edge_of_path(const BoundedFree& f, const Path& p);

/// The functorial action of the bounded free construction on a map
/// delta : X -> Y, as a map free(X) -> free(Y).  Requires fy.bound >= fx.bound.
RelGraphMap induced_free_map(const BoundedFree& fx, const BoundedFree& fy,
                             const RelGraphMap& delta);

bool is_acyclic(const RelGraph& g);

}  // namespace fatdelta::relgraph
