#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fatdelta/relgraph.hpp"

namespace fatdelta::semicat {

struct SemiMorphism {
  std::string id;
  int src = 0;
  int tgt = 0;
  bool operator==(const SemiMorphism&) const = default;
};

/// A finite semicategory: composition is a total table on composable pairs
/// and the only coherence is associativity (no identities required).
struct SemiCategory {
  std::vector<std::string> objects;
  std::vector<SemiMorphism> morphisms;
  // compose[{g, f}] = g after f, for every pair with tgt(f) == src(g)
  std::map<std::pair<int, int>, int> compose;

  int composite(int g, int f) const { return compose.at({g, f}); }
  bool composable(int g, int f) const {
    return morphisms[f].tgt == morphisms[g].src;
  }
  bool operator==(const SemiCategory&) const = default;
};

/// A semicategory with a composition-closed set of marked morphisms
/// (a wide subsemicategory).
struct RelSemiCategory {
  SemiCategory base;
  std::vector<bool> marked;  // parallel to base.morphisms
  bool operator==(const RelSemiCategory&) const = default;
};

struct ValidationResult {
  bool ok = true;
  std::string message;  // names the first violation when !ok
};

/// Structural check: composition respects sources and targets and is total
/// on composable pairs, associativity holds on every composable triple, and
/// the marked set is closed under composition.
ValidationResult validate(const RelSemiCategory& c);

struct RelFunctor {
  std::vector<int> object_map;
  std::vector<int> morphism_map;
  bool operator==(const RelFunctor&) const = default;
};

/// All marking-preserving semifunctors c -> d, deterministic order.
std::vector<RelFunctor> enumerate_functors(const RelSemiCategory& c,
                                           const RelSemiCategory& d);

/// The free relative semicategory on an acyclic relative graph: morphisms
/// are all paths, composition is concatenation, a path is marked iff all of
/// its edges are.  Throws std::domain_error on cyclic input, where the free
/// object is infinite; bounded path queries live in relgraph::free_bounded.
RelSemiCategory free_relsemicat(const relgraph::RelGraph& x);

/// The underlying relative graph: one edge per morphism, marked where the
/// morphism is marked.  edge_morphism[i] is the morphism realised by edge i
/// (the canonical edge sort permutes the listing).
struct ForgetfulResult {
  relgraph::RelGraph graph;
  std::vector<int> edge_morphism;
};

ForgetfulResult forgetful_indexed(const RelSemiCategory& c);
relgraph::RelGraph forgetful(const RelSemiCategory& c);

RelSemiCategory flat(const SemiCategory& c);   // marks nothing
RelSemiCategory sharp(const SemiCategory& c);  // marks everything

/// Positional structural equality ignoring morphism ids.
bool structurally_equal(const RelSemiCategory& a, const RelSemiCategory& b);

}  // namespace fatdelta::semicat
