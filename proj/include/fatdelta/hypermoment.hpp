#pragma once

#include <vector>

#include "fatdelta/fat.hpp"
#include "fatdelta/report.hpp"

namespace fatdelta::hyper {

/// An object of Segal's category: the finite set {0..size-1}.
struct GammaObject {
  int size = 0;
  bool operator==(const GammaObject&) const = default;
};

/// A morphism of Segal's category: each element of the domain is assigned
/// a subset of the codomain, the subsets pairwise disjoint.  Active means
/// the subsets cover the codomain; inert means all subsets are singletons
/// and the induced function is injective.
struct GammaMap {
  int dom = 0;
  int cod = 0;
  std::vector<std::vector<int>> assignment;  // sorted subsets, pairwise disjoint

  GammaMap() = default;
  GammaMap(int dom, int cod, std::vector<std::vector<int>> assignment);
  bool operator==(const GammaMap&) const = default;
};

GammaMap gamma_identity(int n);
GammaMap compose(const GammaMap& g, const GammaMap& f);
bool is_active(const GammaMap& f);
bool is_inert(const GammaMap& f);
std::vector<GammaMap> enumerate_gamma(int dom, int cod);

/// Cardinality: an object goes to its set of edges, a morphism sends edge i
/// of the domain to the codomain edges in [top(i), top(i+1)).
GammaObject gamma_object(const fat::FatObject& x);
GammaMap gamma_morphism(const fat::FatMorphism& f);

/// The inert lift of the element j of the cardinality of x: the edge
/// inclusion from the unmarked unit with top [j, j+1].
fat::FatMorphism inert_unit_lift(const fat::FatObject& x, int j);

/// Active morphisms map to active ones and inert to inert, for every
/// morphism between objects with at most `bound` edges.
CheckReport check_gamma_preserves(int bound);

/// Every (object, edge) pair has an inert lift from a unit; an unmarked
/// edge has exactly one such lift, a marked edge exactly two, related by
/// the canonical map from the unmarked to the marked unit.
CheckReport check_unit_lifts(int bound);

/// For a unit u ("u" or "m"): the only active morphism with target u from
/// objects within the bound is the identity, and it has exactly one inert
/// section.
CheckReport check_unit_condition(const fat::FatObject& u, int bound);

/// Observed counts of active morphisms out of each unit into every object
/// within the bound; counts are reported, not asserted.
CheckReport unitality_report(int bound);

/// Inert morphisms x -> z biject with compatible families over the core
/// cover of x (inert maps from "", "u" and "m" into x), for all objects
/// within the bound.
CheckReport segal_core_density_check(int bound);

/// Every inert/active span admits the pushout with inert and active legs;
/// the universal property is verified by cocone enumeration into targets
/// with at most bound+2 edges.
CheckReport extensionality_check(int bound);

}  // namespace fatdelta::hyper
