#pragma once

#include <map>
#include <string>
#include <vector>

#include "fatdelta/fat.hpp"
#include "fatdelta/relgraph.hpp"
#include "fatdelta/report.hpp"
#include "fatdelta/semicat.hpp"

namespace fatdelta::nerve {

/// Canonical key for a morphism of fat Delta.
struct MorphismKey {
  std::string dom, cod;
  std::vector<int> top;
  auto operator<=>(const MorphismKey&) const = default;
};

MorphismKey key_of(const fat::FatMorphism& f);
fat::FatMorphism morphism_of(const MorphismKey& k);

/// A contravariant set-valued table over the objects with at most `bound`
/// edges: a finite set of labelled elements per object and, for each stored
/// morphism x -> y, a function sets[y] -> sets[x] given by image indices.
struct Presheaf {
  int bound = 0;
  std::map<std::string, std::vector<std::string>> sets;
  std::map<MorphismKey, std::vector<int>> actions;
  // underlying element data when the presheaf is a nerve: a morphism (or
  // edge) index sequence per element, a single object (vertex) index for
  // the edgeless object
  std::map<std::string, std::vector<std::vector<int>>> elements;

  const std::vector<std::string>& set_of(const std::string& marking) const;
  const std::vector<int>& action(const MorphismKey& k) const;
  bool has_action(const MorphismKey& k) const { return actions.count(k) > 0; }
};

/// The nerve of a valid relative semicategory: elements at x are composable
/// morphism sequences whose i-th entry is marked wherever edge i of x is;
/// a morphism acts by composing along its vertex intervals.
Presheaf nerve(const semicat::RelSemiCategory& c, int bound);

/// The graph nerve: the same construction with edges in place of morphisms,
/// with actions along inert morphisms only.
Presheaf nerve0(const relgraph::RelGraph& x, int bound);

/// action(identity) = identity and action(g . f) = action(f) . action(g)
/// over every composable pair stored in the table.
CheckReport functoriality_check(const Presheaf& p);

/// The Segal condition over the core {"", "u", "m"}: functoriality, the
/// marked-over-unmarked separation (sets["m"] -> sets["u"] injective), and,
/// for every object with >= 2 edges, a bijection between sets[x] and the
/// compatible families of vertex, edge and marked-edge restrictions.
CheckReport segal_check(const Presheaf& p);

/// Reconstructs the relative graph of a Segal presheaf: vertices are
/// sets[""], edges are sets["u"] with endpoints given by the vertex
/// restrictions, an edge marked iff it is hit by sets["m"].
relgraph::RelGraph segal_graph(const Presheaf& p);

struct NaturalTransformation {
  std::map<std::string, std::vector<int>> components;
  bool operator==(const NaturalTransformation&) const = default;
  bool operator<(const NaturalTransformation& o) const { return components < o.components; }
};

/// All componentwise maps commuting with every stored action, deterministic
/// order.  Requires equal bounds.
std::vector<NaturalTransformation> enumerate_nat(const Presheaf& p, const Presheaf& q);

/// The natural transformation induced by a functor between the nerves.
NaturalTransformation nat_of_functor(const semicat::RelSemiCategory& c,
                                     const semicat::RelSemiCategory& d,
                                     const semicat::RelFunctor& F, const Presheaf& nc,
                                     const Presheaf& nd);

/// Asserts that functors c -> d correspond bijectively to natural
/// transformations between the nerves at the given bound, and that the
/// canonical map realises the bijection.
CheckReport nerve_theorem_check(const semicat::RelSemiCategory& c,
                                const semicat::RelSemiCategory& d, int bound);

/// Given the components of a natural transformation at "", "u" and "m",
/// extends them uniquely to every object using the Segal families of the
/// target; returns false if some element has no or several extensions.
bool reconstruct_nat(const Presheaf& p, const Presheaf& q,
                     const NaturalTransformation& core, NaturalTransformation& out);

/// Rebuilds the relative semicategory presented by a Segal presheaf with a
/// full action table: objects and morphisms from the core sets, marking
/// from the separation image, composition from the outer-edge restriction
/// at the two-edge string.  Requires bound >= 2.
semicat::RelSemiCategory reconstruct_semicat(const Presheaf& p);

/// True when p is isomorphic to the nerve of its own reconstruction, with
/// the identification exhibited elementwise and checked against every
/// stored action.  This is the executable form of membership in the
/// essential image of the nerve.
bool is_nerve_of_reconstruction(const Presheaf& p, std::string* why = nullptr);

}  // namespace fatdelta::nerve
