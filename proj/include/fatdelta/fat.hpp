#pragma once

#include <string>
#include <vector>

#include "fatdelta/delta.hpp"
#include "fatdelta/semicat.hpp"

namespace fatdelta::fat {

/// An object of fat Delta in normal form: one bit per edge of [m] recording
/// whether the derived epimorphism collapses it ('m' marked, 'u' unmarked).
/// The epi [m] ->> [m - #marked] is derivable; the marking is canonical.
struct FatObject {
  std::string marking;  // over {u, m}, length = edge count

  FatObject() = default;
  explicit FatObject(std::string marking);

  int edges() const { return static_cast<int>(marking.size()); }
  int marked_count() const;
  bool is_marked(int edge) const { return marking[edge] == 'm'; }

  bool operator==(const FatObject&) const = default;
  bool operator<(const FatObject& o) const;
};

/// The epimorphism [m] ->> [m - k] collapsing exactly the marked edges.
delta::OrdinalMap epi_of(const FatObject& x);

/// Inverse of epi_of; throws if e is not surjective.
FatObject object_from_epi(const delta::OrdinalMap& e);

/// A morphism of fat Delta: a strictly increasing top injection such that
/// every marked edge of the domain lands on a run of marked edges of the
/// codomain (equivalently, a commuting square over the derived epis exists;
/// its bottom map is then unique).
struct FatMorphism {
  FatObject dom, cod;
  std::vector<int> top;  // size dom.edges()+1, strictly increasing vertex images

  FatMorphism() = default;
  FatMorphism(FatObject dom, FatObject cod, std::vector<int> top);

  bool operator==(const FatMorphism&) const = default;
  bool operator<(const FatMorphism& o) const;
};

bool is_morphism(const FatObject& dom, const FatObject& cod, const std::vector<int>& top);

/// The unique bottom map of the square (eta_cod . top . s for any section s
/// of the domain epi; the result is independent of the section).
delta::OrdinalMap bottom_of(const FatMorphism& f);

FatMorphism identity_of(const FatObject& x);
FatMorphism compose(const FatMorphism& g, const FatMorphism& f);

enum class FatHomClass { All, Active, Inert };

std::vector<FatMorphism> enumerate_hom(const FatObject& dom, const FatObject& cod,
                                       FatHomClass cls = FatHomClass::All);

/// All objects with at most max_edges edges: by edge count, then with 'u'
/// before 'm' position by position.
std::vector<FatObject> enumerate_objects(int max_edges);

/// Inert: the top map is distance preserving (an interval inclusion).
bool is_inert(const FatMorphism& f);

/// Active: the top map preserves endpoints and is block-exact — every
/// codomain edge in the interval of a domain edge carries that edge's mark.
/// This is the executable form of "the square is a pushout over the domain
/// epi"; the equivalence is itself verified against the pushout oracle in
/// the tests.
bool is_active(const FatMorphism& f);

struct FatFactorization {
  FatMorphism active;  // dom -> middle
  FatMorphism inert;   // middle -> cod
};

/// The unique active-inert factorization: the middle object is the image
/// interval of the top, re-marked by pushing the domain marking forward.
FatFactorization active_inert_factor(const FatMorphism& f);

/// Marking concatenation; the derived epi is the vee of the derived epis.
FatObject vee(const FatObject& x, const FatObject& y);

FatObject flat_object(int n);   // n unmarked edges
FatObject sharp_object(int n);  // n marked edges

/// The two inclusions of the semisimplex category, on maps: the given mono
/// becomes the top of a square between fully unmarked (flat) or fully
/// marked (sharp) objects.
FatMorphism flat_on_mono(const delta::OrdinalMap& f);
FatMorphism sharp_on_mono(const delta::OrdinalMap& f);

/// Domain projection (lands in the mono part of Delta) and codomain
/// projection (the bottom map).
delta::OrdinalMap domain_projection(const FatMorphism& f);
delta::OrdinalMap codomain_projection(const FatMorphism& f);

/// (edge count, marked count), ordered lexicographically; every non-identity
/// morphism strictly raises it, making fat Delta a direct category.
struct Degree {
  int edges = 0;
  int marked = 0;
  bool operator==(const Degree&) const = default;
  bool operator<(const Degree& o) const {
    return edges != o.edges ? edges < o.edges : marked < o.marked;
  }
};

Degree degree(const FatObject& x);

struct FatPushout {
  FatObject corner;
  FatMorphism inert_leg;   // cod(active input) -> corner
  FatMorphism active_leg;  // cod(inert input) -> corner
};

/// Pushout of an active map along an inert map with the same domain, by
/// interval substitution on the top row; the corner marking is the
/// block-exact transport of the inert codomain's marking.
FatPushout pushout_active_inert(const FatMorphism& inert_map, const FatMorphism& active_map);

/// The linear relative semicategory on the object's vertices: a morphism
/// for every pair i < j, marked iff all edges in [i, j) are marked.
semicat::RelSemiCategory rso(const FatObject& x);

/// Precomposition of rso by the top map; bijective on hom-sets.
semicat::RelFunctor rso_on_morphism(const FatMorphism& f);

std::string to_text(const FatMorphism& f);

}  // namespace fatdelta::fat
