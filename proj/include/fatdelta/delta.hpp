#pragma once

#include <string>
#include <vector>

namespace fatdelta::delta {

/// A weakly monotone map [m] -> [n] between finite ordinals, stored as the
/// full vertex-image table.  The ordinal [n] has vertices 0..n and edges
/// 0..n-1 (edge i joins vertices i and i+1).
///
/// The table representation makes equality, classification and composition
/// O(n) and canonical; generator words (faces/degeneracies) are derived
/// output only.
struct OrdinalMap {
  int dom = 0;              // the ordinal [dom]
  int cod = 0;              // the ordinal [cod]
  std::vector<int> images;  // size dom+1, weakly monotone, values in [0, cod]

  OrdinalMap() : images{0} {}
  OrdinalMap(int dom, int cod, std::vector<int> images);

  bool operator==(const OrdinalMap&) const = default;
  bool operator<(const OrdinalMap& o) const;
};

OrdinalMap identity(int n);

/// g after f.  Throws std::invalid_argument if f.cod != g.dom.
OrdinalMap compose(const OrdinalMap& g, const OrdinalMap& f);

/// The face map [n] -> [n+1] omitting vertex i (0 <= i <= n+1).
OrdinalMap face(int n, int i);

/// The degeneracy [n] -> [n-1] repeating value i (0 <= i <= n-1).
OrdinalMap degeneracy(int n, int i);

struct MapClass {
  bool mono = false;         // strictly increasing
  bool epi = false;          // surjective onto [cod]
  bool active = false;       // endpoint preserving
  bool inert = false;        // distance preserving
  bool contraction = false;  // f(i+1) <= f(i) + 1
};

MapClass classify(const OrdinalMap& f);

struct EpiMonoFactorization {
  OrdinalMap epi;   // [dom] ->> [image]
  OrdinalMap mono;  // [image] >-> [cod]
};

/// The unique factorization of f as a surjection followed by an injection.
EpiMonoFactorization epi_mono_factor(const OrdinalMap& f);

struct ActiveInertFactorization {
  OrdinalMap active;  // endpoint-preserving part
  OrdinalMap inert;   // interval inclusion
};

/// The unique factorization of f as an endpoint-preserving map followed by
/// a distance-preserving interval inclusion.
ActiveInertFactorization active_inert_factor(const OrdinalMap& f);

/// End-to-end gluing of ordinals: [n] v [n2] = [n + n2].
int vee(int n, int n2);

/// Block gluing of two active maps; the result is active.  Throws if either
/// argument fails to preserve endpoints.
OrdinalMap vee_active(const OrdinalMap& f, const OrdinalMap& f2);

struct PushoutResult {
  int corner;
  OrdinalMap right;   // cod(mono) ->> corner, an epi
  OrdinalMap bottom;  // cod(epi) -> corner, an active mono
};

/// Pushout of an active monomorphism along an epimorphism with the same
/// domain.  Edge j of the mono's codomain collapses exactly when it lies in
/// the image interval of an edge collapsed by the epi.  The universal
/// property is checked by an independent enumeration oracle in the tests.
PushoutResult pushout_mono_along_epi(const OrdinalMap& mono, const OrdinalMap& epi);

enum class HomClass { All, Mono, Epi, Active, Inert };

/// All maps [m] -> [n] of the given class in lexicographic image order.
std::vector<OrdinalMap> enumerate_hom(int m, int n, HomClass cls = HomClass::All);

/// Text form "[m]->[n]:(i0 i1 ... im)".
std::string to_text(const OrdinalMap& f);
OrdinalMap from_text(const std::string& text);

}  // namespace fatdelta::delta
