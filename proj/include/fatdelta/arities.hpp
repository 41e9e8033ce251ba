#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fatdelta/fat.hpp"
#include "fatdelta/relgraph.hpp"
#include "fatdelta/report.hpp"

namespace fatdelta::arities {

/// A generic map out of a generator object into a bounded free object,
/// recorded as the generator, the middle graph and the path assigned to
/// each generator edge.  The free leg of the factorization is the unique
/// map middle -> terminal.
struct GenericMapData {
  relgraph::RelGraph generator;  // linear, alternating or uniform marking
  relgraph::RelGraph middle;     // linear
  std::vector<relgraph::Path> assignment;  // per generator edge, a path in middle
};

/// Generic factorization of a single-string map: the single edge of the
/// uniformly marked generator of length one goes to the maximal path of the
/// uniformly marked linear graph of length n.
GenericMapData generic_factor_string(bool sharp, int n);

/// The data of an arity: a sign and block lengths m_1..m_n (all >= 1).
/// epsilon 0 starts with a marked block, epsilon 1 with an unmarked one.
struct AritySpec {
  int epsilon = 0;
  std::vector<int> lengths;

  AritySpec() = default;
  AritySpec(int epsilon, std::vector<int> lengths);
};

/// The alternatingly marked linear generator of length n for the sign.
relgraph::RelGraph alternating_generator(int n, int epsilon);

/// The arity object: the vee of uniformly marked blocks, together with the
/// generic assignment sending generator edge i to the length-m_i path
/// starting at m_1 + ... + m_{i-1}.
struct Arity {
  fat::FatObject eta;
  GenericMapData generic;
};

Arity arity_of(const AritySpec& spec);

/// Marked linear graphs and fat Delta objects are the same data; these two
/// constructions witness the isomorphism and extend it to (inert) maps.
fat::FatObject phi(const relgraph::RelGraph& linear);
fat::FatMorphism phi_on_morphism(const relgraph::RelGraphMap& g);
relgraph::RelGraph psi(const fat::FatObject& x);
relgraph::RelGraphMap psi_on_morphism(const fat::FatMorphism& f);

/// Realise the generic map as an actual graph morphism into the bounded
/// free object of the middle graph.
relgraph::RelGraphMap as_map_into_free(const GenericMapData& g,
                                       const relgraph::BoundedFree& fmid);

/// A commuting square against a map into a free object, as used by the
/// filler search: left and top land in bounded free objects, right and
/// bottom are underlying maps (the free construction is applied to them
/// when checking commutativity).
struct GenericSquare {
  relgraph::BoundedFree middle_free;   // free object over the middle M
  relgraph::BoundedFree ambient_free;  // free object over the ambient X
  relgraph::RelGraphMap left;          // A -> free(M)
  relgraph::RelGraphMap top;           // A -> free(X)
  relgraph::RelGraphMap right;         // X -> Y
  relgraph::RelGraphMap bottom;        // M -> Y
};

bool square_commutes(const GenericSquare& s);

enum class FillerOutcome { Unique, None, Multiple };

struct FillerResult {
  FillerOutcome outcome = FillerOutcome::None;
  std::vector<relgraph::RelGraphMap> fillers;
};

/// Exhaustively searches maps d : M -> X with free(d) . left == top and
/// right . d == bottom.  Throws if the square does not commute.
FillerResult check_generic(const GenericSquare& s);

/// Degreewise cartesianness of the bounded free construction on x:
///  (a) the unit square at the terminal map is a pullback (the fibre over
///      the length-one loop recovers x),
///  (b) the multiplication square at the terminal map is a pullback
///      (partitioned paths biject with paths of paths), per length,
///  (c) path sets of a pullback biject with the fibre products of path
///      sets, per length, for each supplied cospan (the cospan of terminal
///      maps over x is always included).
CheckReport check_cartesian(
    const relgraph::RelGraph& x, int bound,
    const std::vector<std::pair<relgraph::RelGraphMap, relgraph::RelGraphMap>>& cospans = {});

/// Data of the multiplication check, exposed so tests can corrupt a length
/// and watch the verification fail.
struct MuCheckData {
  // per length n (1-based index n-1): paths-of-paths as block sequences,
  //  and the pairs (composition, path) they should biject onto
  std::vector<std::vector<std::vector<relgraph::Path>>> paths_of_paths;
  std::vector<std::vector<std::pair<std::vector<int>, relgraph::Path>>> pairs;
};

MuCheckData compute_mu_data(const relgraph::RelGraph& x, int bound);
CheckReport verify_mu_data(const relgraph::RelGraph& x, const MuCheckData& data);

}  // namespace fatdelta::arities
