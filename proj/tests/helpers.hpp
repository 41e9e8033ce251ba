// Shared oracles and corpus builders for the test suites.  Everything here
// is independent of the library's closed-form implementations: universal
// properties are checked by raw enumeration, corpora are built by brute
// force over shapes.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fatdelta/arities.hpp"
#include "fatdelta/fat.hpp"
#include "fatdelta/relgraph.hpp"
#include "fatdelta/semicat.hpp"

namespace testutil {

namespace fat = fatdelta::fat;
namespace rg = fatdelta::relgraph;
namespace sc = fatdelta::semicat;
namespace ar = fatdelta::arities;

// ---------------------------------------------------------------------------
// relative graph universe

inline std::vector<rg::RelGraph> enumerate_relgraphs(int max_vertices, int max_edges) {
  std::vector<rg::RelGraph> out;
  for (int v = 0; v <= max_vertices; ++v) {
    std::vector<std::pair<int, int>> pair_types;
    for (int s = 0; s < v; ++s) {
      for (int t = 0; t < v; ++t) pair_types.emplace_back(s, t);
    }
    // multisets of edge types (combinations with repetition), then markings
    std::vector<int> chosen;
    std::function<void(int, int)> rec = [&](int start, int remaining) {
      {
        int e = static_cast<int>(chosen.size());
        for (unsigned bits = 0; bits < (1u << e); ++bits) {
          std::vector<std::tuple<int, int, bool>> es;
          for (int i = 0; i < e; ++i) {
            es.emplace_back(pair_types[chosen[i]].first, pair_types[chosen[i]].second,
                            (bits >> i) & 1);
          }
          out.emplace_back(v, std::move(es));
        }
      }
      if (remaining == 0) return;
      for (int p = start; p < static_cast<int>(pair_types.size()); ++p) {
        chosen.push_back(p);
        rec(p, remaining - 1);
        chosen.pop_back();
      }
    };
    rec(0, max_edges);
  }
  return out;
}

// ---------------------------------------------------------------------------
// universal-property oracles (raw enumeration)

// exactly one mediating morphism for every fat Delta cocone under (f, g)
// into targets with at most target_bound edges
inline bool fat_pushout_universal(const fat::FatMorphism& f, const fat::FatMorphism& g,
                                  const fat::FatObject& corner,
                                  const fat::FatMorphism& from_f_cod,
                                  const fat::FatMorphism& from_g_cod, int target_bound) {
  for (const auto& t : fat::enumerate_objects(target_bound)) {
    auto from_w = fat::enumerate_hom(corner, t);
    for (const auto& p : fat::enumerate_hom(f.cod, t)) {
      fat::FatMorphism pf = fat::compose(p, f);
      for (const auto& q : fat::enumerate_hom(g.cod, t)) {
        if (!(pf == fat::compose(q, g))) continue;
        int mediators = 0;
        for (const auto& h : from_w) {
          if (fat::compose(h, from_f_cod) == p && fat::compose(h, from_g_cod) == q) {
            ++mediators;
          }
        }
        if (mediators != 1) return false;
      }
    }
  }
  return true;
}

// exactly one mediating map for every relative-graph cone over (f, g) from
// apexes drawn from the given universe
inline bool relgraph_pullback_universal(const rg::RelGraphMap& f, const rg::RelGraphMap& g,
                                        const rg::RelGraph& apex_graph,
                                        const rg::RelGraphMap& proj1,
                                        const rg::RelGraphMap& proj2,
                                        const std::vector<rg::RelGraph>& universe) {
  for (const auto& c : universe) {
    for (const auto& p : rg::enumerate_maps(c, f.dom)) {
      rg::RelGraphMap fp = rg::compose(f, p);
      for (const auto& q : rg::enumerate_maps(c, g.dom)) {
        if (!(fp == rg::compose(g, q))) continue;
        int mediators = 0;
        for (const auto& h : rg::enumerate_maps(c, apex_graph)) {
          if (rg::compose(proj1, h) == p && rg::compose(proj2, h) == q) ++mediators;
        }
        if (mediators != 1) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// genericness sweep: quantify commuting squares over declared universes

struct GenericSweep {
  long long commuting = 0;
  long long non_unique = 0;
  std::vector<std::string> failures;
};

// for a candidate generic map (generator -> free(middle)), enumerate all
// squares with ambient X in ambient_universe, right leg X -> Y into
// target_universe and any top/bottom completion; count fillers of the
// commuting ones via the library's per-square search
inline GenericSweep sweep_generic_squares(const ar::GenericMapData& gmd, int bound,
                                          const std::vector<rg::RelGraph>& ambient_universe,
                                          const std::vector<rg::RelGraph>& target_universe) {
  GenericSweep res;
  rg::BoundedFree fmid = rg::free_bounded(gmd.middle, bound);
  rg::RelGraphMap left = ar::as_map_into_free(gmd, fmid);
  for (const auto& ambient : ambient_universe) {
    rg::BoundedFree famb = rg::free_bounded(ambient, bound);
    std::vector<rg::RelGraphMap> alphas = rg::enumerate_maps(gmd.generator, famb.graph);
    for (const auto& target : target_universe) {
      rg::BoundedFree ftgt = rg::free_bounded(target, bound);
      std::vector<rg::RelGraphMap> betas = rg::enumerate_maps(gmd.middle, target);
      std::vector<rg::RelGraphMap> left_then_beta;
      for (const auto& beta : betas) {
        left_then_beta.push_back(
            rg::compose(rg::induced_free_map(fmid, ftgt, beta), left));
      }
      for (const auto& gamma : rg::enumerate_maps(ambient, target)) {
        rg::RelGraphMap fgamma = rg::induced_free_map(famb, ftgt, gamma);
        for (const auto& alpha : alphas) {
          rg::RelGraphMap top_then_gamma = rg::compose(fgamma, alpha);
          for (size_t b = 0; b < betas.size(); ++b) {
            if (!(top_then_gamma == left_then_beta[b])) continue;
            ++res.commuting;
            ar::GenericSquare sq{fmid, famb, left, alpha, gamma, betas[b]};
            ar::FillerResult fr = ar::check_generic(sq);
            if (fr.outcome != ar::FillerOutcome::Unique) {
              ++res.non_unique;
              if (res.failures.size() < 5) {
                res.failures.push_back(
                    "square with " + std::to_string(fr.fillers.size()) + " filler(s)");
              }
            }
          }
        }
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// relative semicategory corpus

// all valid relative semicategories with the exact object and morphism
// counts, deduplicated up to object/morphism renaming
inline std::vector<sc::RelSemiCategory> all_relsemicats(int num_objects, int num_morphisms) {
  std::vector<sc::RelSemiCategory> out;
  std::set<std::string> seen;

  std::vector<int> perm_base(num_objects), mperm_base(num_morphisms);
  for (int i = 0; i < num_objects; ++i) perm_base[i] = i;
  for (int i = 0; i < num_morphisms; ++i) mperm_base[i] = i;

  auto canonical_key = [&](const sc::RelSemiCategory& c) {
    std::string best;
    std::vector<int> operm = perm_base;
    do {
      std::vector<int> mperm = mperm_base;
      do {
        // remap and serialise; mperm[i] is the new position of morphism i
        std::vector<std::tuple<int, int, bool>> ms(num_morphisms);
        for (int i = 0; i < num_morphisms; ++i) {
          ms[mperm[i]] = {operm[c.base.morphisms[i].src], operm[c.base.morphisms[i].tgt],
                          static_cast<bool>(c.marked[i])};
        }
        std::vector<std::tuple<int, int, int>> comp;
        for (const auto& [pair, gf] : c.base.compose) {
          comp.emplace_back(mperm[pair.first], mperm[pair.second], mperm[gf]);
        }
        std::sort(comp.begin(), comp.end());
        std::string key;
        for (auto& [s, t, m] : ms) {
          key += std::to_string(s) + "," + std::to_string(t) + "," + (m ? "1" : "0") + ";";
        }
        key += "|";
        for (auto& [g, f, gf] : comp) {
          key += std::to_string(g) + "," + std::to_string(f) + "," + std::to_string(gf) + ";";
        }
        if (best.empty() || key < best) best = key;
      } while (std::next_permutation(mperm.begin(), mperm.end()));
    } while (std::next_permutation(operm.begin(), operm.end()));
    return best;
  };

  sc::SemiCategory base;
  for (int i = 0; i < num_objects; ++i) base.objects.push_back(std::to_string(i));
  for (int i = 0; i < num_morphisms; ++i) base.morphisms.push_back({"f" + std::to_string(i), 0, 0});

  std::function<void(int)> assign_table;
  std::function<void(int)> assign_shape = [&](int k) {
    if (k == num_morphisms) {
      base.compose.clear();
      assign_table(0);
      return;
    }
    for (int s = 0; s < num_objects; ++s) {
      for (int t = 0; t < num_objects; ++t) {
        base.morphisms[k].src = s;
        base.morphisms[k].tgt = t;
        assign_shape(k + 1);
      }
    }
  };

  std::vector<std::pair<int, int>> pairs;
  assign_table = [&](int pi) {
    if (pi == 0) {
      pairs.clear();
      for (int g = 0; g < num_morphisms; ++g) {
        for (int f = 0; f < num_morphisms; ++f) {
          if (base.composable(g, f)) pairs.emplace_back(g, f);
        }
      }
    }
    if (pi == static_cast<int>(pairs.size())) {
      sc::RelSemiCategory cand{base, std::vector<bool>(num_morphisms, false)};
      if (!sc::validate(cand).ok) return;
      for (unsigned bits = 0; bits < (1u << num_morphisms); ++bits) {
        sc::RelSemiCategory marked_cand = cand;
        for (int i = 0; i < num_morphisms; ++i) marked_cand.marked[i] = (bits >> i) & 1;
        if (!sc::validate(marked_cand).ok) continue;
        if (seen.insert(canonical_key(marked_cand)).second) out.push_back(marked_cand);
      }
      return;
    }
    auto [g, f] = pairs[pi];
    for (int gf = 0; gf < num_morphisms; ++gf) {
      if (base.morphisms[gf].src != base.morphisms[f].src) continue;
      if (base.morphisms[gf].tgt != base.morphisms[g].tgt) continue;
      base.compose[{g, f}] = gf;
      assign_table(pi + 1);
      base.compose.erase({g, f});
    }
  };

  if (num_morphisms == 0) {
    sc::RelSemiCategory cand{base, {}};
    out.push_back(cand);
    return out;
  }
  assign_shape(0);
  return out;
}

// a hand-built semicategory from explicit tables
inline sc::RelSemiCategory make_relsemicat(
    std::vector<std::string> objects,
    std::vector<std::tuple<std::string, int, int, bool>> morphisms,
    std::vector<std::tuple<int, int, int>> compose) {
  sc::RelSemiCategory c;
  c.base.objects = std::move(objects);
  for (auto& [id, s, t, m] : morphisms) {
    c.base.morphisms.push_back({id, s, t});
    c.marked.push_back(m);
  }
  for (auto& [g, f, gf] : compose) c.base.compose[{g, f}] = gf;
  return c;
}

// deterministic corpus with <= 2 objects and <= 4 morphisms: exhaustive over
// the small sizes, hand-built at the larger ones
inline std::vector<sc::RelSemiCategory> semicat_corpus() {
  std::vector<sc::RelSemiCategory> corpus;
  for (int o = 0; o <= 2; ++o) {
    for (int m = 0; m <= 2; ++m) {
      for (auto& c : all_relsemicats(o, m)) corpus.push_back(c);
    }
  }
  // the unique-hom semicategory on two objects
  for (unsigned bits : {0u, 1u, 3u, 11u}) {
    // morphisms: gf: x->x (0), f: x->y (1), g: y->x (2), fg: y->y (3)
    corpus.push_back(make_relsemicat(
        {"x", "y"},
        {{"gf", 0, 0, (bits >> 0) & 1},
         {"f", 0, 1, (bits >> 1) & 1},
         {"g", 1, 0, (bits >> 2) & 1},
         {"fg", 1, 1, (bits >> 3) & 1}},
        {{0, 0, 0}, {1, 0, 1}, {2, 1, 0}, {3, 1, 1}, {0, 2, 2}, {1, 2, 3},
         {2, 3, 2}, {3, 3, 3}}));
  }
  // one object, three morphisms, composition keeps the first-applied factor
  for (unsigned bits : {0u, 5u, 7u}) {
    std::vector<std::tuple<int, int, int>> table;
    for (int g = 0; g < 3; ++g) {
      for (int f = 0; f < 3; ++f) table.emplace_back(g, f, f);
    }
    corpus.push_back(make_relsemicat({"o"},
                                     {{"a", 0, 0, (bits >> 0) & 1},
                                      {"b", 0, 0, (bits >> 1) & 1},
                                      {"c", 0, 0, (bits >> 2) & 1}},
                                     table));
  }
  // an arrow with a loop on its target absorbed into a second arrow
  for (unsigned bits : {0u, 2u, 6u}) {
    corpus.push_back(make_relsemicat(
        {"x", "y"},
        {{"f", 0, 1, (bits >> 0) & 1},
         {"l", 1, 1, (bits >> 1) & 1},
         {"lf", 0, 1, (bits >> 2) & 1}},
        {{1, 0, 2}, {1, 1, 1}, {1, 2, 2}}));
  }
  return corpus;
}

}  // namespace testutil
