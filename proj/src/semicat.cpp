#include "fatdelta/semicat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace fatdelta::semicat {

ValidationResult validate(const RelSemiCategory& c) {
  const SemiCategory& b = c.base;
  int m = static_cast<int>(b.morphisms.size());
  if (static_cast<int>(c.marked.size()) != m) {
    return {false, "marked table size does not match the morphism count"};
  }
  for (const auto& f : b.morphisms) {
    if (f.src < 0 || f.src >= static_cast<int>(b.objects.size()) || f.tgt < 0 ||
        f.tgt >= static_cast<int>(b.objects.size())) {
      return {false, "morphism " + f.id + " has an endpoint out of range"};
    }
  }
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      auto it = b.compose.find({g, f});
      if (b.composable(g, f)) {
        if (it == b.compose.end()) {
          return {false, "missing composite (" + b.morphisms[g].id + ", " +
                             b.morphisms[f].id + ")"};
        }
        int gf = it->second;
        if (gf < 0 || gf >= m) {
          return {false, "composite index out of range for (" + b.morphisms[g].id +
                             ", " + b.morphisms[f].id + ")"};
        }
        if (b.morphisms[gf].src != b.morphisms[f].src ||
            b.morphisms[gf].tgt != b.morphisms[g].tgt) {
          return {false, "composite (" + b.morphisms[g].id + ", " + b.morphisms[f].id +
                             ") has wrong endpoints"};
        }
      } else if (it != b.compose.end()) {
        return {false, "composite defined for a non-composable pair (" +
                           b.morphisms[g].id + ", " + b.morphisms[f].id + ")"};
      }
    }
  }
  for (int h = 0; h < m; ++h) {
    for (int g = 0; g < m; ++g) {
      for (int f = 0; f < m; ++f) {
        if (!b.composable(g, f) || !b.composable(h, g)) continue;
        int left = b.composite(h, b.composite(g, f));
        int right = b.composite(b.composite(h, g), f);
        if (left != right) {
          return {false, "associativity fails on (" + b.morphisms[h].id + ", " +
                             b.morphisms[g].id + ", " + b.morphisms[f].id + ")"};
        }
      }
    }
  }
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      if (!b.composable(g, f) || !c.marked[g] || !c.marked[f]) continue;
      if (!c.marked[b.composite(g, f)]) {
        return {false, "marked set not closed under composition: (" +
                           b.morphisms[g].id + ", " + b.morphisms[f].id + ")"};
      }
    }
  }
  return {true, ""};
}

std::vector<RelFunctor> enumerate_functors(const RelSemiCategory& c,
                                           const RelSemiCategory& d) {
  int co = static_cast<int>(c.base.objects.size());
  int cm = static_cast<int>(c.base.morphisms.size());
  int dobj = static_cast<int>(d.base.objects.size());
  std::vector<RelFunctor> out;

  // triples (g, f, gf) grouped by the largest morphism index involved, so
  // each is checked as soon as all three images are known
  std::vector<std::vector<std::array<int, 3>>> triples(cm);
  for (auto& [pair, gf] : c.base.compose) {
    auto [g, f] = pair;
    triples[std::max({g, f, gf})].push_back({g, f, gf});
  }

  std::vector<int> omap(co, 0), mmap(cm, 0);
  std::function<void(int)> rec_mor = [&](int k) {
    if (k == cm) {
      out.push_back({omap, mmap});
      return;
    }
    const SemiMorphism& f = c.base.morphisms[k];
    for (int i = 0; i < static_cast<int>(d.base.morphisms.size()); ++i) {
      const SemiMorphism& img = d.base.morphisms[i];
      if (img.src != omap[f.src] || img.tgt != omap[f.tgt]) continue;
      if (c.marked[k] && !d.marked[i]) continue;
      mmap[k] = i;
      bool ok = true;
      for (auto& [g, ff, gf] : triples[k]) {
        if (d.base.composite(mmap[g], mmap[ff]) != mmap[gf]) {
          ok = false;
          break;
        }
      }
      if (ok) rec_mor(k + 1);
    }
  };
  std::function<void(int)> rec_obj = [&](int o) {
    if (o == co) {
      rec_mor(0);
      return;
    }
    for (int i = 0; i < dobj; ++i) {
      omap[o] = i;
      rec_obj(o + 1);
    }
  };
  if (co == 0) {
    if (cm == 0) out.push_back({{}, {}});
    return out;
  }
  rec_obj(0);
  return out;
}

RelSemiCategory free_relsemicat(const relgraph::RelGraph& x) {
  if (!relgraph::is_acyclic(x)) {
    throw std::domain_error(
        "free_relsemicat: the graph has a cycle, so the free relative "
        "semicategory is infinite; use relgraph::free_bounded for bounded "
        "path queries");
  }
  RelSemiCategory c;
  for (int v = 0; v < x.vertices; ++v) c.base.objects.push_back(std::to_string(v));
  std::map<relgraph::Path, int> index;
  // acyclic: every path has at most edge_count() edges
  for (int n = 1; n <= std::max(1, x.edge_count()); ++n) {
    for (auto& p : relgraph::enumerate_paths(x, n)) {
      std::string id = "p";
      for (size_t i = 0; i < p.edges.size(); ++i) {
        id += (i ? "." : "") + std::to_string(p.edges[i]);
      }
      index[p] = static_cast<int>(c.base.morphisms.size());
      c.base.morphisms.push_back({id, relgraph::path_src(x, p), relgraph::path_tgt(x, p)});
      c.marked.push_back(relgraph::path_marked(x, p));
    }
  }
  std::vector<relgraph::Path> paths(index.size());
  for (auto& [p, i] : index) paths[i] = p;
  for (int g = 0; g < static_cast<int>(paths.size()); ++g) {
    for (int f = 0; f < static_cast<int>(paths.size()); ++f) {
      if (!c.base.composable(g, f)) continue;
      auto it = index.find(relgraph::concat(x, paths[f], paths[g]));
      if (it == index.end()) throw std::logic_error("free_relsemicat: missing composite path");
      c.base.compose[{g, f}] = it->second;
    }
  }
  return c;
}

ForgetfulResult forgetful_indexed(const RelSemiCategory& c) {
  int m = static_cast<int>(c.base.morphisms.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int i) {
    return std::make_tuple(c.base.morphisms[i].src, c.base.morphisms[i].tgt,
                           static_cast<bool>(c.marked[i]));
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return key(a) < key(b); });
  std::vector<std::tuple<int, int, bool>> es;
  for (int i : order) es.push_back(key(i));
  return {relgraph::RelGraph(static_cast<int>(c.base.objects.size()), std::move(es)),
          std::move(order)};
}

relgraph::RelGraph forgetful(const RelSemiCategory& c) {
  return forgetful_indexed(c).graph;
}

RelSemiCategory flat(const SemiCategory& c) {
  return {c, std::vector<bool>(c.morphisms.size(), false)};
}

RelSemiCategory sharp(const SemiCategory& c) {
  return {c, std::vector<bool>(c.morphisms.size(), true)};
}

bool structurally_equal(const RelSemiCategory& a, const RelSemiCategory& b) {
  if (a.base.objects.size() != b.base.objects.size()) return false;
  if (a.base.morphisms.size() != b.base.morphisms.size()) return false;
  if (a.marked != b.marked) return false;
  for (size_t i = 0; i < a.base.morphisms.size(); ++i) {
    if (a.base.morphisms[i].src != b.base.morphisms[i].src) return false;
    if (a.base.morphisms[i].tgt != b.base.morphisms[i].tgt) return false;
  }
  return a.base.compose == b.base.compose;
}

}  // namespace fatdelta::semicat
