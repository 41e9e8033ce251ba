#include "fatdelta/arities.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace fatdelta::arities {

namespace rg = fatdelta::relgraph;

GenericMapData generic_factor_string(bool sharp, int n) {
  if (n < 1) throw std::invalid_argument("generic_factor_string: length must be >= 1");
  GenericMapData g;
  g.generator = rg::linear_relgraph(sharp ? "m" : "u");
  g.middle = rg::linear_relgraph(std::string(n, sharp ? 'm' : 'u'));
  rg::Path maximal;
  for (int e = 0; e < n; ++e) maximal.edges.push_back(e);
  g.assignment.push_back(std::move(maximal));
  return g;
}

AritySpec::AritySpec(int epsilon_, std::vector<int> lengths_)
    : epsilon(epsilon_), lengths(std::move(lengths_)) {
  if (epsilon != 0 && epsilon != 1) throw std::invalid_argument("AritySpec: sign must be 0 or 1");
  if (lengths.empty()) throw std::invalid_argument("AritySpec: block lengths must be non-empty");
  for (int m : lengths) {
    if (m < 1) throw std::invalid_argument("AritySpec: block lengths must be >= 1");
  }
}

relgraph::RelGraph alternating_generator(int n, int epsilon) {
  std::string s(n, 'u');
  for (int i = 0; i < n; ++i) {
    bool marked = (i % 2 == 0) == (epsilon == 0);
    s[i] = marked ? 'm' : 'u';
  }
  return rg::linear_relgraph(s);
}

Arity arity_of(const AritySpec& spec) {
  int n = static_cast<int>(spec.lengths.size());
  Arity a;
  std::string marking;
  for (int i = 0; i < n; ++i) {
    bool marked = (i % 2 == 0) == (spec.epsilon == 0);
    marking += std::string(spec.lengths[i], marked ? 'm' : 'u');
  }
  a.eta = fat::FatObject(marking);
  a.generic.generator = alternating_generator(n, spec.epsilon);
  a.generic.middle = psi(a.eta);
  int offset = 0;
  for (int i = 0; i < n; ++i) {
    rg::Path p;
    for (int e = 0; e < spec.lengths[i]; ++e) p.edges.push_back(offset + e);
    a.generic.assignment.push_back(std::move(p));
    offset += spec.lengths[i];
  }
  return a;
}

fat::FatObject phi(const relgraph::RelGraph& linear) {
  if (!rg::is_linear(linear)) {
    throw std::invalid_argument("phi: the graph is not a linearly ordered graph");
  }
  std::string marking(linear.edge_count(), 'u');
  for (int e = 0; e < linear.edge_count(); ++e) {
    if (linear.marked[e]) marking[e] = 'm';
  }
  return fat::FatObject(marking);
}

fat::FatMorphism phi_on_morphism(const relgraph::RelGraphMap& g) {
  if (!rg::is_linear(g.dom) || !rg::is_linear(g.cod)) {
    throw std::invalid_argument("phi_on_morphism: both graphs must be linear");
  }
  return {phi(g.dom), phi(g.cod), g.vertex_map};
}

relgraph::RelGraph psi(const fat::FatObject& x) { return rg::linear_relgraph(x.marking); }

relgraph::RelGraphMap psi_on_morphism(const fat::FatMorphism& f) {
  if (!fat::is_inert(f)) {
    throw std::invalid_argument(
        "psi_on_morphism: only inert morphisms correspond to graph morphisms; "
        "factor the morphism first");
  }
  std::vector<int> em(f.dom.edges());
  for (int i = 0; i < f.dom.edges(); ++i) em[i] = f.top[i];
  return {psi(f.dom), psi(f.cod), f.top, std::move(em)};
}

relgraph::RelGraphMap as_map_into_free(const GenericMapData& g,
                                       const relgraph::BoundedFree& fmid) {
  if (!(fmid.base == g.middle)) {
    throw std::invalid_argument("as_map_into_free: free object is not over the middle graph");
  }
  int n = g.generator.edge_count();
  std::vector<int> vm(n + 1), em(n);
  vm[0] = g.assignment.empty() ? 0 : rg::path_src(g.middle, g.assignment[0]);
  for (int i = 0; i < n; ++i) {
    int idx = rg::free_edge_of_path(fmid, g.assignment[i]);
    if (idx < 0) throw std::invalid_argument("as_map_into_free: bound too small for a block");
    em[i] = idx;
    vm[i + 1] = rg::path_tgt(g.middle, g.assignment[i]);
  }
  return {g.generator, fmid.graph, std::move(vm), std::move(em)};
}

bool square_commutes(const GenericSquare& s) {
  // two edges of a free object are equal exactly when their paths are, so
  // the comparison runs edgewise over the generator without materialising
  // the free object of the shared codomain
  const rg::RelGraph& gen = s.left.dom;
  for (int v = 0; v < gen.vertices; ++v) {
    if (s.right.vertex_map[s.top.vertex_map[v]] !=
        s.bottom.vertex_map[s.left.vertex_map[v]]) {
      return false;
    }
  }
  for (int e = 0; e < gen.edge_count(); ++e) {
    if (!(rg::map_path(s.right, s.ambient_free.paths[s.top.edge_map[e]]) ==
          rg::map_path(s.bottom, s.middle_free.paths[s.left.edge_map[e]]))) {
      return false;
    }
  }
  return true;
}

FillerResult check_generic(const GenericSquare& s) {
  if (!(s.left.dom == s.top.dom)) {
    throw std::invalid_argument("check_generic: left and top legs have different domains");
  }
  if (!(s.right.cod == s.bottom.cod)) {
    throw std::invalid_argument("check_generic: right and bottom legs have different codomains");
  }
  if (!square_commutes(s)) {
    throw std::invalid_argument("check_generic: the square does not commute");
  }
  FillerResult r;
  const rg::RelGraph& mid = s.middle_free.base;
  const rg::RelGraph& amb = s.ambient_free.base;

  // the free-leg equation pins the filler on every edge covered by the left
  // leg's paths, position by position; a length or overlap conflict means no
  // filler can exist
  std::vector<int> edge_pin(mid.edge_count(), -1);
  std::vector<int> vertex_pin(mid.vertices, -1);
  bool impossible = false;
  auto pin_vertex = [&](int v, int want) {
    if (vertex_pin[v] >= 0 && vertex_pin[v] != want) impossible = true;
    vertex_pin[v] = want;
  };
  for (int v = 0; v < s.left.dom.vertices && !impossible; ++v) {
    pin_vertex(s.left.vertex_map[v], s.top.vertex_map[v]);
  }
  for (int i = 0; i < s.left.dom.edge_count() && !impossible; ++i) {
    const rg::Path& block = s.middle_free.paths[s.left.edge_map[i]];
    const rg::Path& image = s.ambient_free.paths[s.top.edge_map[i]];
    if (block.length() != image.length()) {
      impossible = true;
      break;
    }
    for (int p = 0; p < block.length() && !impossible; ++p) {
      int e = block.edges[p], want = image.edges[p];
      if (edge_pin[e] >= 0 && edge_pin[e] != want) {
        impossible = true;
        break;
      }
      edge_pin[e] = want;
      pin_vertex(mid.edges[e].src, amb.edges[want].src);
      pin_vertex(mid.edges[e].tgt, amb.edges[want].tgt);
    }
  }

  if (!impossible) {
    // complete the remaining free choices by backtracking and verify both
    // equations on every complete candidate
    std::vector<int> vm(mid.vertices, -1), em(mid.edge_count(), -1);
    std::function<void(int)> assign_edges = [&](int e) {
      if (e == mid.edge_count()) {
        rg::RelGraphMap d(mid, amb, vm, em);
        if (!(rg::compose(s.right, d) == s.bottom)) return;
        // the free-leg equation, edgewise over the generator
        for (int v = 0; v < s.left.dom.vertices; ++v) {
          if (d.vertex_map[s.left.vertex_map[v]] != s.top.vertex_map[v]) return;
        }
        for (int i = 0; i < s.left.dom.edge_count(); ++i) {
          if (!(rg::map_path(d, s.middle_free.paths[s.left.edge_map[i]]) ==
                s.ambient_free.paths[s.top.edge_map[i]])) {
            return;
          }
        }
        r.fillers.push_back(std::move(d));
        return;
      }
      int lo = 0, hi = amb.edge_count() - 1;
      if (edge_pin[e] >= 0) lo = hi = edge_pin[e];
      for (int c = lo; c <= hi; ++c) {
        if (amb.edges[c].src != vm[mid.edges[e].src]) continue;
        if (amb.edges[c].tgt != vm[mid.edges[e].tgt]) continue;
        if (mid.marked[e] && !amb.marked[c]) continue;
        em[e] = c;
        assign_edges(e + 1);
      }
      em[e] = -1;
    };
    std::function<void(int)> assign_vertices = [&](int v) {
      if (v == mid.vertices) {
        assign_edges(0);
        return;
      }
      int lo = 0, hi = amb.vertices - 1;
      if (vertex_pin[v] >= 0) lo = hi = vertex_pin[v];
      for (int c = lo; c <= hi; ++c) {
        vm[v] = c;
        assign_vertices(v + 1);
      }
      vm[v] = -1;
    };
    assign_vertices(0);
  }

  r.outcome = r.fillers.empty()
                  ? FillerOutcome::None
                  : (r.fillers.size() == 1 ? FillerOutcome::Unique : FillerOutcome::Multiple);
  return r;
}

namespace {

std::string path_str(const rg::Path& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.edges.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.edges[i]);
  }
  return s + "]";
}

// sequences of composable paths in x with total length exactly n
void paths_of_paths_rec(const rg::RelGraph& x, int remaining, int end_vertex, bool first,
                        std::vector<rg::Path>& cur,
                        std::vector<std::vector<rg::Path>>& out) {
  if (remaining == 0) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (int len = 1; len <= remaining; ++len) {
    for (auto& p : rg::enumerate_paths(x, len)) {
      if (!first && rg::path_src(x, p) != end_vertex) continue;
      cur.push_back(p);
      paths_of_paths_rec(x, remaining - len, rg::path_tgt(x, p), false, cur, out);
      cur.pop_back();
    }
  }
}

void compositions_rec(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (int k = 1; k <= n; ++k) {
    cur.push_back(k);
    compositions_rec(n - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MuCheckData compute_mu_data(const relgraph::RelGraph& x, int bound) {
  MuCheckData d;
  d.paths_of_paths.resize(bound);
  d.pairs.resize(bound);
  for (int n = 1; n <= bound; ++n) {
    std::vector<rg::Path> cur;
    paths_of_paths_rec(x, n, -1, true, cur, d.paths_of_paths[n - 1]);
    std::vector<std::vector<int>> comps;
    std::vector<int> ctmp;
    compositions_rec(n, ctmp, comps);
    for (auto& k : comps) {
      for (auto& p : rg::enumerate_paths(x, n)) {
        d.pairs[n - 1].emplace_back(k, p);
      }
    }
  }
  return d;
}

CheckReport verify_mu_data(const relgraph::RelGraph& x, const MuCheckData& data) {
  CheckReport rep;
  rep.suite = "mu-square";
  for (int n = 1; n <= static_cast<int>(data.paths_of_paths.size()); ++n) {
    const auto& lhs = data.paths_of_paths[n - 1];
    const auto& rhs = data.pairs[n - 1];
    std::vector<std::pair<std::vector<int>, rg::Path>> images;
    bool bad = false;
    for (const auto& pp : lhs) {
      std::vector<int> lengths;
      for (const auto& p : pp) lengths.push_back(p.length());
      rg::Path flat = rg::mult(x, pp, n);
      // marking must transport: all blocks marked iff the concatenation is
      bool blocks_marked = std::all_of(pp.begin(), pp.end(),
                                       [&](const rg::Path& p) { return rg::path_marked(x, p); });
      if (blocks_marked != rg::path_marked(x, flat)) {
        rep.violation("length " + std::to_string(n) + ": marking mismatch at " + path_str(flat));
        bad = true;
      }
      images.emplace_back(std::move(lengths), std::move(flat));
    }
    ++rep.checked;
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      rep.violation("length " + std::to_string(n) + ": canonical map is not injective");
      bad = true;
    }
    auto expected = rhs;
    std::sort(expected.begin(), expected.end());
    if (sorted != expected) {
      rep.violation("length " + std::to_string(n) +
                    ": partitioned paths do not biject with paths of paths (" +
                    std::to_string(sorted.size()) + " vs " + std::to_string(expected.size()) + ")");
      bad = true;
    }
    if (!bad) {
      rep.note("length " + std::to_string(n) + ": " + std::to_string(lhs.size()) +
               " paths of paths matched");
    }
  }
  return rep;
}

CheckReport check_cartesian(
    const relgraph::RelGraph& x, int bound,
    const std::vector<std::pair<relgraph::RelGraphMap, relgraph::RelGraphMap>>& cospans) {
  if (bound < 2) throw std::invalid_argument("check_cartesian: bound must be >= 2");
  CheckReport rep;
  rep.suite = "cartesian";

  // (a) unit square at the terminal map: the fibre of the length map over
  // the single loop is x itself, marking included
  {
    rg::BoundedFree fx = rg::free_bounded(x, bound);
    rg::RelGraph t = rg::terminal_relgraph();
    rg::BoundedFree ft = rg::free_bounded(t, bound);
    rg::RelGraphMap fbang = rg::induced_free_map(fx, ft, rg::terminal_map(x));
    int loop1 = rg::free_edge_of_path(ft, rg::Path{{0}});
    rg::RelGraphMap nu_t(t, ft.graph, {0}, {loop1});
    rg::PullbackResult pb = rg::pullback(fbang, nu_t);

    bool ok = pb.graph.vertices == x.vertices && pb.graph.edge_count() == x.edge_count();
    if (ok) {
      // vertices of the pullback are pairs (v, 0) in order, so the vertex
      // bijection is forced; compare the edge content positionally
      std::vector<std::tuple<int, int, bool>> got, want;
      for (int e = 0; e < pb.graph.edge_count(); ++e) {
        const rg::Path& p = fx.paths[pb.edge_pairs[e].first];
        got.emplace_back(rg::path_src(x, p), rg::path_tgt(x, p), pb.graph.marked[e]);
      }
      for (int e = 0; e < x.edge_count(); ++e) {
        want.emplace_back(x.edges[e].src, x.edges[e].tgt, static_cast<bool>(x.marked[e]));
      }
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      ok = got == want;
    }
    ++rep.checked;
    if (!ok) {
      rep.violation("unit square at the terminal map is not a pullback");
    } else {
      rep.note("unit square: fibre over the length-1 loop recovers the graph");
    }
  }

  // (b) multiplication square, degreewise
  {
    CheckReport mu = verify_mu_data(x, compute_mu_data(x, bound));
    rep.checked += mu.checked;
    for (auto& v : mu.violations) rep.violation(v);
    for (auto& n : mu.notes) rep.note(n);
  }

  // (c) path sets of pullbacks, degreewise, for each cospan
  {
    std::vector<std::pair<rg::RelGraphMap, rg::RelGraphMap>> all = cospans;
    all.emplace_back(rg::terminal_map(x), rg::terminal_map(x));
    int ci = 0;
    for (auto& [f, g] : all) {
      rg::PullbackResult pb = rg::pullback(f, g);
      for (int n = 1; n <= bound; ++n) {
        std::vector<std::pair<rg::Path, rg::Path>> images;
        for (auto& p : rg::enumerate_paths(pb.graph, n)) {
          images.emplace_back(rg::map_path(pb.proj1, p), rg::map_path(pb.proj2, p));
        }
        std::sort(images.begin(), images.end());
        bool bad = false;
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
          rep.violation("cospan " + std::to_string(ci) + " length " + std::to_string(n) +
                        ": path comparison not injective");
          bad = true;
        }
        std::vector<std::pair<rg::Path, rg::Path>> expected;
        for (auto& p : rg::enumerate_paths(f.dom, n)) {
          for (auto& q : rg::enumerate_paths(g.dom, n)) {
            if (rg::map_path(f, p) == rg::map_path(g, q)) expected.emplace_back(p, q);
          }
        }
        std::sort(expected.begin(), expected.end());
        if (images != expected) {
          rep.violation("cospan " + std::to_string(ci) + " length " + std::to_string(n) +
                        ": path sets of the pullback do not match the fibre product");
          bad = true;
        }
        ++rep.checked;
        (void)bad;
      }
      ++ci;
    }
    rep.note("pullback preservation checked on " + std::to_string(all.size()) + " cospan(s)");
  }
  return rep;
}

}  // namespace fatdelta::arities
