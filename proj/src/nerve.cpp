#include "fatdelta/nerve.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace fatdelta::nerve {

MorphismKey key_of(const fat::FatMorphism& f) {
  return {f.dom.marking, f.cod.marking, f.top};
}

fat::FatMorphism morphism_of(const MorphismKey& k) {
  return {fat::FatObject(k.dom), fat::FatObject(k.cod), k.top};
}

const std::vector<std::string>& Presheaf::set_of(const std::string& marking) const {
  auto it = sets.find(marking);
  if (it == sets.end()) throw std::invalid_argument("Presheaf: no set at \"" + marking + "\"");
  return it->second;
}

const std::vector<int>& Presheaf::action(const MorphismKey& k) const {
  auto it = actions.find(k);
  if (it == actions.end()) {
    throw std::invalid_argument("Presheaf: no action stored for \"" + k.dom + "\" -> \"" +
                                k.cod + "\"");
  }
  return it->second;
}

namespace {

// composable sequences of "arrows" (abstract src/tgt/marked triples) whose
// i-th entry is marked wherever the object's edge i is
struct ArrowTable {
  std::vector<int> src, tgt;
  std::vector<bool> marked;
  int count() const { return static_cast<int>(src.size()); }
};

std::vector<std::vector<int>> sequences_for(const ArrowTable& t, const fat::FatObject& x) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == x.edges()) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a < t.count(); ++a) {
      if (!cur.empty() && t.tgt[cur.back()] != t.src[a]) continue;
      if (x.is_marked(i) && !t.marked[a]) continue;
      cur.push_back(a);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

struct NerveBuilder {
  ArrowTable arrows;
  std::vector<std::string> vertex_labels;
  std::vector<std::string> arrow_labels;
  // compose(g after f); -1 when composition is unavailable (graph nerve)
  std::function<int(int, int)> compose2;

  Presheaf build(int bound, bool inert_only) const {
    Presheaf p;
    p.bound = bound;
    std::vector<fat::FatObject> objs = fat::enumerate_objects(bound);
    std::map<std::string, std::map<std::vector<int>, int>> index;
    for (const auto& x : objs) {
      std::vector<std::vector<int>> elems;
      std::vector<std::string> labels;
      if (x.edges() == 0) {
        for (int v = 0; v < static_cast<int>(vertex_labels.size()); ++v) {
          elems.push_back({v});
          labels.push_back(vertex_labels[v]);
        }
      } else {
        elems = sequences_for(arrows, x);
        for (auto& s : elems) {
          std::string l;
          for (size_t i = 0; i < s.size(); ++i) l += (i ? "," : "") + arrow_labels[s[i]];
          labels.push_back(l);
        }
      }
      for (int i = 0; i < static_cast<int>(elems.size()); ++i) index[x.marking][elems[i]] = i;
      p.elements[x.marking] = std::move(elems);
      p.sets[x.marking] = std::move(labels);
    }
    for (const auto& x : objs) {
      for (const auto& y : objs) {
        auto homs = fat::enumerate_hom(x, y, inert_only ? fat::FatHomClass::Inert
                                                        : fat::FatHomClass::All);
        for (const auto& f : homs) {
          const auto& src_elems = p.elements[y.marking];
          std::vector<int> table(src_elems.size());
          for (size_t s = 0; s < src_elems.size(); ++s) {
            table[s] = index[x.marking].at(pull(f, src_elems[s]));
          }
          p.actions[key_of(f)] = std::move(table);
        }
      }
    }
    return p;
  }

  // restriction of an element of the codomain along f
  std::vector<int> pull(const fat::FatMorphism& f, const std::vector<int>& elem) const {
    int m = f.dom.edges();
    if (m == 0) {
      int v = f.top[0];
      if (f.cod.edges() == 0) return elem;  // both are vertex elements
      return {v < f.cod.edges() ? arrows.src[elem[v]] : arrows.tgt[elem[v - 1]]};
    }
    std::vector<int> out(m);
    for (int i = 0; i < m; ++i) {
      int acc = elem[f.top[i]];
      for (int j = f.top[i] + 1; j < f.top[i + 1]; ++j) {
        acc = compose2(elem[j], acc);
      }
      out[i] = acc;
    }
    return out;
  }
};

}  // namespace

Presheaf nerve(const semicat::RelSemiCategory& c, int bound) {
  semicat::ValidationResult v = semicat::validate(c);
  if (!v.ok) throw std::invalid_argument("nerve: invalid relative semicategory: " + v.message);
  NerveBuilder b;
  b.vertex_labels = c.base.objects;
  for (const auto& f : c.base.morphisms) {
    b.arrows.src.push_back(f.src);
    b.arrows.tgt.push_back(f.tgt);
    b.arrow_labels.push_back(f.id);
  }
  for (bool m : c.marked) b.arrows.marked.push_back(m);
  b.compose2 = [&c](int g, int f) { return c.base.composite(g, f); };
  return b.build(bound, false);
}

Presheaf nerve0(const relgraph::RelGraph& x, int bound) {
  NerveBuilder b;
  for (int v = 0; v < x.vertices; ++v) b.vertex_labels.push_back(std::to_string(v));
  for (int e = 0; e < x.edge_count(); ++e) {
    b.arrows.src.push_back(x.edges[e].src);
    b.arrows.tgt.push_back(x.edges[e].tgt);
    b.arrows.marked.push_back(x.marked[e]);
    b.arrow_labels.push_back("e" + std::to_string(e));
  }
  b.compose2 = [](int, int) -> int {
    throw std::logic_error("nerve0: graph elements do not compose");
  };
  return b.build(bound, true);
}

CheckReport functoriality_check(const Presheaf& p) {
  CheckReport rep;
  rep.suite = "presheaf-functoriality";
  for (const auto& [k, table] : p.actions) {
    if (k.dom == k.cod) {
      bool is_id = true;
      for (size_t i = 0; i < k.top.size(); ++i) is_id = is_id && k.top[i] == static_cast<int>(i);
      if (is_id) {
        for (size_t s = 0; s < table.size(); ++s) {
          if (table[s] != static_cast<int>(s)) {
            rep.violation("action of the identity at \"" + k.dom + "\" moves element " +
                          std::to_string(s));
            break;
          }
        }
      }
    }
    ++rep.checked;
  }
  std::map<std::string, std::vector<const std::pair<const MorphismKey, std::vector<int>>*>>
      by_cod;
  for (const auto& entry : p.actions) by_cod[entry.first.cod].push_back(&entry);
  for (const auto& [kg, tg] : p.actions) {
    auto group = by_cod.find(kg.dom);
    if (group == by_cod.end()) continue;
    MorphismKey gf;
    for (const auto* entry : group->second) {
      const MorphismKey& kf = entry->first;
      const std::vector<int>& tf = entry->second;
      // composite key of two stored (hence valid) morphisms
      gf.dom = kf.dom;
      gf.cod = kg.cod;
      gf.top.resize(kf.top.size());
      for (size_t i = 0; i < kf.top.size(); ++i) gf.top[i] = kg.top[kf.top[i]];
      auto it = p.actions.find(gf);
      if (it == p.actions.end()) continue;
      const std::vector<int>& tgf = it->second;
      for (size_t s = 0; s < tg.size(); ++s) {
        if (tgf[s] != tf[tg[s]]) {
          rep.violation("composite action mismatch along \"" + kf.dom + "\" -> \"" + kf.cod +
                        "\" -> \"" + kg.cod + "\" at element " + std::to_string(s));
          break;
        }
      }
      ++rep.checked;
    }
  }
  return rep;
}

namespace {

struct CoreKeys {
  MorphismKey vertex0{"", "u", {0}};
  MorphismKey vertex1{"", "u", {1}};
  MorphismKey u_to_m{"u", "m", {0, 1}};
  static MorphismKey edge_incl(const std::string& cod, int i) { return {"u", cod, {i, i + 1}}; }
  static MorphismKey marked_incl(const std::string& cod, int i) { return {"m", cod, {i, i + 1}}; }
};

}  // namespace

CheckReport segal_check(const Presheaf& p) {
  CheckReport rep;
  rep.suite = "segal";
  {
    CheckReport fun = functoriality_check(p);
    rep.checked += fun.checked;
    for (auto& v : fun.violations) rep.violation(v);
  }
  if (p.bound < 1) return rep;
  CoreKeys core;

  // wide-subgraph separation: marked elements embed into edge elements
  {
    const std::vector<int>& tbl = p.action(core.u_to_m);
    std::set<int> seen;
    for (int v : tbl) {
      if (!seen.insert(v).second) {
        rep.violation("separation fails: two marked elements restrict to one edge element");
        break;
      }
    }
    ++rep.checked;
  }

  const std::vector<int>& src = p.action(core.vertex0);
  const std::vector<int>& tgt = p.action(core.vertex1);
  const std::vector<int>& unmark = p.action(core.u_to_m);
  int edge_count = static_cast<int>(p.set_of("u").size());
  std::vector<std::vector<int>> preimages(edge_count);
  for (int w = 0; w < static_cast<int>(unmark.size()); ++w) preimages[unmark[w]].push_back(w);

  for (const auto& x : fat::enumerate_objects(p.bound)) {
    int m = x.edges();
    if (m < 2) continue;
    // compatible families: an edge element per edge, chained at the
    // vertices, plus a marked witness per marked edge; the tuple interleaves
    // edge elements and witnesses in edge order
    std::set<std::vector<int>> families;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int i, int prev_edge) {
      if (i == m) {
        families.insert(cur);
        return;
      }
      for (int e = 0; e < edge_count; ++e) {
        if (i > 0 && tgt[prev_edge] != src[e]) continue;
        cur.push_back(e);
        if (x.is_marked(i)) {
          for (int w : preimages[e]) {
            cur.push_back(w);
            rec(i + 1, e);
            cur.pop_back();
          }
        } else {
          rec(i + 1, e);
        }
        cur.pop_back();
      }
    };
    rec(0, -1);

    const auto& sx = p.set_of(x.marking);
    std::set<std::vector<int>> images;
    bool failed = false;
    for (int s = 0; s < static_cast<int>(sx.size()) && !failed; ++s) {
      std::vector<int> fam;
      for (int i = 0; i < m; ++i) {
        int e = p.action(CoreKeys::edge_incl(x.marking, i))[s];
        fam.push_back(e);
        if (x.is_marked(i)) fam.push_back(p.action(CoreKeys::marked_incl(x.marking, i))[s]);
      }
      if (!families.count(fam)) {
        rep.violation("object \"" + x.marking + "\": element " + sx[s] +
                      " restricts to an incompatible family");
        failed = true;
        break;
      }
      if (!images.insert(fam).second) {
        rep.violation("object \"" + x.marking + "\": Segal map is not injective");
        failed = true;
        break;
      }
    }
    if (!failed && images.size() != families.size()) {
      rep.violation("object \"" + x.marking + "\": Segal map is not surjective (" +
                    std::to_string(images.size()) + " of " + std::to_string(families.size()) +
                    " families reached)");
    }
    ++rep.checked;
  }
  return rep;
}

relgraph::RelGraph segal_graph(const Presheaf& p) {
  CoreKeys core;
  const std::vector<int>& src = p.action(core.vertex0);
  const std::vector<int>& tgt = p.action(core.vertex1);
  const std::vector<int>& unmark = p.action(core.u_to_m);
  std::vector<bool> marked(p.set_of("u").size(), false);
  for (int v : unmark) marked[v] = true;
  std::vector<std::tuple<int, int, bool>> es;
  for (int e = 0; e < static_cast<int>(src.size()); ++e) {
    es.emplace_back(src[e], tgt[e], static_cast<bool>(marked[e]));
  }
  return {static_cast<int>(p.set_of("").size()), std::move(es)};
}

std::vector<NaturalTransformation> enumerate_nat(const Presheaf& p, const Presheaf& q) {
  if (p.bound != q.bound) throw std::invalid_argument("enumerate_nat: bounds differ");
  std::vector<fat::FatObject> objs = fat::enumerate_objects(p.bound);
  std::vector<NaturalTransformation> out;
  NaturalTransformation cur;

  // keys grouped by codomain object, skipping endomorphisms (identities)
  std::map<std::string, std::vector<MorphismKey>> incoming;
  for (const auto& [k, tbl] : p.actions) {
    if (k.dom != k.cod) incoming[k.cod].push_back(k);
  }

  std::function<void(size_t)> rec = [&](size_t oi) {
    if (oi == objs.size()) {
      out.push_back(cur);
      return;
    }
    const std::string& x = objs[oi].marking;
    int np = static_cast<int>(p.set_of(x).size());
    int nq = static_cast<int>(q.set_of(x).size());
    std::vector<std::vector<int>> cands(np);
    for (int s = 0; s < np; ++s) {
      for (int t = 0; t < nq; ++t) {
        bool ok = true;
        for (const MorphismKey& k : incoming[x]) {
          const std::vector<int>& ap = p.action(k);
          const std::vector<int>& aq = q.action(k);
          if (aq[t] != cur.components.at(k.dom)[ap[s]]) {
            ok = false;
            break;
          }
        }
        if (ok) cands[s].push_back(t);
      }
      if (cands[s].empty()) return;
    }
    std::vector<int> comp(np, 0);
    std::function<void(int)> assign = [&](int s) {
      if (s == np) {
        cur.components[x] = comp;
        rec(oi + 1);
        cur.components.erase(x);
        return;
      }
      for (int t : cands[s]) {
        comp[s] = t;
        assign(s + 1);
      }
    };
    assign(0);
  };
  rec(0);
  return out;
}

NaturalTransformation nat_of_functor(const semicat::RelSemiCategory& c,
                                     const semicat::RelSemiCategory& d,
                                     const semicat::RelFunctor& F, const Presheaf& nc,
                                     const Presheaf& nd) {
  (void)c;
  (void)d;
  NaturalTransformation nat;
  for (const auto& [marking, elems] : nc.elements) {
    std::map<std::vector<int>, int> index;
    const auto& delems = nd.elements.at(marking);
    for (int i = 0; i < static_cast<int>(delems.size()); ++i) index[delems[i]] = i;
    std::vector<int> comp;
    bool edgeless = marking.empty();
    for (const auto& seq : elems) {
      std::vector<int> mapped;
      for (int v : seq) mapped.push_back(edgeless ? F.object_map[v] : F.morphism_map[v]);
      comp.push_back(index.at(mapped));
    }
    nat.components[marking] = std::move(comp);
  }
  return nat;
}

CheckReport nerve_theorem_check(const semicat::RelSemiCategory& c,
                                const semicat::RelSemiCategory& d, int bound) {
  CheckReport rep;
  rep.suite = "nerve-theorem";
  Presheaf nc = nerve(c, bound);
  Presheaf nd = nerve(d, bound);
  std::vector<semicat::RelFunctor> functors = semicat::enumerate_functors(c, d);
  std::vector<NaturalTransformation> nats = enumerate_nat(nc, nd);
  rep.note("functors: " + std::to_string(functors.size()) +
           ", natural transformations: " + std::to_string(nats.size()));
  if (functors.size() != nats.size()) {
    rep.violation("counts differ: " + std::to_string(functors.size()) + " functors vs " +
                  std::to_string(nats.size()) + " natural transformations");
  }
  std::set<NaturalTransformation> nat_set(nats.begin(), nats.end());
  std::set<NaturalTransformation> images;
  for (const auto& F : functors) {
    NaturalTransformation nat = nat_of_functor(c, d, F, nc, nd);
    if (!nat_set.count(nat)) {
      rep.violation("the nerve of a functor is not a natural transformation of the table");
    }
    if (!images.insert(nat).second) {
      rep.violation("two functors induce the same natural transformation");
    }
  }
  rep.checked = static_cast<long long>(functors.size());
  return rep;
}

semicat::RelSemiCategory reconstruct_semicat(const Presheaf& p) {
  if (p.bound < 2) {
    throw std::invalid_argument("reconstruct_semicat: composition needs bound >= 2");
  }
  CoreKeys core;
  semicat::RelSemiCategory c;
  c.base.objects = p.set_of("");
  const std::vector<int>& src = p.action(core.vertex0);
  const std::vector<int>& tgt = p.action(core.vertex1);
  const std::vector<int>& unmark = p.action(core.u_to_m);
  std::vector<bool> marked(p.set_of("u").size(), false);
  for (int v : unmark) marked[v] = true;
  for (size_t e = 0; e < p.set_of("u").size(); ++e) {
    c.base.morphisms.push_back({p.set_of("u")[e], src[e], tgt[e]});
    c.marked.push_back(marked[e]);
  }
  // composition: locate the unique two-string element with the given edge
  // restrictions and take its outer-edge restriction
  const std::vector<int>& first = p.action(CoreKeys::edge_incl("uu", 0));
  const std::vector<int>& second = p.action(CoreKeys::edge_incl("uu", 1));
  const std::vector<int>& outer = p.action(MorphismKey{"u", "uu", {0, 2}});
  std::map<std::pair<int, int>, int> composite;
  for (size_t s = 0; s < p.set_of("uu").size(); ++s) {
    auto key = std::make_pair(first[s], second[s]);
    if (composite.count(key)) {
      throw std::invalid_argument("reconstruct_semicat: the Segal map at \"uu\" is not injective");
    }
    composite[key] = outer[s];
  }
  for (size_t g = 0; g < c.base.morphisms.size(); ++g) {
    for (size_t f = 0; f < c.base.morphisms.size(); ++f) {
      if (!c.base.composable(static_cast<int>(g), static_cast<int>(f))) continue;
      auto it = composite.find({static_cast<int>(f), static_cast<int>(g)});
      if (it == composite.end()) {
        throw std::invalid_argument("reconstruct_semicat: a composable pair has no two-string element");
      }
      c.base.compose[{static_cast<int>(g), static_cast<int>(f)}] = it->second;
    }
  }
  return c;
}

bool is_nerve_of_reconstruction(const Presheaf& p, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  semicat::RelSemiCategory c;
  try {
    c = reconstruct_semicat(p);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  semicat::ValidationResult v = semicat::validate(c);
  if (!v.ok) return fail("reconstruction is not a relative semicategory: " + v.message);
  Presheaf q = nerve(c, p.bound);

  // elementwise identification via Segal families: an element corresponds
  // to the morphism sequence of its edge restrictions
  std::map<std::string, std::vector<int>> phi;
  for (const auto& x : fat::enumerate_objects(p.bound)) {
    int m = x.edges();
    const auto& sp = p.set_of(x.marking);
    const auto& sq = q.set_of(x.marking);
    if (sp.size() != sq.size()) {
      return fail("set sizes differ at \"" + x.marking + "\"");
    }
    std::vector<int>& comp = phi[x.marking];
    comp.resize(sp.size());
    if (m == 0) {
      for (size_t s = 0; s < sp.size(); ++s) comp[s] = static_cast<int>(s);
      continue;
    }
    std::map<std::vector<int>, int> q_index;
    for (size_t t = 0; t < q.elements.at(x.marking).size(); ++t) {
      q_index[q.elements.at(x.marking)[t]] = static_cast<int>(t);
    }
    for (size_t s = 0; s < sp.size(); ++s) {
      std::vector<int> seq(m);
      if (x.marking == "m") {
        seq[0] = p.action(MorphismKey{"u", "m", {0, 1}})[s];
      } else if (x.marking == "u") {
        seq[0] = static_cast<int>(s);
      } else {
        for (int i = 0; i < m; ++i) {
          seq[i] = p.action(CoreKeys::edge_incl(x.marking, i))[s];
        }
        // marked positions are represented by the morphism itself in the
        // nerve; the witness element must restrict to the same edge, which
        // separation makes automatic
      }
      auto it = q_index.find(seq);
      if (it == q_index.end()) {
        return fail("element " + sp[s] + " at \"" + x.marking +
                    "\" has no counterpart in the reconstruction");
      }
      comp[s] = it->second;
    }
    std::set<int> image(comp.begin(), comp.end());
    if (image.size() != comp.size()) {
      return fail("identification at \"" + x.marking + "\" is not injective");
    }
  }

  // the identification must commute with every stored action
  for (const auto& [k, table] : p.actions) {
    auto it = q.actions.find(k);
    if (it == q.actions.end()) return fail("reconstruction lacks an action");
    const std::vector<int>& qt = it->second;
    const std::vector<int>& phd = phi.at(k.dom);
    const std::vector<int>& phc = phi.at(k.cod);
    for (size_t s = 0; s < table.size(); ++s) {
      if (phd[table[s]] != qt[phc[s]]) {
        return fail("identification does not commute with the action \"" + k.dom +
                    "\" -> \"" + k.cod + "\"");
      }
    }
  }
  return true;
}

bool reconstruct_nat(const Presheaf& p, const Presheaf& q,
                     const NaturalTransformation& core, NaturalTransformation& out) {
  out = NaturalTransformation{};
  for (const std::string& s : {std::string(""), std::string("u"), std::string("m")}) {
    auto it = core.components.find(s);
    if (it == core.components.end()) return false;
    out.components[s] = it->second;
  }
  for (const auto& x : fat::enumerate_objects(p.bound)) {
    int m = x.edges();
    if (m < 2) continue;
    int np = static_cast<int>(p.set_of(x.marking).size());
    int nq = static_cast<int>(q.set_of(x.marking).size());
    std::vector<int> comp(np, -1);
    for (int s = 0; s < np; ++s) {
      // push the source's family through the core components, then look for
      // the unique target element with that family
      std::vector<int> want;
      for (int i = 0; i < m; ++i) {
        want.push_back(out.components["u"][p.action(CoreKeys::edge_incl(x.marking, i))[s]]);
        if (x.is_marked(i)) {
          want.push_back(out.components["m"][p.action(CoreKeys::marked_incl(x.marking, i))[s]]);
        }
      }
      int found = -1;
      for (int t = 0; t < nq; ++t) {
        std::vector<int> fam;
        for (int i = 0; i < m; ++i) {
          fam.push_back(q.action(CoreKeys::edge_incl(x.marking, i))[t]);
          if (x.is_marked(i)) fam.push_back(q.action(CoreKeys::marked_incl(x.marking, i))[t]);
        }
        if (fam == want) {
          if (found >= 0) return false;
          found = t;
        }
      }
      if (found < 0) return false;
      comp[s] = found;
    }
    out.components[x.marking] = std::move(comp);
  }
  return true;
}

}  // namespace fatdelta::nerve
