#include "fatdelta/fat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace fatdelta::fat {

FatObject::FatObject(std::string marking_) : marking(std::move(marking_)) {
  for (char c : marking) {
    if (c != 'u' && c != 'm') {
      throw std::invalid_argument("FatObject: marking must be a string over {u,m}");
    }
  }
}

int FatObject::marked_count() const {
  return static_cast<int>(std::count(marking.begin(), marking.end(), 'm'));
}

bool FatObject::operator<(const FatObject& o) const {
  if (edges() != o.edges()) return edges() < o.edges();
  // 'u' before 'm' position by position
  for (int i = 0; i < edges(); ++i) {
    if (marking[i] != o.marking[i]) return marking[i] == 'u';
  }
  return false;
}

delta::OrdinalMap epi_of(const FatObject& x) {
  int m = x.edges();
  std::vector<int> im(m + 1);
  int collapsed = 0;
  im[0] = 0;
  for (int v = 1; v <= m; ++v) {
    if (x.is_marked(v - 1)) ++collapsed;
    im[v] = v - collapsed;
  }
  return {m, m - x.marked_count(), std::move(im)};
}

FatObject object_from_epi(const delta::OrdinalMap& e) {
  if (!delta::classify(e).epi) {
    throw std::invalid_argument("object_from_epi: the map is not surjective");
  }
  std::string marking(e.dom, 'u');
  for (int i = 0; i < e.dom; ++i) {
    if (e.images[i] == e.images[i + 1]) marking[i] = 'm';
  }
  return FatObject(marking);
}

bool is_morphism(const FatObject& dom, const FatObject& cod, const std::vector<int>& top) {
  int m = dom.edges();
  if (static_cast<int>(top.size()) != m + 1) return false;
  for (int i = 0; i <= m; ++i) {
    if (top[i] < 0 || top[i] > cod.edges()) return false;
    if (i > 0 && top[i - 1] >= top[i]) return false;
  }
  for (int i = 0; i < m; ++i) {
    if (!dom.is_marked(i)) continue;
    for (int j = top[i]; j < top[i + 1]; ++j) {
      if (!cod.is_marked(j)) return false;
    }
  }
  return true;
}

FatMorphism::FatMorphism(FatObject dom_, FatObject cod_, std::vector<int> top_)
    : dom(std::move(dom_)), cod(std::move(cod_)), top(std::move(top_)) {
  if (!is_morphism(dom, cod, top)) {
    throw std::invalid_argument("FatMorphism: top map violates the marking condition");
  }
}

bool FatMorphism::operator<(const FatMorphism& o) const {
  if (!(dom == o.dom)) return dom < o.dom;
  if (!(cod == o.cod)) return cod < o.cod;
  return top < o.top;
}

delta::OrdinalMap bottom_of(const FatMorphism& f) {
  delta::OrdinalMap e0 = epi_of(f.dom);
  delta::OrdinalMap e1 = epi_of(f.cod);
  std::vector<int> im(e0.cod + 1);
  for (int v = 0; v <= e0.cod; ++v) {
    int s = 0;
    while (e0.images[s] != v) ++s;  // minimal section of the domain epi
    im[v] = e1.images[f.top[s]];
  }
  return {e0.cod, e1.cod, std::move(im)};
}

FatMorphism identity_of(const FatObject& x) {
  std::vector<int> top(x.edges() + 1);
  for (int i = 0; i <= x.edges(); ++i) top[i] = i;
  return {x, x, std::move(top)};
}

FatMorphism compose(const FatMorphism& g, const FatMorphism& f) {
  if (!(f.cod == g.dom)) {
    throw std::invalid_argument("compose: codomain/domain mismatch");
  }
  std::vector<int> top(f.dom.edges() + 1);
  for (int i = 0; i <= f.dom.edges(); ++i) top[i] = g.top[f.top[i]];
  return {f.dom, g.cod, std::move(top)};
}

std::vector<FatMorphism> enumerate_hom(const FatObject& dom, const FatObject& cod,
                                       FatHomClass cls) {
  std::vector<FatMorphism> out;
  int m = dom.edges(), n = cod.edges();
  if (m > n) return out;
  std::vector<int> top(m + 1);
  // strictly increasing (m+1)-subsets of {0..n}, lexicographic
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i == m + 1) {
      if (!is_morphism(dom, cod, top)) return;
      FatMorphism f(dom, cod, top);
      if (cls == FatHomClass::Active && !is_active(f)) return;
      if (cls == FatHomClass::Inert && !is_inert(f)) return;
      out.push_back(std::move(f));
      return;
    }
    for (int v = lo; v <= n - (m - i); ++v) {
      top[i] = v;
      rec(i + 1, v + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<FatObject> enumerate_objects(int max_edges) {
  if (max_edges < 0) throw std::invalid_argument("enumerate_objects: negative bound");
  std::vector<FatObject> out;
  for (int m = 0; m <= max_edges; ++m) {
    for (unsigned bits = 0; bits < (1u << m); ++bits) {
      std::string s(m, 'u');
      for (int i = 0; i < m; ++i) {
        if (bits & (1u << (m - 1 - i))) s[i] = 'm';
      }
      out.push_back(FatObject(s));
    }
  }
  return out;
}

bool is_inert(const FatMorphism& f) {
  for (int i = 0; i < f.dom.edges(); ++i) {
    if (f.top[i + 1] != f.top[i] + 1) return false;
  }
  return true;
}

bool is_active(const FatMorphism& f) {
  if (f.top.front() != 0 || f.top.back() != f.cod.edges()) return false;
  for (int i = 0; i < f.dom.edges(); ++i) {
    for (int j = f.top[i]; j < f.top[i + 1]; ++j) {
      if (f.cod.is_marked(j) != f.dom.is_marked(i)) return false;
    }
  }
  return true;
}

FatFactorization active_inert_factor(const FatMorphism& f) {
  int m = f.dom.edges();
  int lo = f.top.front(), hi = f.top.back();
  std::string middle(hi - lo, 'u');
  for (int i = 0; i < m; ++i) {
    for (int j = f.top[i]; j < f.top[i + 1]; ++j) {
      middle[j - lo] = f.dom.marking[i];
    }
  }
  FatObject mid(middle);
  std::vector<int> atop(m + 1), itop(hi - lo + 1);
  for (int i = 0; i <= m; ++i) atop[i] = f.top[i] - lo;
  for (int j = 0; j <= hi - lo; ++j) itop[j] = j + lo;
  return {FatMorphism(f.dom, mid, std::move(atop)),
          FatMorphism(mid, f.cod, std::move(itop))};
}

FatObject vee(const FatObject& x, const FatObject& y) {
  return FatObject(x.marking + y.marking);
}

FatObject flat_object(int n) { return FatObject(std::string(n, 'u')); }
FatObject sharp_object(int n) { return FatObject(std::string(n, 'm')); }

FatMorphism flat_on_mono(const delta::OrdinalMap& f) {
  if (!delta::classify(f).mono) {
    throw std::invalid_argument("flat_on_mono: the map is not injective");
  }
  return {flat_object(f.dom), flat_object(f.cod), f.images};
}

FatMorphism sharp_on_mono(const delta::OrdinalMap& f) {
  if (!delta::classify(f).mono) {
    throw std::invalid_argument("sharp_on_mono: the map is not injective");
  }
  return {sharp_object(f.dom), sharp_object(f.cod), f.images};
}

delta::OrdinalMap domain_projection(const FatMorphism& f) {
  return {f.dom.edges(), f.cod.edges(), f.top};
}

delta::OrdinalMap codomain_projection(const FatMorphism& f) { return bottom_of(f); }

Degree degree(const FatObject& x) { return {x.edges(), x.marked_count()}; }

FatPushout pushout_active_inert(const FatMorphism& inert_map, const FatMorphism& active_map) {
  if (!is_inert(inert_map)) {
    throw std::invalid_argument("pushout_active_inert: first leg must be inert");
  }
  if (!is_active(active_map)) {
    throw std::invalid_argument("pushout_active_inert: second leg must be active");
  }
  if (!(inert_map.dom == active_map.dom)) {
    throw std::invalid_argument("pushout_active_inert: legs must share their domain");
  }
  const FatObject& y = inert_map.cod;
  int m0 = inert_map.dom.edges();
  int a = inert_map.top.front();
  int b = y.edges() - inert_map.top.back();
  const std::vector<int>& gt = active_map.top;
  int m2 = active_map.cod.edges();

  // corner marking: the prefix and suffix of y verbatim, the middle block
  // transported through the active map's intervals
  std::string w;
  w.reserve(a + m2 + b);
  for (int j = 0; j < a; ++j) w += y.marking[j];
  for (int i = 0; i < m0; ++i) {
    for (int j = gt[i]; j < gt[i + 1]; ++j) w += y.marking[a + i];
  }
  for (int j = 0; j < b; ++j) w += y.marking[a + m0 + j];
  FatObject corner(w);

  std::vector<int> utop(m2 + 1);
  for (int i = 0; i <= m2; ++i) utop[i] = a + i;
  std::vector<int> vtop(y.edges() + 1);
  for (int v = 0; v < a; ++v) vtop[v] = v;
  for (int i = 0; i <= m0; ++i) vtop[a + i] = a + gt[i];
  for (int j = 1; j <= b; ++j) vtop[a + m0 + j] = a + m2 + j;

  return {corner, FatMorphism(active_map.cod, corner, std::move(utop)),
          FatMorphism(y, corner, std::move(vtop))};
}

namespace {
std::string pair_id(int i, int j) {
  if (i < 10 && j < 10) return std::to_string(i) + std::to_string(j);
  return std::to_string(i) + "_" + std::to_string(j);
}
}  // namespace

semicat::RelSemiCategory rso(const FatObject& x) {
  semicat::RelSemiCategory c;
  int m = x.edges();
  for (int v = 0; v <= m; ++v) c.base.objects.push_back(std::to_string(v));
  // pairs ordered by (span, start); the unique morphism i -> j
  std::vector<std::pair<int, int>> pairs;
  for (int span = 1; span <= m; ++span) {
    for (int i = 0; i + span <= m; ++i) pairs.emplace_back(i, i + span);
  }
  auto index_of = [&](int i, int j) {
    for (int k = 0; k < static_cast<int>(pairs.size()); ++k) {
      if (pairs[k] == std::make_pair(i, j)) return k;
    }
    throw std::logic_error("rso: missing pair");
  };
  for (auto& [i, j] : pairs) {
    c.base.morphisms.push_back({pair_id(i, j), i, j});
    bool all_marked = true;
    for (int e = i; e < j; ++e) all_marked = all_marked && x.is_marked(e);
    c.marked.push_back(all_marked);
  }
  for (int g = 0; g < static_cast<int>(pairs.size()); ++g) {
    for (int f = 0; f < static_cast<int>(pairs.size()); ++f) {
      if (pairs[f].second != pairs[g].first) continue;
      c.base.compose[{g, f}] = index_of(pairs[f].first, pairs[g].second);
    }
  }
  return c;
}

semicat::RelFunctor rso_on_morphism(const FatMorphism& f) {
  int m = f.dom.edges();
  semicat::RelFunctor fun;
  for (int v = 0; v <= m; ++v) fun.object_map.push_back(f.top[v]);
  // morphism (i, j) of the domain maps to (top i, top j) of the codomain,
  // located in the same (span, start) listing
  auto cod_index = [&](int i, int j) {
    int idx = 0;
    for (int span = 1; span <= f.cod.edges(); ++span) {
      for (int s = 0; s + span <= f.cod.edges(); ++s) {
        if (s == i && s + span == j) return idx;
        ++idx;
      }
    }
    throw std::logic_error("rso_on_morphism: missing codomain pair");
  };
  for (int span = 1; span <= m; ++span) {
    for (int i = 0; i + span <= m; ++i) {
      fun.morphism_map.push_back(cod_index(f.top[i], f.top[i + span]));
    }
  }
  return fun;
}

std::string to_text(const FatMorphism& f) {
  std::ostringstream os;
  os << '"' << f.dom.marking << "\" -> \"" << f.cod.marking << "\" top=[";
  for (size_t i = 0; i < f.top.size(); ++i) {
    if (i) os << ',';
    os << f.top[i];
  }
  os << ']';
  return os.str();
}

}  // namespace fatdelta::fat
