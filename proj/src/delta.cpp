#include "fatdelta/delta.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fatdelta::delta {

OrdinalMap::OrdinalMap(int dom_, int cod_, std::vector<int> images_)
    : dom(dom_), cod(cod_), images(std::move(images_)) {
  if (dom < 0 || cod < 0) {
    throw std::invalid_argument("OrdinalMap: ordinals must be non-negative");
  }
  if (static_cast<int>(images.size()) != dom + 1) {
    throw std::invalid_argument("OrdinalMap: image table must have dom+1 entries");
  }
  for (int i = 0; i <= dom; ++i) {
    if (images[i] < 0 || images[i] > cod) {
      throw std::invalid_argument("OrdinalMap: image value out of range");
    }
    if (i > 0 && images[i - 1] > images[i]) {
      throw std::invalid_argument("OrdinalMap: image table must be weakly monotone");
    }
  }
}

bool OrdinalMap::operator<(const OrdinalMap& o) const {
  if (dom != o.dom) return dom < o.dom;
  if (cod != o.cod) return cod < o.cod;
  return images < o.images;
}

OrdinalMap identity(int n) {
  std::vector<int> im(n + 1);
  for (int i = 0; i <= n; ++i) im[i] = i;
  return {n, n, std::move(im)};
}

OrdinalMap compose(const OrdinalMap& g, const OrdinalMap& f) {
  if (f.cod != g.dom) {
    throw std::invalid_argument("compose: codomain of first-applied map (" +
                                std::to_string(f.cod) + ") != domain of second (" +
                                std::to_string(g.dom) + ")");
  }
  std::vector<int> im(f.dom + 1);
  for (int i = 0; i <= f.dom; ++i) im[i] = g.images[f.images[i]];
  return {f.dom, g.cod, std::move(im)};
}

OrdinalMap face(int n, int i) {
  if (i < 0 || i > n + 1) throw std::invalid_argument("face: index out of range");
  std::vector<int> im(n + 1);
  for (int v = 0; v <= n; ++v) im[v] = v < i ? v : v + 1;
  return {n, n + 1, std::move(im)};
}

OrdinalMap degeneracy(int n, int i) {
  if (n < 1 || i < 0 || i > n - 1) {
    throw std::invalid_argument("degeneracy: index out of range");
  }
  std::vector<int> im(n + 1);
  for (int v = 0; v <= n; ++v) im[v] = v <= i ? v : v - 1;
  return {n, n - 1, std::move(im)};
}

MapClass classify(const OrdinalMap& f) {
  MapClass c;
  c.mono = true;
  c.inert = true;
  c.contraction = true;
  for (int i = 0; i < f.dom; ++i) {
    int step = f.images[i + 1] - f.images[i];
    if (step < 1) c.mono = false;
    if (step != 1) c.inert = false;
    if (step > 1) c.contraction = false;
  }
  std::vector<bool> hit(f.cod + 1, false);
  for (int v : f.images) hit[v] = true;
  c.epi = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  c.active = f.images.front() == 0 && f.images.back() == f.cod;
  return c;
}

EpiMonoFactorization epi_mono_factor(const OrdinalMap& f) {
  std::vector<int> values;  // distinct image values, increasing
  for (int v : f.images) {
    if (values.empty() || values.back() != v) values.push_back(v);
  }
  int k = static_cast<int>(values.size()) - 1;  // image ordinal [k]
  std::vector<int> epi(f.dom + 1);
  for (int i = 0; i <= f.dom; ++i) {
    epi[i] = static_cast<int>(std::lower_bound(values.begin(), values.end(), f.images[i]) -
                              values.begin());
  }
  return {OrdinalMap(f.dom, k, std::move(epi)), OrdinalMap(k, f.cod, std::move(values))};
}

ActiveInertFactorization active_inert_factor(const OrdinalMap& f) {
  int lo = f.images.front();
  int hi = f.images.back();
  std::vector<int> act(f.dom + 1);
  for (int i = 0; i <= f.dom; ++i) act[i] = f.images[i] - lo;
  std::vector<int> in(hi - lo + 1);
  for (int j = 0; j <= hi - lo; ++j) in[j] = j + lo;
  return {OrdinalMap(f.dom, hi - lo, std::move(act)),
          OrdinalMap(hi - lo, f.cod, std::move(in))};
}

int vee(int n, int n2) {
  if (n < 0 || n2 < 0) throw std::invalid_argument("vee: ordinals must be non-negative");
  return n + n2;
}

OrdinalMap vee_active(const OrdinalMap& f, const OrdinalMap& f2) {
  if (!classify(f).active || !classify(f2).active) {
    throw std::invalid_argument("vee_active: both maps must preserve endpoints");
  }
  std::vector<int> im(f.dom + f2.dom + 1);
  for (int i = 0; i <= f.dom; ++i) im[i] = f.images[i];
  for (int j = 1; j <= f2.dom; ++j) im[f.dom + j] = f.cod + f2.images[j];
  return {f.dom + f2.dom, f.cod + f2.cod, std::move(im)};
}

PushoutResult pushout_mono_along_epi(const OrdinalMap& mono, const OrdinalMap& epi) {
  MapClass cm = classify(mono);
  if (!cm.mono || !cm.active) {
    throw std::invalid_argument("pushout_mono_along_epi: first leg must be an active mono");
  }
  if (!classify(epi).epi) {
    throw std::invalid_argument("pushout_mono_along_epi: second leg must be an epi");
  }
  if (mono.dom != epi.dom) {
    throw std::invalid_argument("pushout_mono_along_epi: legs must share their domain");
  }
  int p = mono.cod;
  std::vector<bool> collapsed(p, false);
  for (int i = 0; i < epi.dom; ++i) {
    if (epi.images[i] == epi.images[i + 1]) {
      for (int j = mono.images[i]; j < mono.images[i + 1]; ++j) collapsed[j] = true;
    }
  }
  std::vector<int> right(p + 1);
  right[0] = 0;
  int dropped = 0;
  for (int v = 1; v <= p; ++v) {
    if (collapsed[v - 1]) ++dropped;
    right[v] = v - dropped;
  }
  int corner = p - dropped;
  std::vector<int> bottom(epi.cod + 1);
  for (int v = 0; v <= epi.cod; ++v) {
    int s = 0;
    while (epi.images[s] != v) ++s;  // minimal section of the epi
    bottom[v] = right[mono.images[s]];
  }
  return {corner, OrdinalMap(p, corner, std::move(right)),
          OrdinalMap(epi.cod, corner, std::move(bottom))};
}

std::vector<OrdinalMap> enumerate_hom(int m, int n, HomClass cls) {
  if (m < 0 || n < 0) throw std::invalid_argument("enumerate_hom: ordinals must be non-negative");
  std::vector<OrdinalMap> out;
  std::vector<int> cur(m + 1, 0);
  while (true) {
    OrdinalMap f(m, n, cur);
    bool keep = true;
    if (cls != HomClass::All) {
      MapClass c = classify(f);
      keep = (cls == HomClass::Mono && c.mono) || (cls == HomClass::Epi && c.epi) ||
             (cls == HomClass::Active && c.active) || (cls == HomClass::Inert && c.inert);
    }
    if (keep) out.push_back(std::move(f));
    int i = m;
    while (i >= 0 && cur[i] == n) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j <= m; ++j) cur[j] = cur[i];
  }
  return out;
}

std::string to_text(const OrdinalMap& f) {
  std::ostringstream os;
  os << "[" << f.dom << "]->[" << f.cod << "]:(";
  for (int i = 0; i <= f.dom; ++i) {
    if (i) os << ' ';
    os << f.images[i];
  }
  os << ")";
  return os.str();
}

OrdinalMap from_text(const std::string& text) {
  int m = 0, n = 0;
  char c = 0;
  std::istringstream is(text);
  if (!(is >> c) || c != '[' || !(is >> m >> c) || c != ']') {
    throw std::invalid_argument("from_text: expected \"[m]->[n]:(...)\"");
  }
  if (!(is >> c) || c != '-' || !(is >> c) || c != '>' || !(is >> c) || c != '[' ||
      !(is >> n >> c) || c != ']' || !(is >> c) || c != ':' || !(is >> c) || c != '(') {
    throw std::invalid_argument("from_text: expected \"[m]->[n]:(...)\"");
  }
  std::vector<int> im;
  int v = 0;
  while (is >> v) im.push_back(v);
  is.clear();
  if (!(is >> c) || c != ')') {
    throw std::invalid_argument("from_text: expected closing parenthesis");
  }
  return {m, n, std::move(im)};
}

}  // namespace fatdelta::delta
