#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fatdelta/delta.hpp"

using namespace fatdelta::delta;

namespace {

// independent pushout oracle: every cocone into [k], k <= max_k, has exactly
// one mediating map
bool pushout_is_universal(const OrdinalMap& mono, const OrdinalMap& epi,
                          const PushoutResult& po, int max_k) {
  for (int k = 0; k <= max_k; ++k) {
    for (const auto& r : enumerate_hom(mono.cod, k)) {
      OrdinalMap ra = compose(r, mono);
      for (const auto& b : enumerate_hom(epi.cod, k)) {
        if (!(ra == compose(b, epi))) continue;
        int mediators = 0;
        for (const auto& h : enumerate_hom(po.corner, k)) {
          if (compose(h, po.right) == r && compose(h, po.bottom) == b) ++mediators;
        }
        if (mediators != 1) return false;
      }
    }
  }
  return true;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("identity and unit laws") {
  CHECK(identity(0).images == std::vector<int>{0});
  CHECK(identity(2).images == std::vector<int>{0, 1, 2});
  OrdinalMap s0(2, 1, {0, 0, 1});
  CHECK(compose(identity(1), s0) == s0);
  CHECK(compose(s0, identity(2)) == s0);
}

TEST_CASE("composition against the generator tables") {
  // sigma0 . delta0 = id on [1]
  OrdinalMap d0 = face(1, 0);
  CHECK(d0.images == std::vector<int>{1, 2});
  OrdinalMap s0 = degeneracy(2, 0);
  CHECK(s0.images == std::vector<int>{0, 0, 1});
  CHECK(compose(s0, d0) == identity(1));

  // frozen from the degeneracy tables: [3]->[2] then [2]->[1]
  CHECK(compose(degeneracy(2, 0), degeneracy(3, 0)).images ==
        std::vector<int>{0, 0, 0, 1});

  CHECK_THROWS_AS(compose(OrdinalMap(1, 1, {0, 1}), OrdinalMap(1, 2, {0, 2})),
                  std::invalid_argument);
}

TEST_CASE("face and degeneracy bounds") {
  CHECK(face(1, 2).images == std::vector<int>{0, 1});
  CHECK(face(1, 2).cod == 2);
  CHECK(degeneracy(2, 0).images == std::vector<int>{0, 0, 1});
  CHECK_THROWS_AS(face(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(degeneracy(2, 2), std::invalid_argument);
}

TEST_CASE("simplicial identities as table equalities") {
  for (int n = 0; n <= 6; ++n) {
    // d_j d_i = d_i d_{j-1} for i < j
    for (int j = 0; j <= n + 2; ++j) {
      for (int i = 0; i < j; ++i) {
        if (i > n + 1 || j > n + 2) continue;
        CHECK(compose(face(n + 1, j), face(n, i)) ==
              compose(face(n + 1, i), face(n, j - 1)));
      }
    }
    // s_j s_i = s_i s_{j+1} for i <= j
    for (int j = 0; j + 1 <= n - 1; ++j) {
      for (int i = 0; i <= j; ++i) {
        CHECK(compose(degeneracy(n - 1, j), degeneracy(n, i)) ==
              compose(degeneracy(n - 1, i), degeneracy(n, j + 1)));
      }
    }
    // mixed: s_j d_i = d_i s_{j-1} (i < j), identity (i = j, j+1),
    //        d_{i-1} s_j (i > j+1)
    for (int j = 0; j <= n - 1; ++j) {
      for (int i = 0; i <= n; ++i) {
        OrdinalMap lhs = compose(degeneracy(n, j), face(n - 1, i));
        if (i < j) {
          CHECK(lhs == compose(face(n - 2, i), degeneracy(n - 1, j - 1)));
        } else if (i == j || i == j + 1) {
          CHECK(lhs == identity(n - 1));
        } else {
          CHECK(lhs == compose(face(n - 2, i - 1), degeneracy(n - 1, j)));
        }
      }
    }
  }
}

TEST_CASE("classification") {
  for (int n = 0; n <= 3; ++n) {
    MapClass c = classify(identity(n));
    CHECK(c.mono);
    CHECK(c.epi);
    CHECK(c.active);
    CHECK(c.inert);
    CHECK(c.contraction);
  }
  MapClass s0 = classify(OrdinalMap(2, 1, {0, 0, 1}));
  CHECK(s0.epi);
  CHECK(s0.active);
  CHECK(s0.contraction);
  CHECK_FALSE(s0.mono);
  CHECK_FALSE(s0.inert);

  MapClass d2 = classify(OrdinalMap(2, 3, {0, 1, 3}));
  CHECK(d2.mono);
  CHECK(d2.active);
  CHECK_FALSE(d2.inert);
  CHECK_FALSE(d2.epi);
  CHECK_FALSE(d2.contraction);
}

TEST_CASE("epi-mono factorization") {
  {
    auto [e, m] = epi_mono_factor(OrdinalMap(2, 1, {0, 0, 1}));
    CHECK(e == OrdinalMap(2, 1, {0, 0, 1}));
    CHECK(m == identity(1));
  }
  {
    auto [e, m] = epi_mono_factor(OrdinalMap(1, 2, {0, 2}));
    CHECK(e == identity(1));
    CHECK(m == OrdinalMap(1, 2, {0, 2}));
  }
  {
    auto [e, m] = epi_mono_factor(OrdinalMap(2, 3, {0, 0, 2}));
    CHECK(e == OrdinalMap(2, 1, {0, 0, 1}));
    CHECK(m == OrdinalMap(1, 3, {0, 2}));
  }
}

TEST_CASE("factorizations are unique under exhaustive middle search") {
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      for (const auto& f : enumerate_hom(m, n)) {
        int em_count = 0, ai_count = 0;
        for (int k = 0; k <= std::max(m, n); ++k) {
          for (const auto& first : enumerate_hom(m, k)) {
            for (const auto& second : enumerate_hom(k, n)) {
              if (!(compose(second, first) == f)) continue;
              MapClass c1 = classify(first), c2 = classify(second);
              if (c1.epi && c2.mono) ++em_count;
              if (c1.active && c2.inert) ++ai_count;
            }
          }
        }
        CHECK(em_count == 1);
        CHECK(ai_count == 1);
        auto [e, mo] = epi_mono_factor(f);
        CHECK(compose(mo, e) == f);
        auto [a, i] = active_inert_factor(f);
        CHECK(compose(i, a) == f);
      }
    }
  }
}

TEST_CASE("contraction iff the two factorizations coincide") {
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      for (const auto& f : enumerate_hom(m, n)) {
        auto em = epi_mono_factor(f);
        auto ai = active_inert_factor(f);
        bool same = em.epi == ai.active && em.mono == ai.inert;
        CHECK(same == classify(f).contraction);
      }
    }
  }
}

TEST_CASE("vee gluing") {
  CHECK(vee(2, 3) == 5);
  CHECK(vee_active(identity(1), identity(1)) == identity(2));
  OrdinalMap s0(2, 1, {0, 0, 1});
  OrdinalMap skip(1, 2, {0, 2});
  OrdinalMap glued = vee_active(s0, skip);
  CHECK(glued == OrdinalMap(3, 3, {0, 0, 1, 3}));
  // both block squares commute: the left inclusion then the glued map
  // agrees with the block map then the right inclusion
  for (int v = 0; v <= 2; ++v) CHECK(glued.images[v] == s0.images[v]);
  for (int v = 0; v <= 1; ++v) CHECK(glued.images[2 + v] == 1 + skip.images[v]);
  CHECK_THROWS_AS(vee_active(OrdinalMap(1, 2, {0, 1}), identity(1)), std::invalid_argument);
}

TEST_CASE("pushout of an active mono along an epi") {
  {
    // along the identity: nothing collapses
    OrdinalMap e(2, 1, {0, 0, 1});
    PushoutResult po = pushout_mono_along_epi(identity(2), e);
    CHECK(po.corner == 1);
    CHECK(po.right == e);
    CHECK(po.bottom == identity(1));
  }
  {
    OrdinalMap d2(2, 3, {0, 1, 3});
    OrdinalMap s0(2, 1, {0, 0, 1});
    PushoutResult po = pushout_mono_along_epi(d2, s0);
    CHECK(po.corner == 2);
    CHECK(po.right == OrdinalMap(3, 2, {0, 0, 1, 2}));
    CHECK(po.bottom == OrdinalMap(1, 2, {0, 2}));
    CHECK(compose(po.right, d2) == compose(po.bottom, s0));
    CHECK(pushout_is_universal(d2, s0, po, 4));
  }
  CHECK_THROWS_AS(pushout_mono_along_epi(OrdinalMap(1, 2, {0, 1}), identity(1)),
                  std::invalid_argument);
}

TEST_CASE("pushout universal property over a sweep of spans") {
  for (int m = 0; m <= 3; ++m) {
    for (int p = m; p <= 4; ++p) {
      for (const auto& a : enumerate_hom(m, p, HomClass::Mono)) {
        if (!classify(a).active) continue;
        for (int q = 0; q <= m; ++q) {
          for (const auto& e : enumerate_hom(m, q, HomClass::Epi)) {
            PushoutResult po = pushout_mono_along_epi(a, e);
            CHECK(compose(po.right, a) == compose(po.bottom, e));
            CHECK(classify(po.right).epi);
            MapClass cb = classify(po.bottom);
            CHECK(cb.mono);
            CHECK(cb.active);
            CHECK(pushout_is_universal(a, e, po, 6));
          }
        }
      }
    }
  }
}

TEST_CASE("hom enumeration counts and order") {
  auto monos = enumerate_hom(1, 2, HomClass::Mono);
  REQUIRE(monos.size() == 3);
  CHECK(monos[0].images == std::vector<int>{0, 1});
  CHECK(monos[1].images == std::vector<int>{0, 2});
  CHECK(monos[2].images == std::vector<int>{1, 2});

  for (int n = 0; n <= 4; ++n) {
    auto epis = enumerate_hom(n, n, HomClass::Epi);
    REQUIRE(epis.size() == 1);
    CHECK(epis[0] == identity(n));
  }

  auto to_point = enumerate_hom(2, 0);
  REQUIRE(to_point.size() == 1);
  CHECK(to_point[0].images == std::vector<int>{0, 0, 0});

  // binomial counts: all maps and monos
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      CHECK(static_cast<long long>(enumerate_hom(m, n).size()) ==
            binomial(m + n + 1, m + 1));
      CHECK(static_cast<long long>(enumerate_hom(m, n, HomClass::Mono).size()) ==
            binomial(n + 1, m + 1));
    }
  }
}

TEST_CASE("orthogonality: unique diagonal for active against inert") {
  for (int a_dom = 0; a_dom <= 4; ++a_dom) {
    for (int a_cod = 0; a_cod <= 4; ++a_cod) {
      for (const auto& act : enumerate_hom(a_dom, a_cod, HomClass::Active)) {
        for (int i_dom = 0; i_dom <= 4; ++i_dom) {
          for (int i_cod = 0; i_cod <= 4; ++i_cod) {
            for (const auto& in : enumerate_hom(i_dom, i_cod, HomClass::Inert)) {
              for (const auto& u : enumerate_hom(a_dom, i_dom)) {
                OrdinalMap w = compose(in, u);
                for (const auto& v : enumerate_hom(a_cod, i_cod)) {
                  if (!(compose(v, act) == w)) continue;
                  int diagonals = 0;
                  for (const auto& d : enumerate_hom(a_cod, i_dom)) {
                    if (compose(d, act) == u && compose(in, d) == v) ++diagonals;
                  }
                  CHECK(diagonals == 1);
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("text round trip") {
  OrdinalMap f(2, 3, {0, 1, 3});
  CHECK(to_text(f) == "[2]->[3]:(0 1 3)");
  CHECK(from_text(to_text(f)) == f);
  CHECK(from_text("[0]->[0]:(0)") == identity(0));
}
