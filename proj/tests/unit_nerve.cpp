#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatdelta/json_io.hpp"
#include "fatdelta/nerve.hpp"
#include "helpers.hpp"

using namespace fatdelta::nerve;
namespace fat = fatdelta::fat;
namespace rg = fatdelta::relgraph;
namespace sc = fatdelta::semicat;

namespace {

// appends an element nobody restricts to
Presheaf with_phantom(Presheaf p, const std::string& marking) {
  p.sets[marking].push_back("phantom");
  for (auto& [k, table] : p.actions) {
    if (k.cod == marking) table.push_back(0);
  }
  return p;
}

}  // namespace

TEST_CASE("nerve of the mixed two-edge semicategory") {
  sc::RelSemiCategory c = fat::rso(fat::FatObject("um"));
  Presheaf p = nerve(c, 3);
  CHECK(p.set_of("").size() == 3);
  CHECK(p.set_of("u").size() == 3);
  CHECK(p.set_of("m") == std::vector<std::string>{"12"});
  CHECK(p.set_of("uu") == std::vector<std::string>{"01,12"});
  CHECK(p.set_of("um") == std::vector<std::string>{"01,12"});
  CHECK(p.set_of("mu").empty());

  // restriction along the first edge picks the first component
  MorphismKey first_edge{"u", "uu", {0, 1}};
  const std::vector<int>& action = p.action(first_edge);
  REQUIRE(action.size() == 1);
  CHECK(p.set_of("u")[action[0]] == "01");

  CHECK(functoriality_check(p).pass());
  CHECK(segal_check(p).pass());
}

TEST_CASE("nerve elements are the functors from linear semicategories") {
  for (const auto& c : {fat::rso(fat::FatObject("um")), fat::rso(fat::FatObject("mm"))}) {
    Presheaf p = nerve(c, 3);
    for (const auto& x : fat::enumerate_objects(3)) {
      CHECK(p.set_of(x.marking).size() ==
            sc::enumerate_functors(fat::rso(x), c).size());
    }
  }
}

TEST_CASE("graph nerve") {
  rg::RelGraph um = rg::linear_relgraph("um");
  Presheaf p = nerve0(um, 3);
  // the defining comparison: elements at x are the graph maps from the
  // marked linear graph of x
  for (const auto& x : fat::enumerate_objects(3)) {
    CHECK(p.set_of(x.marking).size() ==
          rg::enumerate_maps(rg::linear_relgraph(x.marking), um).size());
  }
  // marked elements are the marked edges
  CHECK(p.set_of("m") == std::vector<std::string>{"e1"});
  // restriction along the second-edge inclusion picks the second component
  MorphismKey second{"m", "um", {1, 2}};
  const std::vector<int>& action = p.action(second);
  REQUIRE(action.size() == 1);
  CHECK(p.set_of("m")[action[0]] == "e1");
  // only inert actions are stored
  CHECK_FALSE(p.has_action(MorphismKey{"u", "uu", {0, 2}}));
  CHECK(segal_check(p).pass());
  CHECK(segal_graph(p) == um);
}

TEST_CASE("unit edges embed the graph nerve into the nerve of the free object") {
  for (const auto& g : testutil::enumerate_relgraphs(2, 2)) {
    if (!rg::is_acyclic(g)) continue;
    Presheaf p0 = nerve0(g, 2);
    Presheaf pf = nerve(sc::free_relsemicat(g), 2);
    // edge sequences inject into path sequences as length-one paths, and the
    // injection commutes with every inert action
    for (const auto& x : fat::enumerate_objects(2)) {
      CHECK(p0.set_of(x.marking).size() <= pf.set_of(x.marking).size());
    }
    for (const auto& [k, table0] : p0.actions) {
      const std::vector<int>& tablef = pf.action(k);
      // unit paths are enumerated before longer ones, so on sequences of
      // units the two tables agree position by position on the common part
      for (size_t s = 0; s < table0.size(); ++s) {
        const auto& elem0 = p0.elements.at(k.cod)[s];
        const auto& elemf = pf.elements.at(k.cod)[s];
        CHECK(elem0 == elemf);
        CHECK(table0[s] == tablef[s]);
      }
    }
  }
}

TEST_CASE("functoriality validator rejects a broken composite") {
  Presheaf p = nerve(fat::rso(fat::FatObject("um")), 3);
  CHECK(functoriality_check(p).pass());
  // corrupt one action cell of a composite-reachable morphism
  MorphismKey vertex{"", "uu", {0}};
  REQUIRE(p.actions.count(vertex));
  auto& table = p.actions[vertex];
  table[0] = (table[0] + 1) % static_cast<int>(p.set_of("").size());
  CHECK_FALSE(functoriality_check(p).pass());
}

TEST_CASE("Segal checker on mutated tables") {
  sc::RelSemiCategory c = fat::rso(fat::FatObject("um"));
  Presheaf good = nerve(c, 3);
  CHECK(segal_check(good).pass());

  CHECK_FALSE(segal_check(with_phantom(good, "uu")).pass());

  // two marked elements over a single edge element violate separation
  Presheaf bad;
  bad.bound = 1;
  bad.sets[""] = {"v"};
  bad.sets["u"] = {"e"};
  bad.sets["m"] = {"a", "b"};
  bad.actions[MorphismKey{"", "", {0}}] = {0};
  bad.actions[MorphismKey{"u", "u", {0, 1}}] = {0};
  bad.actions[MorphismKey{"m", "m", {0, 1}}] = {0, 1};
  bad.actions[MorphismKey{"", "u", {0}}] = {0};
  bad.actions[MorphismKey{"", "u", {1}}] = {0};
  bad.actions[MorphismKey{"", "m", {0}}] = {0, 0};
  bad.actions[MorphismKey{"", "m", {1}}] = {0, 0};
  bad.actions[MorphismKey{"u", "m", {0, 1}}] = {0, 0};
  fatdelta::CheckReport rep = segal_check(bad);
  CHECK_FALSE(rep.pass());
  bool mentions_separation = false;
  for (const auto& v : rep.violations) {
    if (v.find("separation") != std::string::npos) mentions_separation = true;
  }
  CHECK(mentions_separation);
}

TEST_CASE("every single-cell mutation of a nerve is caught") {
  sc::RelSemiCategory c = fat::rso(fat::FatObject("um"));
  Presheaf good = nerve(c, 2);
  long long mutants = 0;
  for (const auto& [k, table] : good.actions) {
    int dom_size = static_cast<int>(good.set_of(k.dom).size());
    if (dom_size < 2) continue;
    for (size_t s = 0; s < table.size(); ++s) {
      for (int alt = 0; alt < dom_size; ++alt) {
        if (alt == table[s]) continue;
        Presheaf mutant = good;
        mutant.actions[k][s] = alt;
        CHECK_FALSE(segal_check(mutant).pass());
        ++mutants;
      }
    }
  }
  CHECK(mutants > 50);
}

TEST_CASE("natural transformation counts") {
  sc::RelSemiCategory u = fat::rso(fat::FatObject("u"));
  sc::RelSemiCategory m = fat::rso(fat::FatObject("m"));
  CHECK(enumerate_nat(nerve(u, 3), nerve(u, 3)).size() == 1);
  CHECK(enumerate_nat(nerve(m, 3), nerve(u, 3)).empty());
  CHECK(sc::enumerate_functors(u, u).size() == 1);
  CHECK(sc::enumerate_functors(m, u).empty());
  CHECK_THROWS_AS(enumerate_nat(nerve(u, 2), nerve(u, 3)), std::invalid_argument);
}

TEST_CASE("nerve theorem on sample pairs") {
  std::vector<sc::RelSemiCategory> sample = {
      fat::rso(fat::FatObject("u")), fat::rso(fat::FatObject("m")),
      fat::rso(fat::FatObject("um")),
      testutil::make_relsemicat({"x"}, {{"a", 0, 0, false}}, {{0, 0, 0}})};
  for (const auto& c : sample) {
    for (const auto& d : sample) {
      fatdelta::CheckReport rep = nerve_theorem_check(c, d, 3);
      CHECK(rep.pass());
    }
  }
}

TEST_CASE("a natural transformation is determined by its core components") {
  sc::RelSemiCategory c = fat::rso(fat::FatObject("um"));
  sc::RelSemiCategory d = fat::rso(fat::FatObject("umm"));
  Presheaf nc = nerve(c, 3), nd = nerve(d, 3);
  std::vector<NaturalTransformation> nats = enumerate_nat(nc, nd);
  CHECK(!nats.empty());
  for (const auto& nat : nats) {
    NaturalTransformation core;
    core.components[""] = nat.components.at("");
    core.components["u"] = nat.components.at("u");
    core.components["m"] = nat.components.at("m");
    NaturalTransformation rebuilt;
    REQUIRE(reconstruct_nat(nc, nd, core, rebuilt));
    CHECK(rebuilt == nat);
  }
}

TEST_CASE("reconstruction matches the original structure") {
  for (const auto& c :
       {fat::rso(fat::FatObject("um")), fat::rso(fat::FatObject("mm")),
        testutil::make_relsemicat({"x"}, {{"a", 0, 0, true}}, {{0, 0, 0}})}) {
    Presheaf p = nerve(c, 3);
    sc::RelSemiCategory back = reconstruct_semicat(p);
    CHECK(sc::structurally_equal(back, c));
    std::string why;
    CHECK_MESSAGE(is_nerve_of_reconstruction(p, &why), why);
  }
  // a phantom element cannot be exhibited as a nerve
  Presheaf broken = with_phantom(nerve(fat::rso(fat::FatObject("um")), 3), "uu");
  CHECK_FALSE(is_nerve_of_reconstruction(broken));
}

TEST_CASE("presheaf JSON round trip") {
  Presheaf p = nerve(fat::rso(fat::FatObject("um")), 2);
  auto j = fatdelta::io::to_json(p);
  Presheaf back = fatdelta::io::presheaf_from_json(j);
  CHECK(back.bound == p.bound);
  CHECK(back.sets == p.sets);
  CHECK(back.actions == p.actions);
  CHECK(fatdelta::io::to_json(back).dump() == j.dump());
  CHECK(segal_check(back).pass());
}
