// fatdelta: a calculator and verifier for the fat Delta category and its
// supporting combinatorics (marked linear graphs, free relative
// semicategories, nerves, Segal conditions, hypermoment structure).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fatdelta/arities.hpp"
#include "fatdelta/dot_export.hpp"
#include "fatdelta/fat.hpp"
#include "fatdelta/hypermoment.hpp"
#include "fatdelta/json_io.hpp"
#include "fatdelta/nerve.hpp"
#include "fatdelta/relgraph.hpp"
#include "fatdelta/semicat.hpp"

namespace {

using fatdelta::CheckReport;
using fatdelta::io::json;
namespace fat = fatdelta::fat;
namespace rg = fatdelta::relgraph;

constexpr int kSchemaVersion = 1;

json wrap(json payload) {
  payload["schema_version"] = kSchemaVersion;
  return payload;
}

void emit_json(const json& payload) { std::cout << wrap(payload).dump(2) << "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

fat::FatMorphism parse_morphism(const std::string& literal) {
  return fatdelta::io::fat_morphism_from_json(json::parse(literal));
}

int print_reports(const std::vector<CheckReport>& reports, const std::string& format) {
  bool all_pass = true;
  if (format == "json") {
    json suites = json::array();
    for (const auto& r : reports) {
      suites.push_back(fatdelta::io::to_json(r));
      all_pass = all_pass && r.pass();
    }
    emit_json({{"suites", suites}, {"pass", all_pass}});
  } else {
    for (const auto& r : reports) {
      all_pass = all_pass && r.pass();
      std::cout << (r.pass() ? "PASS " : "FAIL ") << r.suite << " checked=" << r.checked
                << "\n";
      for (const auto& v : r.violations) std::cout << "  violation: " << v << "\n";
      for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fat Delta calculator and verifier"};
  app.require_subcommand(1);
  argv = app.ensure_utf8(argv);

  std::string format = "text";

  // objects
  auto* cmd_objects = app.add_subcommand("objects", "enumerate objects");
  int objects_max_edges = 2;
  bool objects_count = false;
  cmd_objects->add_option("--max-edges", objects_max_edges, "maximum edge count");
  cmd_objects->add_flag("--count", objects_count, "print only the number of objects");
  cmd_objects->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

  // hom
  auto* cmd_hom = app.add_subcommand("hom", "enumerate a hom-set");
  std::string hom_dom, hom_cod, hom_class = "all";
  bool hom_count = false;
  cmd_hom->add_option("dom", hom_dom, "domain marking over {u,m}; empty for the edgeless object");
  cmd_hom->add_option("cod", hom_cod, "codomain marking");
  cmd_hom->add_option("--class", hom_class)->check(CLI::IsMember({"all", "active", "inert"}));
  cmd_hom->add_flag("--count", hom_count, "print only the size");
  cmd_hom->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // compose
  auto* cmd_compose = app.add_subcommand("compose", "compose two morphisms (first, then second)");
  std::string compose_f, compose_g;
  cmd_compose->add_option("f", compose_f, "first morphism as JSON")->required();
  cmd_compose->add_option("g", compose_g, "second morphism as JSON")->required();
  cmd_compose->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // factorize
  auto* cmd_factorize = app.add_subcommand("factorize", "active-inert factorization");
  std::string factorize_input;
  cmd_factorize->add_option("morphism", factorize_input, "morphism as JSON")->required();
  cmd_factorize->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // pushout
  auto* cmd_pushout = app.add_subcommand("pushout", "pushout of an active map along an inert map");
  std::string pushout_inert, pushout_active;
  cmd_pushout->add_option("--inert", pushout_inert, "inert leg as JSON")->required();
  cmd_pushout->add_option("--active", pushout_active, "active leg as JSON")->required();
  cmd_pushout->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // vee
  auto* cmd_vee = app.add_subcommand("vee", "end-to-end gluing of two objects");
  std::string vee_x, vee_y;
  cmd_vee->add_option("x", vee_x, "first marking");
  cmd_vee->add_option("y", vee_y, "second marking");
  cmd_vee->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // nerve
  auto* cmd_nerve = app.add_subcommand("nerve", "nerve of a relative semicategory file");
  std::string nerve_file;
  int nerve_bound = 3;
  cmd_nerve->add_option("file", nerve_file, "relative semicategory as JSON")->required();
  cmd_nerve->add_option("--bound", nerve_bound, "truncation bound");
  cmd_nerve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // segal-check
  auto* cmd_segal = app.add_subcommand("segal-check", "Segal condition on a presheaf file");
  std::string segal_file;
  cmd_segal->add_option("file", segal_file, "presheaf as JSON")->required();
  cmd_segal->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // gamma
  auto* cmd_gamma = app.add_subcommand("gamma", "cardinality of an object or morphism");
  std::string gamma_input;
  cmd_gamma->add_option("target", gamma_input,
                        "object marking, or a morphism as JSON (starts with '{')");
  cmd_gamma->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "verification sweeps");
  cmd_verify->require_subcommand(1);

  auto* v_phipsi = cmd_verify->add_subcommand("phi-psi", "marked-graph/object round trips");
  int phipsi_max_edges = 4;
  v_phipsi->add_option("--max-edges", phipsi_max_edges);
  v_phipsi->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* v_cartesian = cmd_verify->add_subcommand("cartesian", "degreewise cartesianness");
  int cartesian_bound = 3;
  std::string cartesian_graph;
  v_cartesian->add_option("--bound", cartesian_bound);
  v_cartesian->add_option("--graph", cartesian_graph, "relative graph as a JSON file")->required();
  v_cartesian->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* v_generic = cmd_verify->add_subcommand("generic", "unique fillers for generic maps");
  int generic_bound = 3;
  v_generic->add_option("--bound", generic_bound, "free object bound");
  v_generic->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* v_hyper = cmd_verify->add_subcommand("hypermoment", "hypermoment axiom sweeps");
  int hyper_bound = 3;
  std::string hyper_suite = "all";
  v_hyper->add_option("--bound", hyper_bound);
  v_hyper->add_option("--suite", hyper_suite)
      ->check(CLI::IsMember({"gamma", "lifts", "units", "density", "extensionality", "all"}));
  v_hyper->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // export
  auto* cmd_export = app.add_subcommand("export", "diagram export");
  cmd_export->require_subcommand(1);

  auto* e_poset = cmd_export->add_subcommand("objects-poset", "objects and hom-set sizes");
  int poset_max_edges = 2;
  e_poset->add_option("--max-edges", poset_max_edges);
  e_poset->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  auto* e_morphism = cmd_export->add_subcommand("morphism-diagram", "columns of a morphism");
  std::string morphism_input;
  e_morphism->add_option("morphism", morphism_input, "morphism as JSON")->required();
  e_morphism->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_objects) {
      auto objs = fat::enumerate_objects(objects_max_edges);
      if (objects_count) {
        std::cout << objs.size() << "\n";
      } else if (format == "json") {
        json names = json::array();
        for (const auto& x : objs) names.push_back(x.marking);
        emit_json({{"objects", names}});
      } else if (format == "dot") {
        std::cout << fatdelta::io::objects_poset_dot(objects_max_edges);
      } else {
        for (const auto& x : objs) std::cout << '"' << x.marking << '"' << "\n";
      }
      return 0;
    }
    if (*cmd_hom) {
      fat::FatHomClass cls = hom_class == "active"  ? fat::FatHomClass::Active
                             : hom_class == "inert" ? fat::FatHomClass::Inert
                                                    : fat::FatHomClass::All;
      auto homs = fat::enumerate_hom(fat::FatObject(hom_dom), fat::FatObject(hom_cod), cls);
      if (hom_count) {
        std::cout << homs.size() << "\n";
      } else if (format == "json") {
        json morphisms = json::array();
        for (const auto& f : homs) morphisms.push_back(fatdelta::io::to_json(f));
        emit_json({{"morphisms", morphisms}});
      } else {
        for (const auto& f : homs) std::cout << fat::to_text(f) << "\n";
      }
      return 0;
    }
    if (*cmd_compose) {
      fat::FatMorphism composite =
          fat::compose(parse_morphism(compose_g), parse_morphism(compose_f));
      if (format == "json") {
        emit_json({{"morphism", fatdelta::io::to_json(composite)}});
      } else {
        std::cout << fat::to_text(composite) << "\n";
      }
      return 0;
    }
    if (*cmd_factorize) {
      fat::FatFactorization fac = fat::active_inert_factor(parse_morphism(factorize_input));
      if (format == "json") {
        emit_json({{"middle", fac.active.cod.marking},
                   {"active", fatdelta::io::to_json(fac.active)},
                   {"inert", fatdelta::io::to_json(fac.inert)}});
      } else {
        std::cout << "middle \"" << fac.active.cod.marking << "\"\n";
        std::cout << "active " << fat::to_text(fac.active) << "\n";
        std::cout << "inert " << fat::to_text(fac.inert) << "\n";
      }
      return 0;
    }
    if (*cmd_pushout) {
      fat::FatPushout po = fat::pushout_active_inert(parse_morphism(pushout_inert),
                                                     parse_morphism(pushout_active));
      if (format == "json") {
        emit_json({{"corner", po.corner.marking},
                   {"inert", fatdelta::io::to_json(po.inert_leg)},
                   {"active", fatdelta::io::to_json(po.active_leg)}});
      } else {
        std::cout << "corner \"" << po.corner.marking << "\"\n";
        std::cout << "inert " << fat::to_text(po.inert_leg) << "\n";
        std::cout << "active " << fat::to_text(po.active_leg) << "\n";
      }
      return 0;
    }
    if (*cmd_vee) {
      fat::FatObject glued = fat::vee(fat::FatObject(vee_x), fat::FatObject(vee_y));
      if (format == "json") {
        emit_json({{"object", glued.marking}});
      } else {
        std::cout << '"' << glued.marking << '"' << "\n";
      }
      return 0;
    }
    if (*cmd_nerve) {
      auto c = fatdelta::io::relsemicat_from_json(read_json_file(nerve_file));
      fatdelta::nerve::Presheaf p = fatdelta::nerve::nerve(c, nerve_bound);
      if (format == "json") {
        emit_json(fatdelta::io::to_json(p));
      } else {
        for (const auto& [marking, labels] : p.sets) {
          std::cout << '"' << marking << "\": " << labels.size() << " element(s)\n";
        }
      }
      return 0;
    }
    if (*cmd_segal) {
      auto p = fatdelta::io::presheaf_from_json(read_json_file(segal_file));
      return print_reports({fatdelta::nerve::segal_check(p)}, format);
    }
    if (*cmd_gamma) {
      if (!gamma_input.empty() && gamma_input.front() == '{') {
        auto g = fatdelta::hyper::gamma_morphism(parse_morphism(gamma_input));
        if (format == "json") {
          emit_json(fatdelta::io::to_json(g));
        } else {
          std::cout << "dom=" << g.dom << " cod=" << g.cod << "\n";
          for (int i = 0; i < g.dom; ++i) {
            std::cout << "  " << i << " -> {";
            for (size_t k = 0; k < g.assignment[i].size(); ++k) {
              if (k) std::cout << ",";
              std::cout << g.assignment[i][k];
            }
            std::cout << "}\n";
          }
        }
      } else {
        fatdelta::hyper::GammaObject o =
            fatdelta::hyper::gamma_object(fat::FatObject(gamma_input));
        if (format == "json") {
          emit_json({{"size", o.size}});
        } else {
          std::cout << "size=" << o.size << "\n";
        }
      }
      return 0;
    }
    if (*v_phipsi) {
      CheckReport rep;
      rep.suite = "phi-psi";
      for (const auto& x : fat::enumerate_objects(phipsi_max_edges)) {
        if (!(fatdelta::arities::phi(fatdelta::arities::psi(x)) == x)) {
          rep.violation("object round trip fails at \"" + x.marking + "\"");
        }
        ++rep.checked;
      }
      int mor_bound = std::min(phipsi_max_edges, 4);
      auto objs = fat::enumerate_objects(mor_bound);
      for (const auto& x : objs) {
        for (const auto& y : objs) {
          for (const auto& f : fat::enumerate_hom(x, y, fat::FatHomClass::Inert)) {
            if (!(fatdelta::arities::phi_on_morphism(fatdelta::arities::psi_on_morphism(f)) ==
                  f)) {
              rep.violation("morphism round trip fails at " + fat::to_text(f));
            }
            ++rep.checked;
          }
        }
      }
      return print_reports({rep}, format);
    }
    if (*v_cartesian) {
      auto g = fatdelta::io::relgraph_from_json(read_json_file(cartesian_graph));
      return print_reports({fatdelta::arities::check_cartesian(g, cartesian_bound)}, format);
    }
    if (*v_generic) {
      CheckReport rep;
      rep.suite = "generic";
      std::vector<fatdelta::arities::GenericMapData> generics;
      for (bool sharp : {false, true}) {
        for (int n = 1; n <= 3; ++n) {
          generics.push_back(fatdelta::arities::generic_factor_string(sharp, n));
        }
      }
      for (int eps : {0, 1}) {
        for (const auto& lengths :
             std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {1, 2}, {2, 1}}) {
          generics.push_back(
              fatdelta::arities::arity_of(fatdelta::arities::AritySpec(eps, lengths)).generic);
        }
      }
      for (const auto& gmd : generics) {
        rg::BoundedFree fmid = rg::free_bounded(gmd.middle, generic_bound);
        auto left = fatdelta::arities::as_map_into_free(gmd, fmid);
        // the square completed by the terminal graph commutes and must have
        // exactly one filler
        rg::RelGraph t = rg::terminal_relgraph();
        rg::BoundedFree ft = rg::free_bounded(t, generic_bound);
        auto top = rg::compose(rg::induced_free_map(fmid, ft, rg::terminal_map(gmd.middle)), left);
        fatdelta::arities::GenericSquare sq{fmid, ft, left, std::move(top),
                                            rg::identity_map(t), rg::terminal_map(gmd.middle)};
        auto res = fatdelta::arities::check_generic(sq);
        if (res.outcome != fatdelta::arities::FillerOutcome::Unique) {
          rep.violation("terminal square for a generic map does not have a unique filler");
        }
        ++rep.checked;
      }
      return print_reports({rep}, format);
    }
    if (*v_hyper) {
      std::vector<CheckReport> reports;
      bool all = hyper_suite == "all";
      if (all || hyper_suite == "gamma") {
        reports.push_back(fatdelta::hyper::check_gamma_preserves(hyper_bound));
      }
      if (all || hyper_suite == "lifts") {
        reports.push_back(fatdelta::hyper::check_unit_lifts(hyper_bound));
      }
      if (all || hyper_suite == "units") {
        reports.push_back(fatdelta::hyper::check_unit_condition(fat::flat_object(1), hyper_bound));
        reports.push_back(fatdelta::hyper::check_unit_condition(fat::sharp_object(1), hyper_bound));
        reports.push_back(fatdelta::hyper::unitality_report(hyper_bound));
      }
      if (all || hyper_suite == "density") {
        reports.push_back(fatdelta::hyper::segal_core_density_check(hyper_bound));
      }
      if (all || hyper_suite == "extensionality") {
        reports.push_back(fatdelta::hyper::extensionality_check(hyper_bound));
      }
      return print_reports(reports, format);
    }
    if (*e_poset) {
      if (format == "json") {
        emit_json(fatdelta::io::objects_poset_json(poset_max_edges));
      } else {
        std::cout << fatdelta::io::objects_poset_dot(poset_max_edges);
      }
      return 0;
    }
    if (*e_morphism) {
      fat::FatMorphism f = parse_morphism(morphism_input);
      if (format == "json") {
        emit_json(fatdelta::io::morphism_diagram_json(f));
      } else {
        std::cout << fatdelta::io::morphism_diagram_dot(f);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    emit_json({{"error", e.what()}});
    return 1;
  }
  return 0;
}
