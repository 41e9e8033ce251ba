#pragma once

#include <string>

#include <json.hpp>

#include "fatdelta/fat.hpp"
#include "fatdelta/relgraph.hpp"

namespace fatdelta::io {

/// DOT rendering of a relative graph; marked edges are bold red.
std::string relgraph_dot(const relgraph::RelGraph& g, const std::string& name = "relgraph");

/// All objects with at most max_edges edges and, for each ordered pair with
/// a non-empty hom-set, an arrow labelled with its size.
std::string objects_poset_dot(int max_edges);
nlohmann::json objects_poset_json(int max_edges);

/// Two vertex columns joined by the top map; marked edges bold red.
std::string morphism_diagram_dot(const fat::FatMorphism& f);
nlohmann::json morphism_diagram_json(const fat::FatMorphism& f);

}  // namespace fatdelta::io
