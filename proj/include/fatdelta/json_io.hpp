#pragma once

#include <json.hpp>

#include "fatdelta/delta.hpp"
#include "fatdelta/fat.hpp"
#include "fatdelta/hypermoment.hpp"
#include "fatdelta/nerve.hpp"
#include "fatdelta/relgraph.hpp"
#include "fatdelta/report.hpp"
#include "fatdelta/semicat.hpp"

namespace fatdelta::io {

using json = nlohmann::json;

json to_json(const delta::OrdinalMap& f);
delta::OrdinalMap ordinal_map_from_json(const json& j);

json to_json(const fat::FatMorphism& f);
fat::FatMorphism fat_morphism_from_json(const json& j);

json to_json(const relgraph::RelGraph& g);
relgraph::RelGraph relgraph_from_json(const json& j);

json to_json(const relgraph::RelGraphMap& f);

json to_json(const semicat::RelSemiCategory& c);
semicat::RelSemiCategory relsemicat_from_json(const json& j);

json to_json(const nerve::Presheaf& p);
nerve::Presheaf presheaf_from_json(const json& j);

json to_json(const hyper::GammaMap& f);

json to_json(const CheckReport& r);

}  // namespace fatdelta::io
