#pragma once

#include <string_view>

#include <json.hpp>

#include "trop/axioms.hpp"
#include "trop/descartes.hpp"
#include "trop/multiplicity.hpp"

// JSON forms. nlohmann's default object keeps keys sorted, so dump() is
// canonical and byte-stable.
namespace trop::io {

using json = nlohmann::json;

json to_json(const GVal& g);
json to_json(const SVal& v);
json to_json(const TPoly& p);
json to_json(const SPoly& p, std::string_view ring = "smax");
json to_json(const PSeries& f);
json to_json(const FPoly& p);
json to_json(const CornerList& cl);
json to_json(const Factorization& f);
json to_json(const MultReport& r);
json to_json(const UniquenessReport& u);
json to_json(const MultSum& m);
json to_json(const MultFactorResult& m);
json to_json(const RootCheck& c);
json to_json(const DescartesReport& d);
json to_json(const KapranovReport& k);
json to_json(const LawReport& r);

// Parsers throw ParseError on malformed JSON or wrong shapes.
json parse_json(std::string_view text);
GVal gval_from_json(const json& j);
SVal sval_from_json(const json& j);
TPoly tpoly_from_json(const json& j);
SPoly spoly_from_json(const json& j);
PSeries pseries_from_json(const json& j);
FPoly fpoly_from_json(const json& j);

}  // namespace trop::io
