#pragma once

/**
 * JSON and CSV formats.
 *
 *   PointSet    {"dim": p, "points": [["a/b", ...], ...], "labels": [...]}
 *               coordinates as "int", "int/int", decimal strings or JSON
 *               integers; CSV alternative with header "x1,...,xp".
 *   Map         {"source_dim": d, "coords": [[{"exps": [...], "coef": "int"}, ...], ...]}
 *   Certificate {"normal": ["a/b", ...], "offset": "a/b", "strict": bool}
 *   Radon       {"Q": [...], "R": [...], "lambdas": [...], "point": [...]}
 *   Enumeration {"n", "p", "profile", "facets": [{"indices", "sign", "k"}], "ksets"}
 */

#include "kfl/face_lab.hpp"
#include "kfl/facet_engine.hpp"
#include "kfl/geometry.hpp"

#include <json.hpp>

#include <string>

namespace kfl {

class MonomialMap;

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& value);

Json point_to_json(const Point& point);
Json point_set_to_json(const PointSet& set);
PointSet point_set_from_json(const Json& doc);
PointSet point_set_from_json_text(const std::string& text);

PointSet point_set_from_csv(const std::string& text);
std::string point_set_to_csv(const PointSet& set);

/// Reads JSON, or CSV when the path ends in ".csv".
PointSet read_point_set_file(const std::string& path);

Json map_to_json(const MonomialMap& map);
MonomialMap map_from_json(const std::string& text);

Json hyperplane_to_json(const Hyperplane& h);
Json certificate_to_json(const FaceCertificate& cert);
FaceCertificate certificate_from_json(const Json& doc);
Json radon_to_json(const RadonWitness& witness);

Json profile_to_json(const KFacetProfile& profile);
Json facets_to_json(const std::vector<OrientedFacet>& facets);
Json ksets_to_json(const KSetFamily& family);

/// Rows "k,e_k" after a "k,e_k" header.
std::string profile_to_csv(const KFacetProfile& profile);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace kfl
