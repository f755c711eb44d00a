#include "kfl/io.hpp"

#include "kfl/errors.hpp"
#include "kfl/lift_maps.hpp"

#include <fstream>
#include <sstream>

namespace kfl {

Json rational_to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& value) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(Integer(value.dump()));
    throw InputError("coordinates must be strings (\"a/b\", decimals) or integers, got " + value.dump());
}

Json point_to_json(const Point& point) {
    Json out = Json::array();
    for (const auto& c : point) out.push_back(rational_to_json(c));
    return out;
}

Json point_set_to_json(const PointSet& set) {
    Json doc;
    doc["dim"] = set.dim();
    doc["points"] = Json::array();
    for (const auto& p : set.points()) doc["points"].push_back(point_to_json(p));
    if (set.has_labels()) doc["labels"] = set.labels();
    return doc;
}

PointSet point_set_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("points"))
        throw InputError("point set JSON needs \"dim\" and \"points\"");
    if (!doc["dim"].is_number_unsigned()) throw InputError("\"dim\" must be a positive integer");
    const auto dim = doc["dim"].get<std::size_t>();
    if (!doc["points"].is_array()) throw InputError("\"points\" must be an array");
    std::vector<Point> pts;
    for (const auto& row : doc["points"]) {
        if (!row.is_array()) throw InputError("each point must be an array of coordinates");
        Point p;
        for (const auto& c : row) p.push_back(rational_from_json(c));
        pts.push_back(std::move(p));
    }
    std::vector<std::string> labels;
    if (doc.contains("labels") && !doc["labels"].is_null()) {
        for (const auto& l : doc["labels"]) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    }
    return PointSet(dim, std::move(pts), std::move(labels));
}

PointSet point_set_from_json_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return point_set_from_json(doc);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
        while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
        cells.push_back(cell);
    }
    return cells;
}

}  // namespace

PointSet point_set_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw InputError("empty CSV");
    auto header = split_csv_line(line);
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] != "x" + std::to_string(i + 1))
            throw InputError("CSV header must be x1,...,xp; got '" + line + "'");
    std::vector<Point> pts;
    std::size_t row = 1;
    while (std::getline(is, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw InputError("CSV row " + std::to_string(row) + " has " + std::to_string(cells.size()) + " cells");
        Point p;
        for (const auto& c : cells) p.push_back(parse_rational(c));
        pts.push_back(std::move(p));
    }
    return PointSet(header.size(), std::move(pts));
}

std::string point_set_to_csv(const PointSet& set) {
    std::ostringstream os;
    for (std::size_t j = 0; j < set.dim(); ++j) os << (j ? "," : "") << 'x' << j + 1;
    os << '\n';
    for (const auto& p : set.points()) {
        for (std::size_t j = 0; j < p.size(); ++j) os << (j ? "," : "") << to_string(p[j]);
        os << '\n';
    }
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

PointSet read_point_set_file(const std::string& path) {
    auto text = read_text_file(path);
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return point_set_from_csv(text);
    return point_set_from_json_text(text);
}

Json map_to_json(const MonomialMap& map) {
    Json doc;
    doc["source_dim"] = map.source_dim();
    doc["coords"] = Json::array();
    for (const auto& poly : map.coords()) {
        Json terms = Json::array();
        for (const auto& t : poly) terms.push_back(Json{{"exps", t.exps}, {"coef", t.coef.get_str()}});
        doc["coords"].push_back(std::move(terms));
    }
    return doc;
}

MonomialMap map_from_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid map JSON: ") + e.what());
    }
    if (!doc.contains("source_dim") || !doc.contains("coords")) throw InputError("map JSON needs source_dim and coords");
    const auto d = doc["source_dim"].get<std::size_t>();
    std::vector<Polynomial> coords;
    for (const auto& cj : doc["coords"]) {
        Polynomial poly;
        for (const auto& tj : cj) {
            Term t;
            for (const auto& e : tj.at("exps")) {
                if (!e.is_number_unsigned()) throw InputError("exponents must be nonnegative integers");
                t.exps.push_back(e.get<unsigned>());
            }
            const auto& coef = tj.contains("coef") ? tj["coef"] : Json("1");
            Rational c = rational_from_json(coef);
            if (c.get_den() != 1) throw InputError("map coefficients must be integers");
            t.coef = c.get_num();
            poly.push_back(std::move(t));
        }
        coords.push_back(std::move(poly));
    }
    return MonomialMap(d, std::move(coords), "custom");
}

Json hyperplane_to_json(const Hyperplane& h) {
    return Json{{"normal", point_to_json(h.normal)}, {"offset", rational_to_json(h.offset)}};
}

Json certificate_to_json(const FaceCertificate& cert) {
    Json doc = hyperplane_to_json(cert.hyperplane);
    doc["strict"] = cert.strict;
    return doc;
}

FaceCertificate certificate_from_json(const Json& doc) {
    FaceCertificate cert;
    for (const auto& a : doc.at("normal")) cert.hyperplane.normal.push_back(rational_from_json(a));
    cert.hyperplane.offset = rational_from_json(doc.at("offset"));
    cert.strict = doc.at("strict").get<bool>();
    return cert;
}

Json radon_to_json(const RadonWitness& w) {
    Json lambdas = Json::array();
    for (const auto& l : w.lambdas) lambdas.push_back(rational_to_json(l));
    return Json{{"Q", w.part_q}, {"R", w.part_r}, {"lambdas", lambdas}, {"point", point_to_json(w.common_point)}};
}

Json profile_to_json(const KFacetProfile& profile) {
    return Json{{"n", profile.n}, {"p", profile.p}, {"profile", profile.e}};
}

Json facets_to_json(const std::vector<OrientedFacet>& facets) {
    Json out = Json::array();
    for (const auto& f : facets) out.push_back(Json{{"indices", f.indices}, {"sign", f.sign}, {"k", f.k}});
    return out;
}

Json ksets_to_json(const KSetFamily& family) { return Json(family.sets); }

std::string profile_to_csv(const KFacetProfile& profile) {
    std::ostringstream os;
    os << "k,e_k\n";
    for (std::size_t k = 0; k < profile.e.size(); ++k) os << k << ',' << profile.e[k] << '\n';
    return os.str();
}

}  // namespace kfl
