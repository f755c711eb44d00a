#include "kfl/lift_maps.hpp"

#include "kfl/errors.hpp"
#include "kfl/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kfl {

namespace {

Polynomial normalize(Polynomial poly) {
    std::sort(poly.begin(), poly.end(), [](const Term& a, const Term& b) { return a.exps > b.exps; });
    Polynomial out;
    for (auto& t : poly) {
        if (!out.empty() && out.back().exps == t.exps)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
        if (out.back().coef == 0) out.pop_back();
    }
    return out;
}

// Exponent vectors of total degree `degree` in lexicographically descending order.
void compositions(std::size_t d, unsigned degree, Exponents& current, std::size_t pos, std::vector<Exponents>& out) {
    if (pos + 1 == d) {
        current[pos] = degree;
        out.push_back(current);
        return;
    }
    for (unsigned e = degree + 1; e-- > 0;) {
        current[pos] = e;
        compositions(d, degree - e, current, pos + 1, out);
    }
}

std::vector<Exponents> monomials_of_degree(std::size_t d, unsigned degree) {
    std::vector<Exponents> out;
    Exponents current(d, 0);
    compositions(d, degree, current, 0, out);
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream is(s);
    while (std::getline(is, part, sep)) parts.push_back(part);
    return parts;
}

unsigned parse_positive(const std::string& s, const std::string& key) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size() || v < 1 || v > 64) throw InputError("");
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw InputError("invalid parameter '" + s + "' in map key '" + key + "'");
    }
}

}  // namespace

MonomialMap::MonomialMap(std::size_t source_dim, std::vector<Polynomial> coords, std::string name)
    : source_dim_(source_dim), name_(std::move(name)) {
    if (source_dim_ == 0) throw InputError("map source dimension must be positive");
    if (coords.empty()) throw InputError("map must have at least one coordinate");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        for (const auto& term : coords[i]) {
            if (term.exps.size() != source_dim_)
                throw InputError("coordinate " + std::to_string(i) + ": exponent vector length differs from source_dim");
        }
        Polynomial poly = normalize(std::move(coords[i]));
        if (poly.empty()) throw InputError("coordinate " + std::to_string(i) + " is the zero polynomial");
        for (const auto& term : poly)
            if (std::all_of(term.exps.begin(), term.exps.end(), [](unsigned e) { return e == 0; }))
                throw InputError("coordinate " + std::to_string(i) + " has a constant term");
        coords_.push_back(std::move(poly));
    }
    for (std::size_t i = 0; i < coords_.size(); ++i)
        for (std::size_t j = i + 1; j < coords_.size(); ++j)
            if (coords_[i] == coords_[j])
                throw InputError("coordinates " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

MonomialMap MonomialMap::from_exponents(std::size_t source_dim, const std::vector<Exponents>& exps, std::string name) {
    std::vector<Polynomial> coords;
    coords.reserve(exps.size());
    for (const auto& e : exps) coords.push_back(Polynomial{Term{e, 1}});
    return MonomialMap(source_dim, std::move(coords), std::move(name));
}

std::vector<Exponents> MonomialMap::exponents() const {
    std::vector<Exponents> out;
    for (const auto& poly : coords_) {
        if (poly.size() != 1 || poly.front().coef != 1)
            throw InputError("map '" + name_ + "' has non-monomial coordinates");
        out.push_back(poly.front().exps);
    }
    return out;
}

Point MonomialMap::evaluate(const Point& x) const {
    if (x.size() != source_dim_)
        throw InputError("map '" + name_ + "' expects points of dimension " + std::to_string(source_dim_));
    Point y;
    y.reserve(coords_.size());
    for (const auto& poly : coords_) {
        Rational value = 0;
        for (const auto& term : poly) {
            Rational mono(term.coef);
            for (std::size_t j = 0; j < source_dim_; ++j)
                if (term.exps[j] != 0) mono *= power(x[j], term.exps[j]);
            value += mono;
        }
        y.push_back(std::move(value));
    }
    return y;
}

MonomialMap veronese(std::size_t d, unsigned m) {
    if (d < 1 || m < 1) throw InputError("veronese requires d >= 1 and m >= 1");
    std::vector<Exponents> exps;
    for (unsigned degree = 1; degree <= m; ++degree)
        for (auto& e : monomials_of_degree(d, degree)) exps.push_back(std::move(e));
    return MonomialMap::from_exponents(d, exps, "veronese:" + std::to_string(d) + ":" + std::to_string(m));
}

MonomialMap homogeneous_veronese(std::size_t d, unsigned m) {
    if (d < 1 || m < 1) throw InputError("homogeneous_veronese requires d >= 1 and m >= 1");
    return MonomialMap::from_exponents(d, monomials_of_degree(d, m),
                                       "hveronese:" + std::to_string(d) + ":" + std::to_string(m));
}

MonomialMap circle_map() {
    std::vector<Polynomial> coords{
        {Term{{1, 0}, 1}},
        {Term{{0, 1}, 1}},
        {Term{{2, 0}, 1}, Term{{0, 2}, 1}},
    };
    return MonomialMap(2, std::move(coords), "circle");
}

MonomialMap moment_curve(std::size_t d) {
    if (d < 1) throw InputError("moment curve requires d >= 1");
    auto map = veronese(1, static_cast<unsigned>(d));
    return MonomialMap(1, map.coords(), "moment:" + std::to_string(d));
}

MonomialMap neighborly_embedding(unsigned k, std::size_t d) {
    if (k < 1 || d < 1) throw InputError("neighborly_embedding requires k >= 1 and d >= 1");
    std::vector<Exponents> exps;
    for (unsigned e = 1; e <= 2 * k; ++e) {
        Exponents x(d, 0);
        x[0] = e;
        exps.push_back(std::move(x));
    }
    for (std::size_t j = 1; j < d; ++j) {
        Exponents x(d, 0);
        x[j] = 1;
        exps.push_back(std::move(x));
    }
    return MonomialMap::from_exponents(d, exps, "embed:" + std::to_string(k) + ":" + std::to_string(d));
}

PointSet apply(const MonomialMap& map, const PointSet& set) {
    if (set.dim() != map.source_dim())
        throw InputError("map '" + map.name() + "' has source dimension " + std::to_string(map.source_dim()) +
                         " but the point set has dimension " + std::to_string(set.dim()));
    std::vector<Point> lifted;
    lifted.reserve(set.size());
    for (const auto& x : set.points()) lifted.push_back(map.evaluate(x));
    return PointSet(map.target_dim(), std::move(lifted), set.labels());
}

MonomialMap map_from_key(const std::string& key) {
    if (key.rfind("custom:", 0) == 0) {
        std::string path = key.substr(7);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open map file '" + path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return map_from_json(buffer.str());
    }
    auto parts = split(key, ':');
    if (parts.empty()) throw InputError("empty map key");
    const auto& kind = parts[0];
    auto arity = [&](std::size_t expected) {
        if (parts.size() != expected + 1)
            throw InputError("map key '" + key + "' expects " + std::to_string(expected) + " parameters");
    };
    if (kind == "circle") {
        arity(0);
        return circle_map();
    }
    if (kind == "veronese") {
        arity(2);
        return veronese(parse_positive(parts[1], key), parse_positive(parts[2], key));
    }
    if (kind == "hveronese") {
        arity(2);
        return homogeneous_veronese(parse_positive(parts[1], key), parse_positive(parts[2], key));
    }
    if (kind == "moment") {
        arity(1);
        return moment_curve(parse_positive(parts[1], key));
    }
    if (kind == "embed") {
        arity(2);
        return neighborly_embedding(parse_positive(parts[1], key), parse_positive(parts[2], key));
    }
    if (kind == "identity") {
        arity(1);
        auto d = parse_positive(parts[1], key);
        return MonomialMap(d, veronese(d, 1).coords(), key);
    }
    throw InputError("unknown map key '" + key + "'");
}

}  // namespace kfl
