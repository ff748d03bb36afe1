// JSON and text forms of the library's values.
//
// Rationals are always strings in the "p/q" grammar. Distance entries are
// ["i", "j", "p/q"] with 1-based indices.

#pragma once

#include <hyperdist/construct.hpp>

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace hyperdist::io {

    using json = nlohmann::ordered_json;

    inline Rational rational_from(const json &j, std::string_view what) {
        if (!j.is_string()) {
            throw ParseError(std::string(what) + ": expected a rational string");
        }
        return Rational::parse(j.get<std::string>());
    }

    /// "a,b,c,d"
    inline Conic parse_conic(std::string_view text) {
        std::vector<Rational> parts;
        std::size_t start = 0;
        for (;;) {
            auto comma = text.find(',', start);
            parts.push_back(Rational::parse(text.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (parts.size() != 4) {
            throw ParseError("conic must be a,b,c,d, got '" + std::string(text) + "'");
        }
        return Conic(parts[0], parts[1], parts[2], parts[3]);
    }

    /// "x,y"
    inline Point2 parse_point(std::string_view text) {
        auto comma = text.find(',');
        if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError("point must be x,y, got '" + std::string(text) + "'");
        }
        return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
    }

    inline json to_json(const Conic &c) {
        return {{"a", c.a().to_string()}, {"b", c.b().to_string()}, {"c", c.c().to_string()},
                {"d", c.d().to_string()}};
    }

    inline Conic conic_from_json(const json &j) {
        if (!j.is_object()) throw ParseError("conic: expected an object");
        for (const char *k : {"a", "b", "c", "d"}) {
            if (!j.contains(k)) throw ParseError(std::string("conic: missing field '") + k + "'");
        }
        return Conic(rational_from(j["a"], "conic.a"), rational_from(j["b"], "conic.b"),
                     rational_from(j["c"], "conic.c"), rational_from(j["d"], "conic.d"));
    }

    inline json to_json(const Point2 &p) { return json::array({p.x.to_string(), p.y.to_string()}); }

    inline Point2 point_from_json(const json &j) {
        if (!j.is_array() || j.size() != 2) throw ParseError("point: expected [\"x\", \"y\"]");
        return {rational_from(j[0], "point.x"), rational_from(j[1], "point.y")};
    }

    inline json points_to_json(std::span<const Point2> pts) {
        json arr = json::array();
        for (const auto &p : pts) arr.push_back(to_json(p));
        return arr;
    }

    inline std::vector<Point2> points_from_json(const json &j) {
        if (!j.is_array()) throw ParseError("points: expected an array");
        std::vector<Point2> out;
        for (const auto &p : j) out.push_back(point_from_json(p));
        return out;
    }

    /// [["1","2","p/q"], ...] for the rational pairs only.
    inline json distances_to_json(const DistanceReport &rep) {
        json arr = json::array();
        for (const auto &pd : rep.pairs) {
            if (pd.rational()) {
                arr.push_back({std::to_string(pd.i + 1), std::to_string(pd.j + 1), pd.distance->to_string()});
            }
        }
        return arr;
    }

    inline json to_json(const RationalDistanceSet &s) {
        const auto xy = s.xy();
        return {{"conic", to_json(s.conic)},
                {"points", points_to_json(xy)},
                {"distances", distances_to_json(s.distances)},
                {"degenerate", s.degenerate}};
    }

    /// Same layout as a distance set, plus the per-pair detail and verdicts.
    inline json report_to_json(const Conic &conic, std::span<const Point2> pts, const DistanceReport &rep) {
        json pairs = json::array();
        for (const auto &pd : rep.pairs) {
            pairs.push_back({{"i", pd.i + 1},
                             {"j", pd.j + 1},
                             {"squared_distance", pd.squared.to_string()},
                             {"distance", pd.rational() ? json(pd.distance->to_string()) : json(nullptr)},
                             {"rational", pd.rational()}});
        }
        json on = json::array();
        for (bool b : rep.on_conic) on.push_back(b);
        return {{"conic", to_json(conic)},
                {"points", points_to_json(pts)},
                {"distances", distances_to_json(rep)},
                {"degenerate", rep.degenerate},
                {"pairs", pairs},
                {"on_conic", on},
                {"verdict", rep.verdict}};
    }

    inline json to_json(const Curve &c) { return {{"D", c.D().to_string()}}; }

    inline json to_json(const SurfacePoint &s) {
        return {{"u", s.u().str()}, {"v", s.v().str()}, {"w", s.w().str()}, {"T", s.T().to_string()}};
    }

    inline SurfacePoint surface_point_from_json(const json &j) {
        if (!j.is_object()) throw ParseError("surface point: expected an object");
        auto integer = [&](const char *k) {
            if (!j.contains(k)) throw ParseError(std::string("surface point: missing '") + k + "'");
            Rational q = rational_from(j[k], k);
            if (!q.is_integer()) throw ParseError(std::string("surface point: '") + k + "' must be an integer");
            return q.num();
        };
        if (!j.contains("T")) throw ParseError("surface point: missing 'T'");
        return SurfacePoint(integer("u"), integer("v"), integer("w"), rational_from(j["T"], "T"));
    }

    struct SetFile {
        Conic conic;
        std::vector<Point2> points;
    };

    /// Any document with "conic" and "points" (a distance set or a report).
    inline SetFile set_from_json(const json &j) {
        if (!j.is_object() || !j.contains("conic") || !j.contains("points")) {
            throw ParseError("expected an object with 'conic' and 'points'");
        }
        return {conic_from_json(j["conic"]), points_from_json(j["points"])};
    }

    inline std::string to_csv(const RationalDistanceSet &s) {
        std::string out = "kind,i,j,value_x,value_y\n";
        for (std::size_t t = 0; t < s.points.size(); ++t) {
            out += "point," + std::to_string(t + 1) + ",," + s.points[t].x().to_string() + "," +
                   s.points[t].y().to_string() + "\n";
        }
        for (const auto &pd : s.distances.pairs) {
            out += "distance," + std::to_string(pd.i + 1) + "," + std::to_string(pd.j + 1) + "," +
                   (pd.rational() ? pd.distance->to_string() : std::string()) + ",\n";
        }
        return out;
    }

} // namespace hyperdist::io
