#include <hyperdist/io.hpp>
#include <hyperdist/svg.hpp>

#include <gtest/gtest.h>

#include <random>

using hyperdist::Rational;
namespace io = hyperdist::io;

TEST(Io, ParseConicAndPoint) {
    const auto c = io::parse_conic("1,0,0,12");
    EXPECT_EQ(c.D(), Rational(6));
    EXPECT_EQ(io::parse_conic("-3/2,1,0,5").a(), Rational(-3, 2));
    EXPECT_THROW(io::parse_conic("1,0,0"), hyperdist::ParseError);
    EXPECT_THROW(io::parse_conic("1,0,0,1.5"), hyperdist::ParseError);
    EXPECT_THROW(io::parse_conic("1,2,3,6"), hyperdist::DegenerateConic);
    EXPECT_EQ(io::parse_point("4,-3"), (hyperdist::Point2{4, -3}));
    EXPECT_THROW(io::parse_point("4"), hyperdist::ParseError);
}

TEST(Io, SetJsonSchema) {
    const hyperdist::Conic xy12(1, 0, 0, 12);
    const auto set = hyperdist::three_point_set(xy12, hyperdist::CurvePoint(12, 36, 1), hyperdist::CurvePoint(50, 35, 8),
                                                hyperdist::CurvePoint(377844, 2065932, 12167));
    const auto j = io::to_json(set);
    EXPECT_EQ(j["conic"]["d"], "12");
    EXPECT_EQ(j["points"][0][0], "34040/3619");
    EXPECT_EQ(j["points"][0][1], "-10857/8510");
    EXPECT_EQ(j["distances"][2], io::json::array({"2", "3", "2129555051/55435842"}));
    EXPECT_EQ(j["degenerate"], false);

    const auto back = io::set_from_json(io::json::parse(j.dump()));
    EXPECT_EQ(back.conic, xy12);
    EXPECT_EQ(back.points, set.xy());
}

TEST(Io, SetFromJsonRejectsMalformed) {
    EXPECT_THROW(io::set_from_json(io::json::parse(R"({"points": []})")), hyperdist::ParseError);
    EXPECT_THROW(io::set_from_json(io::json::parse(R"({"conic": {"a":"1","b":"0","c":"0"}, "points": []})")),
                 hyperdist::ParseError);
    EXPECT_THROW(io::set_from_json(io::json::parse(R"({"conic": {"a":"1","b":"0","c":"0","d":"12"},
                                                       "points": [["1", 2]]})")),
                 hyperdist::ParseError);
}

TEST(Io, RationalTextRoundTrip) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long long> dist(-1'000'000'000'000, 1'000'000'000'000);
    for (int i = 0; i < 500; ++i) {
        long long d = dist(rng);
        if (d == 0) continue;
        const Rational q(dist(rng), d);
        EXPECT_EQ(Rational::parse(q.to_string()), q);
    }
}

TEST(Io, SurfacePointJson) {
    const hyperdist::SurfacePoint s(5000, 42035, 128, 1);
    const auto j = io::to_json(s);
    EXPECT_EQ(j.dump(), R"({"u":"5000","v":"42035","w":"128","T":"1"})");
    EXPECT_EQ(io::surface_point_from_json(j), s);
}

TEST(Svg, EquationAndStructure) {
    EXPECT_EQ(hyperdist::svg::equation(hyperdist::Conic(1, 0, 0, 12)), "x y + 12 = 0");
    EXPECT_EQ(hyperdist::svg::equation(hyperdist::Conic(-2, Rational(1, 2), -1, 3)), "−2 x y + 1/2 x − y + 3 = 0");

    const hyperdist::Conic xy12(1, 0, 0, 12);
    const std::vector<hyperdist::Point2> none;
    const std::string empty = hyperdist::svg::render(xy12, none, hyperdist::distance_report(none));
    EXPECT_NE(empty.find("<path"), std::string::npos);
    EXPECT_EQ(empty.find("<circle"), std::string::npos);
}
