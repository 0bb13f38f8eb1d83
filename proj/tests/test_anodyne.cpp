#include "anodyne_instances.hpp"

#include <catch_amalgamated.hpp>

using namespace sset;

TEST_CASE("triangle: a mono between anodyne maps has the anodyne shadow")
{
    const auto ts = anodyne::triangles();
    CHECK(ts.size() >= 10);
    for (const auto& t : ts) {
        INFO(t.name);
        REQUIRE(compose(t.g, t.f) == t.h);
        CHECK(anodyne::horn_certified(t.f));
        CHECK(anodyne::horn_certified(t.h));
        REQUIRE(t.g.is_mono());
        CHECK(anodyne::shadow(t.g));
    }
}

TEST_CASE("triangle hypotheses matter")
{
    // f anodyne, g mono but h = g . f is not: the shadow of g fails
    const auto t = anodyne::nested("vertex, edge, hollow triangle", 2, {{0}}, {{0, 1}}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(anodyne::horn_certified(t.f));
    CHECK_FALSE(anodyne::horn_certified(t.h));
    CHECK_FALSE(anodyne::shadow(t.g));
}

TEST_CASE("cube: f3 is a mono with the anodyne shadow")
{
    const auto cs = anodyne::cubes();
    CHECK(cs.size() >= 10);
    for (const auto& c : cs) {
        INFO(c.name);
        CHECK(anodyne::horn_certified(c.f0));
        CHECK(anodyne::horn_certified(c.f1));
        CHECK(anodyne::horn_certified(c.f2));
        CHECK(c.f01.is_mono());
        CHECK(c.f3.is_mono());
        CHECK(anodyne::shadow(c.f3));
    }
}

TEST_CASE("copair and factor_through")
{
    const SimplicialMap e = boundary_inclusion(1, 2);
    const Pushout po = pushout(e, e);
    const SimplicialMap fold = anodyne::copair(po, SimplicialMap::identity(e.target()), SimplicialMap::identity(e.target()));
    CHECK(compose(fold, po.leg_x) == SimplicialMap::identity(e.target()));
    CHECK_THROWS(anodyne::copair(po, SimplicialMap::identity(e.target()), to_point(e.target())));
    CHECK_THROWS(anodyne::factor_through(e, SimplicialMap::identity(e.target())));
}
