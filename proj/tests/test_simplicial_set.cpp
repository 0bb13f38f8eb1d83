#include "fixtures.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace sset;

namespace {

std::vector<int> nd_counts(const SimplicialSet& X) { return X.nondegenerate_counts(); }

/// Every map W -> P that makes both legs agree with (a, b).
int count_mediators(const SimplicialSet& from, const SimplicialSet& to,
                    const std::function<bool(const SimplicialMap&)>& ok)
{
    int count = 0;
    for (const SimplicialMap& h : all_maps(from, to))
        if (ok(h))
            ++count;
    return count;
}

} // namespace

TEST_CASE("standard simplices have binomial counts")
{
    CHECK(standard_simplex(0, 2).counts() == std::vector<int>{1, 1, 1});
    CHECK(standard_simplex(1, 2).counts() == std::vector<int>{2, 3, 4});
    CHECK(standard_simplex(2, 2).counts() == std::vector<int>{3, 6, 10});
    for (int n = 0; n <= 3; ++n)
        for (int D = 0; D <= 4; ++D)
            REQUIRE_NOTHROW(standard_simplex(n, D).validate());
}

TEST_CASE("boundaries and horns")
{
    const SimplicialSet b11 = boundary(1, 1);
    CHECK(b11.counts() == std::vector<int>{2, 2});
    CHECK(nd_counts(b11) == std::vector<int>{2, 0});
    CHECK(nd_counts(horn(2, 1, 2)) == std::vector<int>{3, 2, 0});
    CHECK(nd_counts(boundary(2, 2)) == std::vector<int>{3, 3, 0});
    const SimplicialMap h = horn_inclusion(2, 1, 2);
    CHECK(h.is_mono());
    // The horn misses the face opposite vertex 1, i.e. the edge (0,2).
    const int e02 = simplex_index(MonotoneMap(2, {0, 2}));
    bool hit = false;
    for (int x = 0; x < h.source().count(1); ++x)
        hit = hit || h(1, x) == e02;
    CHECK_FALSE(hit);
    CHECK_THROWS_AS(horn(2, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(horn(0, 0, 2), std::invalid_argument);
}

TEST_CASE("nerves")
{
    CHECK(nerve(terminal_category(), 2).counts() == std::vector<int>{1, 1, 1});
    const SimplicialSet na = nerve(arrow_category(), 2);
    CHECK(na.counts() == std::vector<int>{2, 3, 4});
    CHECK(find_isomorphism(na, standard_simplex(1, 2)).has_value());
    CHECK(nerve(discrete_category(2), 1).counts() == std::vector<int>{2, 2});
    for (const auto& [name, C] : fixtures::categories())
        for (int D = 1; D <= 3; ++D)
            REQUIRE_NOTHROW(nerve(C, D).validate());
    const SimplicialSet n2 = nerve(ordinal_category(2), 2);
    CHECK(find_isomorphism(n2, standard_simplex(2, 2)).has_value());
}

TEST_CASE("EZ normalization examples")
{
    const SimplicialSet d1 = standard_simplex(1, 2);
    const int e01 = simplex_index(MonotoneMap(1, {0, 1}));
    auto [e, nd] = d1.ez_normalize(1, e01);
    CHECK(e == MonotoneMap::identity(1));
    CHECK(nd == SimplexRef{1, e01});
    auto [e2, nd2] = d1.ez_normalize(1, simplex_index(MonotoneMap(1, {0, 0})));
    CHECK(e2 == MonotoneMap(0, {0, 0}));
    CHECK(nd2 == SimplexRef{0, 0});
    auto [e3, nd3] = d1.ez_normalize(2, simplex_index(MonotoneMap(1, {0, 0, 1})));
    CHECK(e3 == MonotoneMap(1, {0, 0, 1}));
    CHECK(nd3 == SimplexRef{1, e01});
}

TEST_CASE("EZ normalization is a bijection onto (epi, nondegenerate) pairs")
{
    for (const auto& [name, X] : fixtures::small_sets(3)) {
        INFO(name);
        for (int n = 0; n <= X.dim_bound(); ++n) {
            std::set<std::pair<std::vector<int>, int>> seen;
            long long expected = 0;
            for (int m = 0; m <= n; ++m) {
                long long surj = 0;
                for (const auto& f : enumerate_monotone(n, m))
                    surj += f.is_surjective();
                expected += surj * static_cast<long long>(X.nondegenerate(m).size());
            }
            CHECK(expected == X.count(n));
            for (int x = 0; x < X.count(n); ++x) {
                auto [epi, nd] = X.ez_normalize(n, x);
                CHECK(epi.is_surjective());
                CHECK_FALSE(X.is_degenerate(nd.dim, nd.index));
                CHECK(X.act(epi, nd.index) == x);
                seen.insert({std::vector<int>(epi.values().begin(), epi.values().end()),
                             nd.dim * 100000 + nd.index});
            }
            CHECK(static_cast<int>(seen.size()) == X.count(n));
        }
    }
}

TEST_CASE("simplicial action")
{
    const SimplicialSet d2 = standard_simplex(2, 2);
    const int top = top_simplex(2, 2);
    CHECK(d2.act(MonotoneMap::identity(2), top) == top);
    CHECK(d2.act(face(2, 0), top) == simplex_index(MonotoneMap(2, {1, 2})));
    CHECK(d2.act(MonotoneMap(0, {0, 0}), 1) == d2.degeneracy(0, 0, 1));
    CHECK_THROWS_AS(d2.act(MonotoneMap(2, {0, 2, 2, 2}), top), std::invalid_argument);
}

TEST_CASE("validator names the violated identity")
{
    // Delta^1 at D = 1 with the two faces of the degenerate edge on vertex 0 swapped to vertex 1.
    const SimplicialSet d1 = standard_simplex(1, 1);
    auto faces = std::vector<std::vector<SimplicialSet::Table>>(2);
    faces[1] = {d1.face_table(1, 0), d1.face_table(1, 1)};
    faces[1][0][0] = 1;
    auto degens = std::vector<std::vector<SimplicialSet::Table>>(2);
    degens[0] = {d1.degeneracy_table(0, 0)};
    const SimplicialSet broken(1, d1.counts(), faces, degens);
    try {
        broken.validate();
        FAIL("validator accepted a broken table");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("(n,i,j)=(0,0,0)") != std::string::npos);
    }
}

TEST_CASE("products")
{
    const SimplicialSet d1 = standard_simplex(1, 2);
    const SimplicialSet sq = product(d1, d1);
    REQUIRE_NOTHROW(sq.validate());
    CHECK(nd_counts(sq) == std::vector<int>{4, 5, 2});
    CHECK(nd_counts(product(standard_simplex(1, 3), standard_simplex(2, 3))) ==
          std::vector<int>{6, 12, 10, 3});
}

TEST_CASE("pushout collapsing the endpoints of an edge is a circle")
{
    const SimplicialSet S = fixtures::circle(2);
    REQUIRE_NOTHROW(S.validate());
    CHECK(nd_counts(S) == std::vector<int>{1, 1, 0});
}

TEST_CASE("pullback over the point is the product")
{
    const SimplicialSet X = horn(2, 1, 2), Y = standard_simplex(1, 2);
    const Pullback pb = pullback(to_point(X), to_point(Y));
    CHECK(pb.object.counts() == product(X, Y).counts());
    CHECK(pb.object == product(X, Y));
}

TEST_CASE("pushouts satisfy the universal property")
{
    const int D = 2;
    const SimplicialMap b = boundary_inclusion(1, D);
    const SimplicialMap h = horn_inclusion(2, 1, D);
    struct Case {
        SimplicialMap f, g;
    };
    std::vector<Case> cases{
        {b, to_point(b.source())},
        {b, b},
        {h, h},
        {horn_inclusion(2, 0, D), horn_inclusion(2, 0, D)},
    };
    const std::vector<SimplicialSet> tests{point(D), standard_simplex(1, D), fixtures::circle(D),
                                           nerve(iso_pair_category(), D)};
    for (const auto& c : cases) {
        const Pushout po = pushout(c.f, c.g);
        REQUIRE_NOTHROW(po.object.validate());
        CHECK(compose(po.leg_x, c.f) == compose(po.leg_y, c.g));
        for (const SimplicialSet& T : tests) {
            const auto us = all_maps(c.f.target(), T);
            const auto vs = all_maps(c.g.target(), T);
            for (const auto& u : us)
                for (const auto& v : vs) {
                    if (!(compose(u, c.f) == compose(v, c.g)))
                        continue;
                    CHECK(count_mediators(po.object, T, [&](const SimplicialMap& m) {
                              return compose(m, po.leg_x) == u && compose(m, po.leg_y) == v;
                          }) == 1);
                }
        }
    }
}

TEST_CASE("pullbacks satisfy the universal property")
{
    const int D = 2;
    const SimplicialSet d1 = standard_simplex(1, D);
    const SimplicialMap v0 = classifying_map(d1, 0, 0);
    const SimplicialMap p0 = product_projection(d1, d1, 0);
    std::vector<std::pair<SimplicialMap, SimplicialMap>> cases{
        {p0, p0},
        {v0, p0},
        {horn_inclusion(2, 1, D), horn_inclusion(2, 0, D)},
    };
    const std::vector<SimplicialSet> tests{point(D), d1, boundary(1, D)};
    for (const auto& [f, g] : cases) {
        const Pullback pb = pullback(f, g);
        REQUIRE_NOTHROW(pb.object.validate());
        CHECK(compose(f, pb.leg_x) == compose(g, pb.leg_y));
        for (const SimplicialSet& W : tests)
            for (const auto& a : all_maps(W, f.source()))
                for (const auto& b : all_maps(W, g.source())) {
                    if (!(compose(f, a) == compose(g, b)))
                        continue;
                    CHECK(count_mediators(W, pb.object, [&](const SimplicialMap& m) {
                              return compose(pb.leg_x, m) == a && compose(pb.leg_y, m) == b;
                          }) == 1);
                }
    }
}

TEST_CASE("subcomplex union, intersection and image")
{
    const SimplicialSet d2 = standard_simplex(2, 2);
    const Subcomplex h0 = horn_subcomplex(2, 0, 2), h1 = horn_subcomplex(2, 1, 2);
    const Subcomplex u = h0.unite(h1), i = h0.intersect(h1);
    CHECK(u == horn_subcomplex(2, -1, 2).unite(u));
    CHECK(nd_counts(u.as_sset()) == std::vector<int>{3, 3, 0});
    CHECK(nd_counts(i.as_sset()) == std::vector<int>{3, 1, 0});
    CHECK(image(horn_inclusion(2, 1, 2)) == h1);
    Subcomplex vertex(d2);
    vertex.add_closure(0, 0);
    CHECK(vertex.is_closed());
    CHECK(h0.contains(vertex.intersect(h0)));
    CHECK_THROWS_AS(h0.unite(Subcomplex(standard_simplex(1, 2))), std::invalid_argument);
}

TEST_CASE("cones")
{
    const Cone c0 = right_cone(point(2));
    CHECK(find_isomorphism(c0.object, standard_simplex(1, 2)).has_value());
    const Cone c1 = right_cone(boundary(1, 2));
    REQUIRE_NOTHROW(c1.object.validate());
    CHECK(nd_counts(c1.object) == std::vector<int>{3, 2, 0});
    CHECK(c1.inclusion.is_mono());
    const Cone c2 = right_cone(standard_simplex(1, 3));
    CHECK(find_isomorphism(c2.object, standard_simplex(2, 3)).has_value());
}

TEST_CASE("retruncation")
{
    const SimplicialSet d2 = standard_simplex(2, 2);
    CHECK(find_isomorphism(retruncate(d2, 4), standard_simplex(2, 4)).has_value());
    CHECK(retruncate(standard_simplex(2, 4), 2) == d2);
    const SimplicialSet s = retruncate(fixtures::circle(1), 3);
    REQUIRE_NOTHROW(s.validate());
    CHECK(nd_counts(s) == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("colimit over the category of simplices recovers K")
{
    std::vector<fixtures::Named> ks{
        {"delta0", standard_simplex(0, 2)},
        {"delta1", standard_simplex(1, 2)},
        {"boundary2", boundary(2, 2)},
    };
    for (const auto& [name, K] : ks) {
        INFO(name);
        const SimplexColimit c = colimit_over_simplices(K);
        CHECK(c.comparison.is_iso());
    }
}

TEST_CASE("simplicial complexes")
{
    const SimplicialSet tri = from_simplicial_complex(3, {{0, 1, 2}}, 3);
    CHECK(find_isomorphism(tri, standard_simplex(2, 3)).has_value());
    const SimplicialSet hollow = from_simplicial_complex(3, {{0, 1}, {1, 2}, {0, 2}}, 2);
    CHECK(find_isomorphism(hollow, boundary(2, 2)).has_value());
}
