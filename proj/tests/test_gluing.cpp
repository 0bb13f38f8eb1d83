#include "fixtures.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace sset;

namespace {

enum { X, W, U, V, Y };

int mor(const GeoCategory& G, int a, int b) { return G.base().hom(a, b).front(); }

/// Two objects and two parallel arrows between them.
FiniteCategory parallel_pair()
{
    std::vector<FiniteCategory::Morphism> m{{0, 0}, {1, 1}, {0, 1}, {0, 1}};
    std::vector<std::vector<int>> comp(4, std::vector<int>(4, -1));
    comp[0][0] = 0;
    comp[1][1] = 1;
    for (int a : {2, 3}) {
        comp[a][0] = a;
        comp[1][a] = a;
    }
    return FiniteCategory(2, m, {0, 1}, comp);
}

} // namespace

TEST_CASE("toy compactification data validates")
{
    const GluingInstance T = toy_compactification();
    CHECK_NOTHROW(T.geo.validate());
    CHECK_NOTHROW(validate_values(T.geo, T.values));
    CHECK(T.geo.base().num_morphisms() == 14);
    CHECK(T.values.support.size() == 4);
}

TEST_CASE("categories of compactifications")
{
    const GluingInstance T = toy_compactification();
    const GeoCategory& G = T.geo;
    // an open map has only itself followed by the identity
    const CompCategory open = comp_category(G, mor(G, X, W));
    REQUIRE(open.objects.size() == 1);
    CHECK(open.objects[0] == Factorization{mor(G, X, W), G.base().identity(W)});
    CHECK(open.category.num_morphisms() == 1);

    const CompCategory xu = comp_category(G, mor(G, X, U));
    CHECK(xu.objects.size() == 2);
    CHECK(xu.category.num_morphisms() == 3);

    // three compactifications of X -> Y, the one through W maps to the others
    const CompCategory xy = comp_category(G, mor(G, X, Y));
    REQUIRE(xy.objects.size() == 3);
    CHECK(xy.category.num_morphisms() == 5);
    const int w = xy.object_of({mor(G, X, W), mor(G, W, Y)});
    REQUIRE(w >= 0);
    for (int b = 0; b < 3; ++b)
        CHECK(xy.category.hom(w, b).size() == 1);
    CHECK(is_filtered(opposite_category(xy.category)) == Verdict::True);
    CHECK(is_filtered(xy.category) == Verdict::False);
}

TEST_CASE("filteredness checks")
{
    CHECK(is_filtered(terminal_category()) == Verdict::True);
    CHECK(is_filtered(discrete_category(2)) == Verdict::False);
    CHECK(is_filtered(discrete_category(0)) == Verdict::False);
    CHECK(is_filtered(parallel_pair()) == Verdict::False);
    CHECK(is_filtered(ordinal_category(3)) == Verdict::True);
    CHECK(is_filtered(iso_pair_category()) == Verdict::True);
    CHECK(is_filtered(ordinal_category(3), 2) == Verdict::Unknown);
    // Z/2: no element coequalizes the two parallel endomorphisms
    CHECK(is_filtered(cyclic_group_category(2)) == Verdict::False);
}

TEST_CASE("compactification nerves are contractible with a terminal object certificate")
{
    const GluingInstance T = toy_compactification();
    for (int f = 0; f < T.geo.base().num_morphisms(); ++f) {
        INFO("morphism " << f);
        const CompCategory C = comp_category(T.geo, f);
        const SimplicialSet N = nerve(C.category, 2);
        const ContractibilityCertificate cert = contractibility(N);
        CHECK(cert.kind == ContractibilityCertificate::Kind::TerminalObjectNerve);
        CHECK(revalidate(cert, N));
    }
}

TEST_CASE("glue picks a compactification and records the identifications")
{
    const GluingInstance T = toy_compactification();
    const GeoCategory& G = T.geo;
    const FiniteCategory& B = G.base();
    const GluedFunctor F = glue(G, T.values);
    REQUIRE(F.morphisms.size() == static_cast<std::size_t>(B.num_morphisms()));

    // open with identity proper part, and proper with identity open part: on the nose
    CHECK(F(mor(G, X, W)) == T.values.open_functors.at(mor(G, X, W)));
    for (int p : {mor(G, W, U), mor(G, U, Y), mor(G, W, Y)})
        CHECK(F(p) == T.values.proper_functors.at(p));
    // X -> U is open but has a second compactification; only an isomorphism
    const int xu = mor(G, X, U);
    CHECK_FALSE(F(xu) == T.values.open_functors.at(xu));
    CHECK(oracles::naturally_isomorphic(F.values[X], F.values[U], F(xu), T.values.open_functors.at(xu)));

    for (int f = 0; f < B.num_morphisms(); ++f) {
        INFO("morphism " << f);
        const CompCategory C = comp_category(G, f);
        const GluedMorphism& g = F.morphisms[f];
        CHECK(g.identifications.size() + 1 == C.objects.size());
        for (const SupportLink& l : g.identifications)
            CHECK(is_natural_iso(F.values[B.src(f)], F.values[B.tgt(f)], g.functor, compactified(T.values, l.to),
                                 l.iso));
        // choice independence: every compactification gives an isomorphic functor
        for (const Factorization& c : C.objects) {
            const Functor direct =
                compose(T.values.proper_functors.at(c.proper), T.values.open_functors.at(c.open));
            CHECK(oracles::naturally_isomorphic(F.values[B.src(f)], F.values[B.tgt(f)], F(f), direct));
        }
    }
}

TEST_CASE("glued functor is functorial up to isomorphism")
{
    const GluingInstance T = toy_compactification();
    const GeoCategory& G = T.geo;
    const FiniteCategory& B = G.base();
    const GluedFunctor F = glue(G, T.values);
    const auto report = verify_functoriality(G, F);
    int pairs = 0;
    for (int g = 0; g < B.num_morphisms(); ++g)
        for (int f = 0; f < B.num_morphisms(); ++f)
            pairs += B.tgt(f) == B.src(g);
    REQUIRE(report.size() == static_cast<std::size_t>(pairs));
    for (const FunctorialityCheck& c : report) {
        INFO(c.g << " after " << c.f);
        REQUIRE(c.iso.has_value());
        CHECK(is_natural_iso(F.values[B.src(c.f)], F.values[B.tgt(c.g)], F(B.compose(c.g, c.f)),
                             compose(F(c.g), F(c.f)), *c.iso));
        CHECK(oracles::naturally_isomorphic(F.values[B.src(c.f)], F.values[B.tgt(c.g)], F(B.compose(c.g, c.f)),
                                            compose(F(c.g), F(c.f))));
        if (B.is_identity(c.g) || B.is_identity(c.f))
            CHECK(c.strict);
    }
    // the mixed pair X -> U -> Y is not strict but isomorphic
    const auto mixed = verify_functoriality(G, F, {{mor(G, U, Y), mor(G, X, U)}});
    CHECK(mixed.front().iso.has_value());

    // sending X -> U to a constant functor at the top of D(U) breaks W -> U after X -> W
    GluedFunctor broken = F;
    const FiniteCategory& DU = F.values[U];
    broken.morphisms[mor(G, X, U)].functor.on_objects.assign(F.values[X].num_objects(), DU.num_objects() - 1);
    broken.morphisms[mor(G, X, U)].functor.on_morphisms.assign(F.values[X].num_morphisms(),
                                                               DU.identity(DU.num_objects() - 1));
    const auto bad = verify_functoriality(G, broken, {{mor(G, W, U), mor(G, X, W)}});
    CHECK_FALSE(bad.front().iso.has_value());
    CHECK(bad.front().distinguishing_object == 0);
}

TEST_CASE("invalid gluing data is rejected")
{
    const GluingInstance T = toy_compactification();
    const GeoCategory& G = T.geo;
    {
        ValueAssignment V = T.values;
        V.support.begin()->second.components[0] = V.values[U].identity(0);
        CHECK_THROWS_AS(validate_values(G, V), ValidationError);
        CHECK_THROWS_AS(glue(G, V), ValidationError);
    }
    {
        ValueAssignment V = T.values;
        V.support.erase(V.support.begin());
        CHECK_THROWS_WITH(validate_values(G, V), Catch::Matchers::ContainsSubstring("missing"));
    }
    {
        ValueAssignment V = T.values;
        V.proper_functors[mor(G, W, Y)].on_objects[0] = 1;
        CHECK_THROWS_AS(validate_values(G, V), ValidationError);
    }
    {
        std::vector<std::vector<Factorization>> chosen;
        for (int m = 0; m < G.base().num_morphisms(); ++m)
            chosen.push_back(G.chosen(m));
        chosen[mor(G, X, Y)] = {{mor(G, X, W), mor(G, U, Y)}};
        CHECK_THROWS_AS(GeoCategory(G.base(), G.open_class(), G.proper_class(), chosen), ValidationError);
        chosen[mor(G, X, Y)] = G.chosen(mor(G, X, Y));
        std::vector<char> open = G.open_class();
        open[mor(G, W, U)] = open[mor(G, U, Y)] = 1;
        CHECK_THROWS_WITH(GeoCategory(G.base(), open, G.proper_class(), chosen),
                          Catch::Matchers::ContainsSubstring("open class not closed"));
    }
}

TEST_CASE("shadow category of the toy data")
{
    const GluingInstance T = toy_compactification();
    const ShadowCategory S = shadow_category(T.geo, T.values);
    CHECK_NOTHROW(S.category.validate());
    CHECK(S.category.num_objects() == 5);
    // every functor class is determined by the monotone map on the poset factor
    CHECK(S.category.num_morphisms() == T.geo.base().num_morphisms());
}

TEST_CASE("routing the gluing data through the extension theorem", "[slow]")
{
    const GluingInstance T = toy_compactification();
    const GluingBridge br = gluing_bridge(T.geo, T.values);
    CHECK_NOTHROW(br.N.validate());
    CHECK(br.alpha.is_natural());
    CHECK(br.K_prime.count(1) == 18);
    ExtendOptions opt;
    opt.nerve_of = &br.shadow.category;
    const ExtensionOutcome out = extend_functor(br.i, br.f_prime, br.mapping, br.N, br.alpha, br.omega, opt);
    CHECK(out.connected);
    for (const LimitCheck& c : out.limit_checks)
        CHECK(c.agrees);
    const GluedFunctor F = glue(T.geo, T.values);
    CHECK(compare_with_glue(T.geo, br, out.f, F).empty());
    for (const auto& c : out.certificates)
        CHECK(c.kind == ContractibilityCertificate::Kind::TerminalObjectNerve);
}
