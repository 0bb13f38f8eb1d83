#include "fixtures.hpp"
#include "sset/io.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <regex>
#include <sstream>

using namespace sset;

namespace {

template <class T>
T round_trip(const T& x, const std::string& name = "x")
{
    const Workspace ws = parse_workspace(serialize(WorkspaceEntry(x), name));
    REQUIRE(ws.names().back() == name);
    return ws.get<T>(name);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Replaces the table after "prefix:" on its line.
std::string replace_line(const std::string& text, const std::string& prefix, const std::string& replacement)
{
    const std::size_t at = text.find(prefix);
    REQUIRE(at != std::string::npos);
    const std::size_t end = text.find('\n', at);
    return text.substr(0, at) + replacement + text.substr(end);
}

} // namespace

TEST_CASE("simplicial sets round trip")
{
    const SimplicialSet d1 = standard_simplex(1, 2);
    CHECK(parse_sset(serialize(d1)) == d1);
    for (int D : {0, 1, 3})
        for (const auto& X : fixtures::small_sets(D)) {
            INFO(X.name << " at D=" << D);
            CHECK(parse_sset(serialize(X.value, X.name)) == X.value);
        }
    CHECK(parse_sset(serialize(SimplicialSet::empty(2))) == SimplicialSet::empty(2));
}

TEST_CASE("every other kind round trips")
{
    const int D = 2;
    const SimplicialSet K = standard_simplex(1, D);
    const SimplicialSet C = nerve(iso_pair_category(), D);

    CHECK(round_trip(sharp(C)) == sharp(C));
    CHECK(round_trip(flat(K)) == flat(K));
    CHECK(round_trip(horn_inclusion(2, 1, D)) == horn_inclusion(2, 1, D));
    CHECK(round_trip(classifying_map(K, 0, 1)) == classifying_map(K, 0, 1));

    for (const auto& [name, cat] : fixtures::categories()) {
        INFO(name);
        CHECK(round_trip(cat, name) == cat);
    }
    const FiniteCategory P = product_category(ordinal_category(2), iso_pair_category());
    CHECK(round_trip(P) == P);

    const FiniteCategory I = iso_pair_category();
    const TypedFunctor F{arrow_category(), I, {{0, 1}, {0, 3, 1}}};
    CHECK(round_trip(F) == F);
    const Functor swap{{1, 0}, {3, 2, 1, 0}};
    const auto eta = find_natural_iso(I, I, identity_functor(I), swap);
    REQUIRE(eta.has_value());
    const TypedNaturalIso N{{I, I, identity_functor(I)}, {I, I, swap}, *eta};
    CHECK(round_trip(N) == N);

    const SSetDiagram c = constant_diagram(K, fixtures::circle(D));
    CHECK(round_trip(c) == c);
    const ConeDiagram cone = cone_diagram(constant_diagram(K, standard_simplex(1, D)));
    CHECK(round_trip(cone.diagram) == cone.diagram);
    CHECK(round_trip(cone.eta) == cone.eta);

    const GlobalSections G = global_sections(c);
    const Section s{c, 1, G.family(1, 0)};
    CHECK(round_trip(s) == s);

    MappingEntry m{K, nerve(arrow_category(), D), 1, {}};
    m.functor = mapping_functor(m.base, m.target, 1);
    const MappingEntry back = round_trip(m);
    CHECK(back == m);
    CHECK(back.functor.diagram == m.functor.diagram);

    const GluingInstance T = toy_compactification();
    CHECK(round_trip(T) == T);
}

TEST_CASE("a workspace holds several named objects")
{
    Writer w;
    const SimplicialSet K = standard_simplex(1, 2);
    const std::string a = w.sset(K, "K");
    const std::string b = w.map(horn_inclusion(2, 1, 2), "i");
    CHECK(w.sset(K, "again") == a);
    const Workspace ws = parse_workspace(w.str());
    CHECK(ws.get<SimplicialSet>("K") == K);
    CHECK(ws.get<SimplicialMap>(b) == horn_inclusion(2, 1, 2));
    CHECK_THROWS_AS(ws.get<FiniteCategory>("K"), std::invalid_argument);
    CHECK_THROWS_AS(ws.at("nope"), std::out_of_range);
    // names stay unique across files
    CHECK_THROWS_AS(parse_workspace(serialize(K, "K"), ws), ParseError);
}

TEST_CASE("broken face identity names (n,i,j)")
{
    const int D = 2;
    const SimplicialSet d2 = standard_simplex(2, D);
    const int top = top_simplex(2, D);
    std::vector<int> row;
    for (int x = 0; x < d2.count(2); ++x)
        row.push_back(d2.face(2, 0, x));
    row[top] = simplex_edge(2, 0, 1);
    std::string table = "face 2 0:";
    for (int y : row)
        table += " " + std::to_string(y);
    const std::string text = replace_line(serialize(d2), "face 2 0:", table);
    try {
        parse_sset(text);
        FAIL("accepted a broken face table");
    } catch (const ParseError& e) {
        const std::string what = e.what();
        INFO(what);
        CHECK(what.find("face identity") != std::string::npos);
        CHECK(std::regex_search(what, std::regex(R"(\(n,i,j\)=\(2,\d,\d\))")));
        CHECK(e.line() == 1);
    }
}

TEST_CASE("syntax errors carry line and column")
{
    const std::string good = serialize(standard_simplex(1, 1));
    // header missing
    const std::string headless = good.substr(good.find('\n') + 1);
    try {
        parse_sset(headless);
        FAIL("accepted text without a header");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 1);
        CHECK(std::string(e.what()).find("SSET v1") != std::string::npos);
    }
    // a bad integer on line 3
    const std::string bad = replace_line(good, "counts", "counts 2 x");
    try {
        parse_sset(bad);
        FAIL("accepted a bad count");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 10);
    }
    // comments and blank lines are ignored
    CHECK(parse_sset("# leading comment\n\n" + good) == standard_simplex(1, 1));
    CHECK_THROWS_AS(parse_sset(good.substr(0, good.rfind("end"))), ParseError);
    CHECK_THROWS_AS(parse_sset("SSET v2\n"), ParseError);
}

TEST_CASE("invalid objects are rejected at load time")
{
    const FiniteCategory I = iso_pair_category();
    Writer w;
    w.functor({I, I, identity_functor(I)}, "F");
    std::string text = w.str();
    text = replace_line(text, "morphisms:", "morphisms: 0 2 1 3");
    CHECK_THROWS_AS(parse_workspace(text), ParseError);

    const SimplicialMap f = classifying_map(standard_simplex(1, 2), 0, 1);
    const std::string m = serialize(WorkspaceEntry(f), "f");
    CHECK_THROWS_WITH(parse_workspace(replace_line(m, "level 1:", "level 1: 0 0 0")),
                      Catch::Matchers::ContainsSubstring("line"));
}

TEST_CASE("checked-in fixtures parse to their constructions")
{
    const std::string dir = SSET_FIXTURE_DIR;
    CHECK(parse_sset(read_file(dir + "/delta1.sset")) == standard_simplex(1, 2));
    CHECK(parse_sset(read_file(dir + "/boundary2.sset")) == boundary(2, 2));
    CHECK(parse_workspace(read_file(dir + "/nerve_arrow.sset")).first<SimplicialSet>() ==
          nerve(arrow_category(), 3));
    CHECK(parse_workspace(read_file(dir + "/ordinal2.cat")).first<FiniteCategory>() == ordinal_category(2));
    const Workspace g = parse_workspace(read_file(dir + "/toy.geo"));
    CHECK(g.get<GluingInstance>(g.names().back()) == toy_compactification());
}
