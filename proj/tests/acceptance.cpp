// Acceptance run: one PASS/FAIL line per criterion, with timings.

#include "anodyne_instances.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace sset;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Collects the first failure; later ones are counted.
class Outcome {
public:
    void require(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok && failures_++ == 0)
            first_ = what;
    }
    bool ok() const { return failures_ == 0; }
    std::string summary() const
    {
        std::ostringstream s;
        s << checks_ << " checks";
        if (failures_)
            s << ", " << failures_ << " failed, first: " << first_;
        return s.str();
    }
    void note(const std::string& n) { notes_ += (notes_.empty() ? "" : "; ") + n; }
    const std::string& notes() const { return notes_; }

private:
    int checks_ = 0, failures_ = 0;
    std::string first_, notes_;
};

struct Criterion {
    int id;
    std::string title;
    double limit;
    std::function<void(Outcome&)> run;
};

// 1 -------------------------------------------------------------------------

void simplex_category(Outcome& o)
{
    for (int n = 2; n <= 6; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                o.require(compose(face(n, j), face(n - 1, i)) == compose(face(n, i), face(n - 1, j - 1)),
                          "d d identity");
    for (int n = 0; n <= 6; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                o.require(compose(degeneracy(n, j), degeneracy(n + 1, i)) ==
                              compose(degeneracy(n, i), degeneracy(n + 1, j + 1)),
                          "s s identity");
    for (int n = 1; n <= 6; ++n)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i <= n; ++i) {
                const MonotoneMap lhs = compose(degeneracy(n - 1, j), face(n, i));
                if (i == j || i == j + 1)
                    o.require(lhs == MonotoneMap::identity(n - 1), "s_i d_i = id");
                else if (i < j)
                    o.require(lhs == compose(face(n - 1, i), degeneracy(n - 2, j - 1)), "s_j d_i, i < j");
                else
                    o.require(lhs == compose(face(n - 1, i - 1), degeneracy(n - 2, j)), "s_j d_i, i > j+1");
            }
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m)
            for (const auto& f : enumerate_monotone(n, m)) {
                int found = 0;
                for (int r = 0; r <= std::min(n, m); ++r)
                    for (const auto& e : enumerate_monotone(n, r))
                        if (e.is_surjective())
                            for (const auto& mo : enumerate_monotone(r, m))
                                found += mo.is_injective() && compose(mo, e) == f;
                o.require(found == 1, "epi-mono factorization not unique");
                const auto [e, mo] = epi_mono_factorize(f);
                o.require(e.is_surjective() && mo.is_injective() && compose(mo, e) == f, "factorization wrong");
            }
}

// 2 -------------------------------------------------------------------------

int nondegenerate_total(const SimplicialSet& X)
{
    int t = 0;
    for (int c : X.nondegenerate_counts())
        t += c;
    return t;
}

void colimit_lemma(Outcome& o)
{
    int used = 0;
    for (int D = 1; D <= 3; ++D) {
        std::vector<fixtures::Named> ks = fixtures::small_sets(D);
        ks.push_back({"vee", from_simplicial_complex(3, {{0, 1}, {0, 2}}, D)});
        ks.push_back({"edge_and_point", from_simplicial_complex(3, {{0, 1}}, D)});
        ks.push_back({"empty", SimplicialSet::empty(D)});
        for (const auto& [name, K] : ks) {
            if (nondegenerate_total(K) > 5)
                continue;
            ++used;
            const SimplexColimit c = colimit_over_simplices(K);
            c.colimit.validate();
            c.comparison.validate();
            o.require(c.comparison.is_iso(), name + " at D=" + std::to_string(D));
        }
    }
    o.note(std::to_string(used) + " fixtures");
}

// 3 -------------------------------------------------------------------------

void global_sections_lemmas(Outcome& o)
{
    const int D = 2;
    const std::vector<fixtures::Named> bases{{"delta0", standard_simplex(0, D)},
                                             {"delta1", standard_simplex(1, D)},
                                             {"boundary2", boundary(2, D)},
                                             {"delta2", standard_simplex(2, D)}};
    const auto values = fixtures::small_sets(D);
    int constant = 0;
    for (std::size_t k = 0; k < 10; ++k) {
        const auto& base = bases[k % bases.size()];
        const auto& X = values[k];
        const GlobalSections G = global_sections(constant_diagram(base.value, X.value));
        o.require(find_isomorphism(G.space(), X.value).has_value(), "Gamma c != id on " + base.name + "/" + X.name);
        ++constant;
    }
    const std::vector<fixtures::Named> Ks{{"delta1", standard_simplex(1, D)},
                                          {"delta2", standard_simplex(2, D)},
                                          {"boundary2", boundary(2, D)}};
    const std::vector<std::pair<std::string, FiniteCategory>> cats{
        {"arrow", arrow_category()}, {"iso_pair", iso_pair_category()}, {"ordinal2", ordinal_category(2)}};
    double slowest = 0;
    for (const auto& K : Ks)
        for (const auto& [name, cat] : cats) {
            const auto t0 = Clock::now();
            const SimplicialSet C = nerve(cat, D);
            const MappingFunctor MF = mapping_functor(K.value, C, D);
            const GlobalSections G = global_sections(MF.diagram);
            const MappingSpace HK = hom_sharp(flat(K.value), MF.target, D);
            const SimplicialMap cmp = mapping_comparison(MF, HK, G);
            o.require(cmp.is_valid() && cmp.is_iso(), "Gamma Map[K,C] != hom for " + K.name + ", " + name);
            const double dt = seconds_since(t0);
            slowest = std::max(slowest, dt);
            o.require(dt < 60, "instance over 60 s: " + K.name + ", " + name);
        }
    std::ostringstream n;
    n << constant << " constant diagrams, 9 mapping instances, slowest " << std::fixed << std::setprecision(2)
      << slowest << " s";
    o.note(n.str());
}

// 4 -------------------------------------------------------------------------

std::vector<AbsoluteSquare> square_instances()
{
    std::vector<AbsoluteSquare> out;
    out.push_back(absolute_pushout_in_delta(point(2), 2, 0, 0, 1));
    const SimplicialSet d1 = standard_simplex(1, 3);
    const int edge = simplex_edge(1, 0, 1);
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}})
        out.push_back(absolute_pushout_in_delta(d1, 3, edge, i, j));
    out.push_back(absolute_pushout_in_delta(d1, 2, 0, 0, 1));
    out.push_back(absolute_pullback_in_delta(1, 0, 1));
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}})
        out.push_back(absolute_pullback_in_delta(2, i, j));
    return out;
}

void absolute_squares(Outcome& o)
{
    const auto targets = oracles::small_categories(3, 6);
    std::size_t functors = 0;
    const auto squares = square_instances();
    for (const AbsoluteSquare& sq : squares) {
        o.require(sq.certificate.certified && sq.certificate.failures.empty(), "retraction equations");
        const auto [G, local] = sq.generated();
        const std::vector<std::pair<const FiniteCategory*, SplitDiagram>> ambients{
            {&sq.ambient.category(), sq.diagram}, {&G.category, local}};
        for (const auto& [A, q] : ambients)
            for (const FiniteCategory& B : targets)
                for (const Functor& F : oracles::all_functors(*A, B)) {
                    ++functors;
                    o.require(square_preserved(B, F, q, sq.certificate.kind), "square not preserved");
                }
    }
    o.note(std::to_string(squares.size()) + " squares, " + std::to_string(targets.size()) + " targets, " +
           std::to_string(functors) + " functors");
}

// 5 -------------------------------------------------------------------------

void anodyne_lemmas(Outcome& o)
{
    const auto ts = anodyne::triangles();
    const auto cs = anodyne::cubes();
    o.require(ts.size() >= 10 && cs.size() >= 10, "fewer than 10 instances");
    for (const auto& t : ts) {
        o.require(anodyne::horn_certified(t.f) && anodyne::horn_certified(t.h), t.name + ": inputs not certified");
        o.require(compose(t.g, t.f) == t.h && t.g.is_mono(), t.name + ": not a triangle of monos");
        o.require(anodyne::shadow(t.g), t.name + ": g lacks the anodyne shadow");
    }
    for (const auto& c : cs) {
        o.require(anodyne::horn_certified(c.f0) && anodyne::horn_certified(c.f1) && anodyne::horn_certified(c.f2),
                  c.name + ": inputs not certified");
        o.require(c.f01.is_mono(), c.name + ": f01 not mono");
        o.require(anodyne::shadow(c.f3), c.name + ": f3 lacks the anodyne shadow");
    }
    o.note(std::to_string(ts.size()) + " triangles, " + std::to_string(cs.size()) + " cubes");
}

// 6 -------------------------------------------------------------------------

void injective_fibrancy(Outcome& o)
{
    const int D = 2;
    int lifts = 0;
    for (const auto& K : {point(D), standard_simplex(1, D)})
        for (const FiniteCategory& cat : {arrow_category(), iso_pair_category()}) {
            const MappingFunctor MF = mapping_functor(K, nerve(cat, D), D);
            const GlobalSections G = global_sections(MF.diagram);
            const SimplexCategory& J = MF.diagram.index();
            for (int m = 0; m <= 1; ++m)
                for (int s = 0; s < G.space().count(m); ++s) {
                    const DiagramMap alpha = simplex_section(MF.diagram, m, G.family(m, s));
                    const ConeDiagram cone = cone_diagram(alpha.source());
                    const InjectiveLiftResult r = injective_lift(alpha, cone.eta);
                    ++lifts;
                    o.require(compose(r.beta, cone.eta) == alpha, "beta . eta != alpha");
                    for (int b = 0; b < J.num_objects(); ++b) {
                        const int n = J.object(b).dim;
                        for (int i = 0; n >= 1 && i <= n; ++i)
                            o.require(compose(MF.diagram.face_action(b, i), r.beta.component(b)) ==
                                          compose(r.beta.component(J.face_object(b, i)),
                                                  cone.diagram.face_action(b, i)),
                                      "face square");
                        for (int j = 0; n < D && j <= n; ++j)
                            o.require(compose(MF.diagram.degeneracy_action(b, j), r.beta.component(b)) ==
                                          compose(r.beta.component(J.degeneracy_object(b, j)),
                                                  cone.diagram.degeneracy_action(b, j)),
                                      "degeneracy square");
                    }
                }
        }
    o.note(std::to_string(lifts) + " lifts");
}

// 7 -------------------------------------------------------------------------

/// The edge path runs from f' to f . i in the restricted mapping complex.
bool witness_ok(const ExtensionOutcome& out, const SimplicialMap& f_prime, const SimplicialMap& i)
{
    const MappingSpace& R = out.restricted_maps;
    if (vertex_of(R, f_prime) != out.f_prime_vertex || vertex_of(R, compose(out.f, i)) != out.f_i_vertex)
        return false;
    int at = out.f_prime_vertex;
    for (int e : out.witness_edges) {
        const int s = R.space().face(1, 1, e), t = R.space().face(1, 0, e);
        if (s == at)
            at = t;
        else if (t == at)
            at = s;
        else
            return false;
    }
    return at == out.f_i_vertex && out.connected;
}

void main_theorem(Outcome& o)
{
    const int D = 2;
    int instances = 0, nonconstant = 0;
    auto run = [&](const std::string& name, const SimplicialMap& i, const SimplicialMap& f_prime,
                   const MappingFunctor& MF, const SSetDiagram& N, const DiagramMap& alpha,
                   const std::vector<int>& omega, const FiniteCategory* cat, bool constant) {
        ExtendOptions opt;
        opt.nerve_of = cat;
        const ExtensionOutcome out = extend_functor(i, f_prime, MF, N, alpha, omega, opt);
        o.require(witness_ok(out, f_prime, i), name + ": pi0 witness");
        o.require(!cat || !out.limit_checks.empty(), name + ": no limit checks");
        for (const LimitCheck& c : out.limit_checks)
            o.require(c.agrees, name + ": limit formula differs at " + std::to_string(c.object));
        ++instances;
        nonconstant += !constant;
        return out;
    };
    {
        const SimplicialSet K = standard_simplex(2, D);
        const FiniteCategory cat = ordinal_category(2);
        const SimplicialSet C = nerve(cat, D);
        const SimplicialMap i = horn_inclusion(2, 1, D);
        const MappingFunctor MF = mapping_functor(K, C, 1);
        const auto maps = all_maps(K, C);
        for (const SimplicialMap& g : {maps[1], maps.back()}) {
            const auto fam = map_to_family(MF, 0, compose(g, product_projection(point(D), K, 1)));
            const DiagramMap alpha = simplex_section(MF.diagram, 0, fam);
            const std::vector<int> omega(SimplexCategory(i.source()).num_objects(), 0);
            const auto out = run("horn into ordinal", i, compose(g, i), MF, alpha.source(), alpha, omega, &cat, true);
            o.require(out.f == g, "horn into ordinal: f != g");
        }
    }
    {
        const FiniteCategory cat = iso_pair_category();
        const SimplicialSet C = nerve(cat, D);
        const SimplicialSet K = standard_simplex(1, D);
        const SimplicialMap i = classifying_map(K, 0, 0);
        const MappingFunctor MF = mapping_functor(K, C, 2);
        const GlobalSections G = global_sections(MF.diagram);
        for (int e = 0; e < G.space().count(1); ++e) {
            if (G.space().is_degenerate(1, e))
                continue;
            const DiagramMap alpha = simplex_section(MF.diagram, 1, G.family(1, e));
            const std::vector<int> omega(SimplexCategory(i.source()).num_objects(), 0);
            const SimplicialMap g0 = section_to_map(MF, G.family(0, G.space().face(1, 1, e)));
            run("edge of Map[K,C]", i, compose(g0, i), MF, alpha.source(), alpha, omega, &cat, true);
        }
    }
    {
        const GluingInstance T = toy_compactification();
        const GluingBridge br = gluing_bridge(T.geo, T.values);
        bool varies = false;
        for (int b = 1; b < br.N.num_objects(); ++b)
            varies = varies || !(br.N.value(b) == br.N.value(0));
        run("compactification diagram", br.i, br.f_prime, br.mapping, br.N, br.alpha, br.omega,
            &br.shadow.category, !varies);
    }
    o.require(instances >= 5 && nonconstant >= 1, "need 5 instances with a non-constant N");
    o.note(std::to_string(instances) + " instances, " + std::to_string(nonconstant) + " with non-constant N");
}

// 8 -------------------------------------------------------------------------

void compactification(Outcome& o)
{
    const GluingInstance T = toy_compactification();
    const GeoCategory& G = T.geo;
    const FiniteCategory& B = G.base();
    const GluedFunctor F = glue(G, T.values);
    for (int f = 0; f < B.num_morphisms(); ++f) {
        const CompCategory C = comp_category(G, f);
        const std::string tag = "morphism " + std::to_string(f);
        o.require(is_filtered(opposite_category(C.category)) == Verdict::True, tag + ": Comp not filtered");
        const SimplicialSet N = nerve(C.category, 2);
        const ContractibilityCertificate cert = contractibility(N);
        o.require(cert.kind == ContractibilityCertificate::Kind::TerminalObjectNerve && revalidate(cert, N),
                  tag + ": nerve not certified");
        for (const Factorization& c : C.objects) {
            const Functor direct = compose(T.values.proper_functors.at(c.proper), T.values.open_functors.at(c.open));
            o.require(oracles::naturally_isomorphic(F.values[B.src(f)], F.values[B.tgt(f)], F(f), direct),
                      tag + ": not isomorphic to p_* j_#");
        }
    }
    const auto report = verify_functoriality(G, F);
    for (const FunctorialityCheck& c : report)
        o.require(c.iso.has_value(), "functoriality fails at " + std::to_string(c.g) + " after " + std::to_string(c.f));
    const GluingBridge br = gluing_bridge(G, T.values);
    ExtendOptions opt;
    opt.nerve_of = &br.shadow.category;
    const ExtensionOutcome out = extend_functor(br.i, br.f_prime, br.mapping, br.N, br.alpha, br.omega, opt);
    o.require(out.connected, "extension not connected");
    o.require(compare_with_glue(G, br, out.f, F).empty(), "extension differs from glue");
    o.note(std::to_string(B.num_morphisms()) + " morphisms, " + std::to_string(report.size()) + " composable pairs");
}

// 9 -------------------------------------------------------------------------

void marked_rlp(Outcome& o)
{
    const int D = 3;
    const std::vector<SimplicialSet> kan{point(D), nerve(iso_pair_category(), D)};
    const auto gens = marked_anodyne_generators(3, D, kan);
    for (const auto& [name, C] : fixtures::categories()) {
        const MarkedSimplicialSet Cn = natural(nerve(C, D));
        const MarkedMap p(Cn, sharp(point(D)), to_point(Cn.underlying()));
        o.require(check_rlp_marked(p, gens, default_lift_budget).verdict == Verdict::True, name);
    }
    o.note(std::to_string(gens.size()) + " generators, " + std::to_string(fixtures::categories().size()) +
           " quasi-categories");
}

// 10 ------------------------------------------------------------------------

void homology_oracle(Outcome& o)
{
    for (const auto& s : fixtures::small_sets(3))
        for (int k = 0; k < 3; ++k)
            o.require(homology(s.value, k).betti == oracles::rational_betti(s.value, k), s.name);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const SimplicialSet X = oracles::random_complex(rng, 20, 3);
        for (int k = 0; k < 3; ++k)
            o.require(homology(X, k).betti == oracles::rational_betti(X, k), "random " + std::to_string(trial));
    }
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "simplex category identities and factorizations", 1, simplex_category},
        {2, "colimit over simplices recovers K", 10, colimit_lemma},
        {3, "global sections of constant and mapping diagrams", 9 * 60, global_sections_lemmas},
        {4, "absolute squares under all small functors", 300, absolute_squares},
        {5, "anodyne triangle and cube lemmas", 60, anodyne_lemmas},
        {6, "injective lifts against cone inclusions", 120, injective_fibrancy},
        {7, "extension theorem end to end", 300, main_theorem},
        {8, "gluing compactification data", 300, compactification},
        {9, "marked anodyne generators against natural(C)", 120, marked_rlp},
        {10, "homology against the rational oracle", 30, homology_oracle},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double dt = seconds_since(t0);
        const bool in_time = dt < c.limit;
        const bool pass = o.ok() && in_time;
        failed += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  ("
                  << std::fixed << std::setprecision(2) << dt << " s, limit " << std::setprecision(0) << c.limit
                  << " s; " << o.summary() << (o.notes().empty() ? "" : "; " + o.notes())
                  << (in_time ? "" : "; over time") << ")" << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
