#include "sset/sset.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sset;

namespace {

enum Exit { Ok = 0, False = 1, Unknown = 2, InputError = 3 };

struct Budgets {
    std::int64_t lift = default_lift_budget;
    std::int64_t hom = default_hom_budget;
    int tietze = ContractibilityOptions{}.tietze_budget;
};

class InputFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads "path" or "path:name".
struct Source {
    Workspace ws;
    std::string name;

    template <class T>
    const T& get() const
    {
        return name.empty() ? ws.last<T>() : ws.get<T>(name);
    }
};

Source load(const std::string& spec, const Budgets& b)
{
    std::string path = spec, name;
    if (auto colon = spec.rfind(':'); colon != std::string::npos && colon > 0) {
        path = spec.substr(0, colon);
        name = spec.substr(colon + 1);
    }
    std::ifstream in(path);
    if (!in)
        throw InputFailure("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return {parse_workspace(text.str(), {}, b.hom), name};
    } catch (const ParseError& e) {
        throw InputFailure(path + ": " + e.what());
    }
}

/// A simplicial set, or the underlying set of a marked one.
const SimplicialSet& load_sset(const Source& s)
{
    if (!s.name.empty()) {
        const WorkspaceEntry& e = s.ws.at(s.name);
        if (const auto* m = std::get_if<MarkedSimplicialSet>(&e))
            return m->underlying();
        return std::get<SimplicialSet>(e);
    }
    return s.get<SimplicialSet>();
}

/// Marked input: MARKED as is, SSET through `plain`.
template <class F>
MarkedSimplicialSet load_marked(const Source& s, F plain)
{
    const WorkspaceEntry& e = s.name.empty() ? s.ws.at(s.ws.names().back()) : s.ws.at(s.name);
    if (const auto* m = std::get_if<MarkedSimplicialSet>(&e))
        return *m;
    return plain(load_sset(s));
}

int exit_of(Verdict v) { return v == Verdict::True ? Ok : v == Verdict::False ? False : Unknown; }

void emit(const WorkspaceEntry& e, const std::string& name) { std::cout << serialize(e, name); }

int report_verdict(const std::string& what, Verdict v)
{
    std::cout << what << ": " << to_string(v) << "\n";
    return exit_of(v);
}

int cmd_normalize(const Source& in)
{
    const SimplicialSet& X = load_sset(in);
    for (int n = 0; n <= X.dim_bound(); ++n)
        for (int x = 0; x < X.count(n); ++x) {
            const auto [epi, ref] = X.ez_normalize(n, x);
            std::cout << "(" << n << "," << x << ") = s[";
            for (std::size_t k = 0; k < epi.values().size(); ++k)
                std::cout << (k ? " " : "") << epi.values()[k];
            std::cout << "] (" << ref.dim << "," << ref.index << ")\n";
        }
    std::cout << "nondegenerate counts: " << describe_counts(X.nondegenerate_counts()) << "\n";
    return Ok;
}

int cmd_check(const std::string& property, const Source& in, int dim, const Budgets& b)
{
    auto bound = [&](int D) { return dim >= 0 ? dim : D; };
    if (property == "quasicat" || property == "kan") {
        const SimplicialSet& X = load_sset(in);
        const Verdict v = property == "quasicat" ? is_quasi_category(X, bound(X.dim_bound()), b.lift)
                                                 : is_kan_complex(X, bound(X.dim_bound()), b.lift);
        return report_verdict(property, v);
    }
    if (property == "inner-fib" || property == "kan-fib" || property == "trivial-fib") {
        const SimplicialMap& p = in.get<SimplicialMap>();
        const int D = bound(p.source().dim_bound());
        const Verdict v = property == "inner-fib" ? is_inner_fibration(p, D, b.lift)
                          : property == "kan-fib" ? is_kan_fibration(p, D, b.lift)
                                                  : is_trivial_fibration(p, D, b.lift);
        return report_verdict(property, v);
    }
    if (property == "contractible") {
        const SimplicialSet& X = load_sset(in);
        if (pi0_count(X) != 1) {
            std::cout << "contractible: false (" << pi0_count(X) << " components)\n";
            return False;
        }
        for (int k = 1; k < X.dim_bound(); ++k)
            if (!(reduced_homology(X, k) == HomologyGroup{})) {
                std::cout << "contractible: false (H_" << k << " = " << reduced_homology(X, k) << ")\n";
                return False;
            }
        ContractibilityOptions opt;
        opt.tietze_budget = b.tietze;
        const ContractibilityCertificate c = contractibility(X, opt);
        std::cout << "contractible: " << (c.certified() ? "true" : "unknown") << "\ncertificate: " << to_string(c.kind)
                  << "\n";
        if (!c.detail.empty())
            std::cout << "detail: " << c.detail << "\n";
        return c.certified() ? Ok : Unknown;
    }
    if (property == "filtered")
        return report_verdict("filtered", is_filtered(in.get<FiniteCategory>(), b.lift));
    throw InputFailure("unknown property '" + property + "'");
}

int cmd_homology(const Source& in)
{
    const SimplicialSet& X = load_sset(in);
    std::vector<int> betti;
    for (int k = 0; k < X.dim_bound(); ++k) {
        const HomologyGroup h = homology(X, k);
        std::cout << "H_" << k << " = " << h << "\n";
        betti.push_back(h.betti);
    }
    std::cout << "betti: " << describe_counts(betti) << "\n";
    return Ok;
}

int cmd_hom(const Source& x, const Source& c, const std::string& kind, int dim, const Budgets& b)
{
    const MarkedSimplicialSet X = load_marked(x, [](const SimplicialSet& s) { return flat(s); });
    const MarkedSimplicialSet C = load_marked(c, [](const SimplicialSet& s) { return natural(s); });
    const int D = dim >= 0 ? dim : C.underlying().dim_bound();
    const MappingSpace H = kind == "sharp" ? hom_sharp(X, C, D, b.hom) : hom_flat(X, C, D, b.hom);
    std::cout << "# hom_" << kind << " with simplex counts " << describe_counts([&] {
        std::vector<int> c;
        for (int n = 0; n <= H.space().dim_bound(); ++n)
            c.push_back(H.space().count(n));
        return c;
    }()) << "\n";
    emit(H.space(), "hom");
    return Ok;
}

int cmd_lift(const Source& in, const Budgets& b)
{
    LiftingProblem prob{in.ws.get<SimplicialMap>("left"), in.ws.get<SimplicialMap>("right"),
                        in.ws.get<SimplicialMap>("top"), in.ws.get<SimplicialMap>("bottom"), {}, {}};
    const LiftResult r = solve_lift(prob, b.lift);
    std::cout << "# search steps " << r.steps << "\n";
    switch (r.status) {
    case SearchStatus::Found:
        std::cout << "# lift found\n";
        emit(*r.lift, "lift");
        return Ok;
    case SearchStatus::NoSolution:
        std::cout << "# no lift exists\n";
        return False;
    default:
        std::cout << "# budget exhausted\n";
        return Unknown;
    }
}

int cmd_colim(const Source& in)
{
    const SimplexColimit c = colimit_over_simplices(load_sset(in));
    const bool iso = c.comparison.is_iso();
    std::cout << "# comparison to the input is an isomorphism: " << (iso ? "yes" : "no") << "\n";
    emit(c.colimit, "colimit");
    return iso ? Ok : False;
}

int cmd_extend(const Source& in, const Budgets& b)
{
    const Workspace& ws = in.ws;
    const SimplicialMap& i = ws.get<SimplicialMap>("i");
    const SimplicialMap& f_prime = ws.get<SimplicialMap>("f_prime");
    const MappingEntry& MF = ws.get<MappingEntry>("mapping");
    const SSetDiagram& N = ws.get<SSetDiagram>("N");
    const DiagramMap& alpha = ws.get<DiagramMap>("alpha");
    const Section& omega = ws.get<Section>("omega");
    if (omega.dim != 0)
        throw InputFailure("omega must be a vertex family");
    ExtendOptions opt;
    opt.lift_budget = b.lift;
    opt.hom_budget = b.hom;
    opt.contractibility.tietze_budget = b.tietze;
    if (ws.contains("C_category"))
        opt.nerve_of = &ws.get<FiniteCategory>("C_category");
    const ExtensionOutcome out = extend_functor(i, f_prime, MF.functor, N, alpha, omega.family, opt);
    std::cout << "# connected: " << (out.connected ? "yes" : "no") << "\n# witness length "
              << out.witness_edges.size() << "\n";
    for (std::size_t b2 = 0; b2 < out.certificates.size(); ++b2)
        std::cout << "# certificate " << b2 << ": " << to_string(out.certificates[b2].kind) << "\n";
    for (const LimitCheck& c : out.limit_checks)
        std::cout << "# limit check at object " << c.object << ": " << (c.agrees ? "agrees" : "differs") << "\n";
    emit(out.f, "f");
    bool agree = out.connected;
    for (const LimitCheck& c : out.limit_checks)
        agree = agree && c.agrees;
    return agree ? Ok : False;
}

int cmd_glue(const Source& in, const Budgets& b)
{
    const GluingInstance& g = in.get<GluingInstance>();
    const GluedFunctor F = glue(g.geo, g.values, b.lift);
    const FiniteCategory& B = g.geo.base();
    Writer w;
    for (int m = 0; m < B.num_morphisms(); ++m)
        w.functor({F.values[B.src(m)], F.values[B.tgt(m)], F(m)}, "F_" + std::to_string(m));
    std::cout << w.str();
    bool ok = true;
    for (const FunctorialityCheck& c : verify_functoriality(g.geo, F)) {
        std::cout << "# " << c.g << " after " << c.f << ": "
                  << (c.strict ? "strict" : c.iso ? "isomorphic" : "not isomorphic") << "\n";
        ok = ok && c.iso.has_value();
    }
    std::cout << "# functorial up to isomorphism: " << (ok ? "yes" : "no") << "\n";
    return ok ? Ok : False;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite truncated simplicial sets: constructions, checks and the extension theorem"};
    app.require_subcommand(1);
    Budgets b;
    app.add_option("--budget-lift", b.lift, "Search steps for lifting and extension searches")->capture_default_str();
    app.add_option("--budget-hom", b.hom, "Search steps for mapping-space enumeration")->capture_default_str();
    app.add_option("--budget-tietze", b.tietze, "Tietze moves when deciding pi_1 triviality")->capture_default_str();

    std::string a, c, property, kind = "flat";
    int dim = -1;
    int code = Ok;
    auto input = [&](CLI::App* s, std::string& into, const char* what) {
        s->add_option("input", into, what)->required();
    };

    auto* normalize = app.add_subcommand("normalize", "Eilenberg-Zilber normal form of every simplex");
    input(normalize, a, "SSET file[:name]");
    normalize->callback([&] { code = cmd_normalize(load(a, b)); });

    auto* prod = app.add_subcommand("product", "Product of two simplicial sets");
    prod->add_option("x", a, "SSET file[:name]")->required();
    prod->add_option("y", c, "SSET file[:name]")->required();
    prod->callback([&] {
        emit(product(load_sset(load(a, b)), load_sset(load(c, b))), "product");
    });

    auto* push = app.add_subcommand("pushout", "Pushout of X <- A -> Y");
    push->add_option("f", a, "MAP file[:name] for A -> X")->required();
    push->add_option("g", c, "MAP file[:name] for A -> Y")->required();
    push->callback([&] {
        const Source sa = load(a, b), sc = load(c, b);
        emit(pushout(sa.get<SimplicialMap>(), sc.get<SimplicialMap>()).object, "pushout");
    });

    auto* pull = app.add_subcommand("pullback", "Pullback of X -> S <- Y");
    pull->add_option("f", a, "MAP file[:name] for X -> S")->required();
    pull->add_option("g", c, "MAP file[:name] for Y -> S")->required();
    pull->callback([&] {
        const Source sa = load(a, b), sc = load(c, b);
        emit(pullback(sa.get<SimplicialMap>(), sc.get<SimplicialMap>()).object, "pullback");
    });

    auto* hom = app.add_subcommand("hom", "Mapping complex; plain sources are flat, plain targets natural");
    hom->add_option("x", a, "SSET or MARKED file[:name]")->required();
    hom->add_option("c", c, "SSET or MARKED file[:name]")->required();
    hom->add_option("--kind", kind, "flat or sharp")->check(CLI::IsMember({"flat", "sharp"}))->capture_default_str();
    hom->add_option("--dim", dim, "Dimension bound of the result (default: that of the target)");
    hom->callback([&] { code = cmd_hom(load(a, b), load(c, b), kind, dim, b); });

    auto* check = app.add_subcommand("check", "Decide a property; exit 0 true, 1 false, 2 unknown");
    check->add_option("property", property, "quasicat|kan|inner-fib|kan-fib|trivial-fib|contractible|filtered")
        ->required()
        ->check(CLI::IsMember(
            {"quasicat", "kan", "inner-fib", "kan-fib", "trivial-fib", "contractible", "filtered"}));
    check->add_option("input", a, "SSET, MAP or CAT file[:name]")->required();
    check->add_option("--dim", dim, "Highest horn dimension (default: the dimension bound)");
    check->callback([&] { code = cmd_check(property, load(a, b), dim, b); });

    auto* homol = app.add_subcommand("homology", "Integral homology below the dimension bound");
    input(homol, a, "SSET file[:name]");
    homol->callback([&] { code = cmd_homology(load(a, b)); });

    auto* lift = app.add_subcommand("lift", "Solve a lifting problem given by MAP blocks left, right, top, bottom");
    input(lift, a, "problem file");
    lift->callback([&] { code = cmd_lift(load(a, b), b); });

    auto* colim = app.add_subcommand("colim-simplices", "Colimit of the simplices of K, compared with K");
    input(colim, a, "SSET file[:name]");
    colim->callback([&] { code = cmd_colim(load(a, b)); });

    auto* gamma = app.add_subcommand("gamma", "Global sections of a diagram");
    input(gamma, a, "DIAGRAM or MAPPING file[:name]");
    gamma->callback([&] {
        const Source s = load(a, b);
        const WorkspaceEntry& e = s.name.empty() ? s.ws.at(s.ws.names().back()) : s.ws.at(s.name);
        const SSetDiagram& F =
            std::holds_alternative<MappingEntry>(e) ? std::get<MappingEntry>(e).functor.diagram : std::get<SSetDiagram>(e);
        emit(global_sections(F, b.hom).space(), "sections");
    });

    auto* extend = app.add_subcommand(
        "extend", "Extend f' along i; reads i, f_prime, mapping, N, alpha, omega and optionally C_category");
    input(extend, a, "workspace file");
    extend->callback([&] { code = cmd_extend(load(a, b), b); });

    auto* gl = app.add_subcommand("glue", "Glue compactification data and verify functoriality");
    input(gl, a, "GEO file[:name]");
    gl->callback([&] { code = cmd_glue(load(a, b), b); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int r = app.exit(e);
        return r == 0 ? Ok : InputError;
    } catch (const InputFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return Unknown;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    } catch (const std::bad_variant_access&) {
        std::cerr << "error: input has the wrong kind\n";
        return InputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    }
    return code;
}
