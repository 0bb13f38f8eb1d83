#pragma once

// Gluing a functor out of compactification data: a base category with open
// and proper classes, value categories, j_# and p_*, and support isomorphisms.

#include "category.hpp"
#include "diagrams.hpp"
#include "homotopy.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace sset {

/// f = proper . open.
struct Factorization {
    int open = -1;
    int proper = -1;
    friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

class GeoCategory {
public:
    GeoCategory() = default;
    GeoCategory(FiniteCategory base, std::vector<char> open, std::vector<char> proper,
                std::vector<std::vector<Factorization>> chosen)
        : base_(std::move(base)), open_(std::move(open)), proper_(std::move(proper)), chosen_(std::move(chosen))
    {
        validate();
    }

    const FiniteCategory& base() const { return base_; }
    bool is_open(int m) const { return open_.at(m) != 0; }
    bool is_proper(int m) const { return proper_.at(m) != 0; }
    const std::vector<Factorization>& chosen(int m) const { return chosen_.at(m); }
    const std::vector<char>& open_class() const { return open_; }
    const std::vector<char>& proper_class() const { return proper_; }

    bool factors(int f, const Factorization& c) const
    {
        return c.open >= 0 && c.proper >= 0 && c.open < base_.num_morphisms() && c.proper < base_.num_morphisms() &&
               is_open(c.open) && is_proper(c.proper) && base_.tgt(c.open) == base_.src(c.proper) &&
               base_.compose(c.proper, c.open) == f;
    }

    /// Every factorization of f into an open followed by a proper morphism.
    std::vector<Factorization> factorizations(int f) const
    {
        std::vector<Factorization> out;
        for (int j = 0; j < base_.num_morphisms(); ++j)
            if (is_open(j) && base_.src(j) == base_.src(f))
                for (int p : base_.hom(base_.tgt(j), base_.tgt(f)))
                    if (is_proper(p) && base_.compose(p, j) == f)
                        out.push_back({j, p});
        return out;
    }

    /// The chosen square used to compose compactifications: the first chosen
    /// factorization of proper-then-open.
    Factorization exchange(int m) const { return chosen(m).front(); }

    void validate() const
    {
        base_.validate();
        const int M = base_.num_morphisms();
        if (static_cast<int>(open_.size()) != M || static_cast<int>(proper_.size()) != M ||
            static_cast<int>(chosen_.size()) != M)
            throw ValidationError("geo category: class tables must have one entry per morphism");
        for (int x = 0; x < base_.num_objects(); ++x)
            if (!is_open(base_.identity(x)) || !is_proper(base_.identity(x)))
                throw ValidationError("geo category: identity of object " + std::to_string(x) +
                                      " missing from a class");
        for (int g = 0; g < M; ++g)
            for (int f = 0; f < M; ++f) {
                if (base_.tgt(f) != base_.src(g))
                    continue;
                if (is_open(g) && is_open(f) && !is_open(base_.compose(g, f)))
                    throw ValidationError("geo category: open class not closed under " + std::to_string(g) + "." +
                                          std::to_string(f));
                if (is_proper(g) && is_proper(f) && !is_proper(base_.compose(g, f)))
                    throw ValidationError("geo category: proper class not closed under " + std::to_string(g) +
                                          "." + std::to_string(f));
            }
        for (int f = 0; f < M; ++f) {
            if (chosen_[f].empty())
                throw ValidationError("geo category: morphism " + std::to_string(f) + " has no chosen factorization");
            for (const Factorization& c : chosen_[f])
                if (!factors(f, c))
                    throw ValidationError("geo category: chosen pair (" + std::to_string(c.open) + "," +
                                          std::to_string(c.proper) + ") does not factor morphism " +
                                          std::to_string(f));
        }
    }

    friend bool operator==(const GeoCategory&, const GeoCategory&) = default;

private:
    FiniteCategory base_;
    std::vector<char> open_, proper_;
    std::vector<std::vector<Factorization>> chosen_;
};

/// A morphism g : (j, p) -> (j', p') of compactifications: g j = j', p' g = p.
struct CompMorphism {
    Factorization from, to;
    int via = -1;
    friend auto operator<=>(const CompMorphism&, const CompMorphism&) = default;
};

struct ValueAssignment {
    std::vector<FiniteCategory> values;             ///< D(X)
    std::map<int, Functor> open_functors;           ///< j_#
    std::map<int, Functor> proper_functors;         ///< p_*
    std::map<CompMorphism, NaturalTransformation> support; ///< F_c(from) => F_c(to)
    friend bool operator==(const ValueAssignment&, const ValueAssignment&) = default;
};

/// F_c(j, p) = p_* j_#.
inline Functor compactified(const ValueAssignment& V, const Factorization& c)
{
    auto j = V.open_functors.find(c.open);
    auto p = V.proper_functors.find(c.proper);
    if (j == V.open_functors.end() || p == V.proper_functors.end())
        throw std::invalid_argument("compactified: functor missing for (" + std::to_string(c.open) + "," +
                                    std::to_string(c.proper) + ")");
    return compose(p->second, j->second);
}

struct CompCategory {
    int morphism = -1;
    FiniteCategory category;
    std::vector<Factorization> objects;
    std::vector<int> via; ///< base morphism of each morphism

    int object_of(const Factorization& c) const
    {
        for (std::size_t a = 0; a < objects.size(); ++a)
            if (objects[a] == c)
                return static_cast<int>(a);
        return -1;
    }
    CompMorphism describe(int m) const
    {
        return {objects[category.src(m)], objects[category.tgt(m)], via[m]};
    }
};

/// The category of compactifications of f.
inline CompCategory comp_category(const GeoCategory& G, int f)
{
    const FiniteCategory& B = G.base();
    CompCategory out;
    out.morphism = f;
    out.objects = G.factorizations(f);
    const int n = static_cast<int>(out.objects.size());
    std::vector<FiniteCategory::Morphism> mor;
    std::map<std::tuple<int, int, int>, int> index;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Factorization &ca = out.objects[a], &cb = out.objects[b];
            for (int g : B.hom(B.tgt(ca.open), B.tgt(cb.open)))
                if (B.compose(g, ca.open) == cb.open && B.compose(cb.proper, g) == ca.proper) {
                    index.emplace(std::tuple{a, b, g}, static_cast<int>(mor.size()));
                    mor.push_back({a, b});
                    out.via.push_back(g);
                }
        }
    std::vector<int> ids(n);
    for (int a = 0; a < n; ++a)
        ids[a] = index.at({a, a, B.identity(B.tgt(out.objects[a].open))});
    const int M = static_cast<int>(mor.size());
    std::vector<std::vector<int>> comp(M, std::vector<int>(M, -1));
    for (int g = 0; g < M; ++g)
        for (int h = 0; h < M; ++h)
            if (mor[h].tgt == mor[g].src)
                comp[g][h] = index.at({mor[h].src, mor[g].tgt, B.compose(out.via[g], out.via[h])});
    out.category = FiniteCategory(n, std::move(mor), std::move(ids), std::move(comp));
    return out;
}

/// Nonempty, cocones on pairs of objects, coequalizers on parallel pairs.
inline Verdict is_filtered(const FiniteCategory& C, std::int64_t budget = 1'000'000)
{
    if (C.num_objects() == 0)
        return Verdict::False;
    std::int64_t steps = 0;
    auto tick = [&] { return ++steps <= budget; };
    for (int a = 0; a < C.num_objects(); ++a)
        for (int b = a + 1; b < C.num_objects(); ++b) {
            bool found = false;
            for (int c = 0; c < C.num_objects() && !found; ++c) {
                if (!tick())
                    return Verdict::Unknown;
                found = !C.hom(a, c).empty() && !C.hom(b, c).empty();
            }
            if (!found)
                return Verdict::False;
        }
    for (int a = 0; a < C.num_objects(); ++a)
        for (int b = 0; b < C.num_objects(); ++b) {
            const std::vector<int> par = C.hom(a, b);
            for (std::size_t x = 0; x < par.size(); ++x)
                for (std::size_t y = x + 1; y < par.size(); ++y) {
                    bool found = false;
                    for (int w = 0; w < C.num_morphisms() && !found; ++w) {
                        if (!tick())
                            return Verdict::Unknown;
                        found = C.src(w) == b && C.compose(w, par[x]) == C.compose(w, par[y]);
                    }
                    if (!found)
                        return Verdict::False;
                }
        }
    return Verdict::True;
}

/// Checks the functors, class compatibility on the nose and the support data.
inline void validate_values(const GeoCategory& G, const ValueAssignment& V)
{
    const FiniteCategory& B = G.base();
    if (static_cast<int>(V.values.size()) != B.num_objects())
        throw ValidationError("values: need one category per base object");
    for (const FiniteCategory& D : V.values)
        D.validate();
    auto check_class = [&](const std::map<int, Functor>& table, const char* name, auto member) {
        for (int m = 0; m < B.num_morphisms(); ++m) {
            if (!member(m))
                continue;
            auto it = table.find(m);
            if (it == table.end())
                throw ValidationError(std::string("values: ") + name + " functor missing for morphism " +
                                      std::to_string(m));
            try {
                validate_functor(V.values[B.src(m)], V.values[B.tgt(m)], it->second);
            } catch (const ValidationError& e) {
                throw ValidationError(std::string("values: ") + name + " functor of morphism " + std::to_string(m) +
                                      ": " + e.what());
            }
        }
        for (const auto& [m, F] : table)
            if (m < 0 || m >= B.num_morphisms() || !member(m))
                throw ValidationError(std::string("values: ") + name + " functor given for a morphism outside the class");
        for (int x = 0; x < B.num_objects(); ++x)
            if (!(table.at(B.identity(x)) == identity_functor(V.values[x])))
                throw ValidationError(std::string("values: ") + name + " functor of an identity is not the identity");
        for (int g = 0; g < B.num_morphisms(); ++g)
            for (int f = 0; f < B.num_morphisms(); ++f)
                if (B.tgt(f) == B.src(g) && member(g) && member(f) &&
                    !(table.at(B.compose(g, f)) == compose(table.at(g), table.at(f))))
                    throw ValidationError(std::string("values: ") + name + " functors do not compose at " +
                                          std::to_string(g) + "." + std::to_string(f));
    };
    check_class(V.open_functors, "open", [&](int m) { return G.is_open(m); });
    check_class(V.proper_functors, "proper", [&](int m) { return G.is_proper(m); });

    for (int f = 0; f < B.num_morphisms(); ++f) {
        const CompCategory C = comp_category(G, f);
        const FiniteCategory &A = V.values[B.src(f)], &T = V.values[B.tgt(f)];
        auto datum = [&](int m) -> NaturalTransformation {
            const CompMorphism cm = C.describe(m);
            if (C.category.is_identity(m)) {
                NaturalTransformation id;
                for (int x : compactified(V, cm.from).on_objects)
                    id.components.push_back(T.identity(x));
                return id;
            }
            auto it = V.support.find(cm);
            if (it == V.support.end())
                throw ValidationError("values: support datum missing over morphism " + std::to_string(f) +
                                      " along " + std::to_string(cm.via));
            return it->second;
        };
        for (int m = 0; m < C.category.num_morphisms(); ++m) {
            const CompMorphism cm = C.describe(m);
            if (!is_natural_iso(A, T, compactified(V, cm.from), compactified(V, cm.to), datum(m)))
                throw ValidationError("values: support datum over morphism " + std::to_string(f) + " along " +
                                      std::to_string(cm.via) + " is not a natural isomorphism");
        }
        for (int g = 0; g < C.category.num_morphisms(); ++g)
            for (int h = 0; h < C.category.num_morphisms(); ++h) {
                if (C.category.tgt(h) != C.category.src(g))
                    continue;
                const NaturalTransformation a = datum(h), b = datum(g), ab = datum(C.category.compose(g, h));
                for (std::size_t x = 0; x < ab.components.size(); ++x)
                    if (T.compose(b.components[x], a.components[x]) != ab.components[x])
                        throw ValidationError("values: support data over morphism " + std::to_string(f) +
                                              " do not compose coherently");
            }
    }
    for (const auto& [cm, eta] : V.support) {
        const int f = G.base().compose(cm.from.proper, cm.from.open);
        const CompCategory C = comp_category(G, f);
        const int a = C.object_of(cm.from), b = C.object_of(cm.to);
        bool found = false;
        for (int m : a >= 0 && b >= 0 ? C.category.hom(a, b) : std::vector<int>{})
            found = found || C.via[m] == cm.via;
        if (!found)
            throw ValidationError("values: support datum along " + std::to_string(cm.via) +
                                  " is not a morphism of compactifications");
    }
}

/// An isomorphism identifying the chosen compactification with another one.
struct SupportLink {
    Factorization to;
    int comp_morphism = -1;
    NaturalTransformation iso; ///< F_c(chosen) => F_c(to)
};

struct GluedMorphism {
    int morphism = -1;
    Factorization chosen; ///< weakly initial compactification
    Functor functor;      ///< F_c(chosen)
    std::vector<SupportLink> identifications;
};

struct GluedFunctor {
    std::vector<FiniteCategory> values;
    std::vector<GluedMorphism> morphisms;
    const Functor& operator()(int m) const { return morphisms.at(m).functor; }
};

/// F_!: on each morphism, F_c at a compactification mapping to all others.
inline GluedFunctor glue(const GeoCategory& G, const ValueAssignment& V, std::int64_t budget = 1'000'000)
{
    validate_values(G, V);
    const FiniteCategory& B = G.base();
    GluedFunctor out;
    out.values = V.values;
    for (int f = 0; f < B.num_morphisms(); ++f) {
        const CompCategory C = comp_category(G, f);
        const Verdict v = is_filtered(opposite_category(C.category), budget);
        if (v == Verdict::Unknown)
            throw BudgetExceeded("glue: filteredness of the compactifications of morphism " + std::to_string(f),
                                 budget);
        if (v == Verdict::False)
            throw std::invalid_argument("glue: compactifications of morphism " + std::to_string(f) +
                                        " are not cofiltered");
        int chosen = -1;
        for (int a = 0; a < C.category.num_objects() && chosen < 0; ++a) {
            bool all = true;
            for (int b = 0; b < C.category.num_objects() && all; ++b)
                all = !C.category.hom(a, b).empty();
            if (all)
                chosen = a;
        }
        if (chosen < 0)
            throw std::logic_error("glue: no weakly initial compactification");
        GluedMorphism g;
        g.morphism = f;
        g.chosen = C.objects[chosen];
        g.functor = compactified(V, g.chosen);
        for (int b = 0; b < C.category.num_objects(); ++b) {
            if (b == chosen)
                continue;
            const int m = C.category.hom(chosen, b).front();
            g.identifications.push_back({C.objects[b], m, V.support.at(C.describe(m))});
        }
        out.morphisms.push_back(std::move(g));
    }
    return out;
}

struct FunctorialityCheck {
    int g = -1, f = -1;
    bool strict = false;                      ///< F_!(g f) = F_!(g) F_!(f) on the nose
    std::optional<NaturalTransformation> iso; ///< F_!(g f) => F_!(g) F_!(f)
    int distinguishing_object = -1;           ///< on failure, an object with non-isomorphic images
};

/// Compares F_!(g f) with F_!(g) F_!(f); all composable pairs when none are given.
inline std::vector<FunctorialityCheck> verify_functoriality(const GeoCategory& G, const GluedFunctor& F,
                                                            std::vector<std::pair<int, int>> pairs = {})
{
    const FiniteCategory& B = G.base();
    if (pairs.empty())
        for (int g = 0; g < B.num_morphisms(); ++g)
            for (int f = 0; f < B.num_morphisms(); ++f)
                if (B.tgt(f) == B.src(g))
                    pairs.emplace_back(g, f);
    std::vector<FunctorialityCheck> out;
    for (auto [g, f] : pairs) {
        if (B.tgt(f) != B.src(g))
            throw std::invalid_argument("verify_functoriality: pair is not composable");
        const FiniteCategory &A = F.values[B.src(f)], &T = F.values[B.tgt(g)];
        const Functor lhs = F(B.compose(g, f));
        const Functor rhs = compose(F(g), F(f));
        FunctorialityCheck c{g, f, lhs == rhs, find_natural_iso(A, T, lhs, rhs), -1};
        if (!c.iso)
            for (int x = 0; x < A.num_objects() && c.distinguishing_object < 0; ++x) {
                bool iso = false;
                for (int m : T.hom(lhs.on_objects[x], rhs.on_objects[x]))
                    iso = iso || T.is_iso(m);
                if (!iso)
                    c.distinguishing_object = x;
            }
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Routing the gluing data through the extension theorem

/// Iso classes of the functors generated by j_# and p_*, as a category over
/// the base objects.
struct ShadowCategory {
    FiniteCategory category;
    std::vector<Functor> representatives;
    std::vector<FiniteCategory> values;

    /// The class of F : D(a) -> D(b), or -1.
    int class_of(int a, int b, const Functor& F) const
    {
        for (int m = 0; m < category.num_morphisms(); ++m)
            if (category.src(m) == a && category.tgt(m) == b &&
                find_natural_iso(values[a], values[b], representatives[m], F))
                return m;
        return -1;
    }
};

inline ShadowCategory shadow_category(const GeoCategory& G, const ValueAssignment& V)
{
    const FiniteCategory& B = G.base();
    ShadowCategory S;
    S.values = V.values;
    std::vector<FiniteCategory::Morphism> mor;
    auto add = [&](int a, int b, const Functor& F) {
        for (std::size_t m = 0; m < mor.size(); ++m)
            if (mor[m].src == a && mor[m].tgt == b && find_natural_iso(V.values[a], V.values[b], S.representatives[m], F))
                return static_cast<int>(m);
        mor.push_back({a, b});
        S.representatives.push_back(F);
        return static_cast<int>(mor.size()) - 1;
    };
    std::vector<int> ids;
    for (int x = 0; x < B.num_objects(); ++x)
        ids.push_back(add(x, x, identity_functor(V.values[x])));
    for (const auto* table : {&V.open_functors, &V.proper_functors})
        for (const auto& [m, F] : *table)
            add(B.src(m), B.tgt(m), F);
    std::map<std::pair<int, int>, int> comp;
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t n = mor.size();
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t f = 0; f < n; ++f)
                if (mor[f].tgt == mor[g].src && !comp.count({static_cast<int>(g), static_cast<int>(f)})) {
                    const std::size_t before = mor.size();
                    comp[{static_cast<int>(g), static_cast<int>(f)}] =
                        add(mor[f].src, mor[g].tgt, compose(S.representatives[g], S.representatives[f]));
                    grew = grew || mor.size() != before;
                }
    }
    const int M = static_cast<int>(mor.size());
    std::vector<std::vector<int>> table(M, std::vector<int>(M, -1));
    for (const auto& [gf, r] : comp)
        table[gf.first][gf.second] = r;
    S.category = FiniteCategory(B.num_objects(), std::move(mor), std::move(ids), std::move(table));
    S.category.validate();
    return S;
}

/// The inputs of extend_functor built from gluing data: K = N(base),
/// C = N(shadow), N(n, sigma) = nerve of the compactifications of the chain
/// sigma, and K' the simplices of K decorated with a vertex of N.
struct GluingBridge {
    ShadowCategory shadow;
    SimplicialSet K, C, K_prime;
    SimplicialMap i, f_prime;
    MappingFunctor mapping;
    SSetDiagram N;
    DiagramMap alpha;
    std::vector<int> omega;
};

namespace detail {

/// Compactifications of a chain: the product of the compactification
/// categories of its spine, first factor most significant.
struct ChainComp {
    std::vector<int> spine;
    std::vector<CompCategory> factors;
    FiniteCategory category;

    std::vector<int> decode(int x, bool morphisms) const
    {
        std::vector<int> out(factors.size());
        for (std::size_t k = factors.size(); k-- > 0;) {
            const int size = morphisms ? factors[k].category.num_morphisms() : factors[k].category.num_objects();
            out[k] = x % size;
            x /= size;
        }
        return out;
    }
    int encode(const std::vector<int>& t, bool morphisms) const
    {
        int x = 0;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            const int size = morphisms ? factors[k].category.num_morphisms() : factors[k].category.num_objects();
            x = x * size + t[k];
        }
        return x;
    }
};

inline ChainComp chain_comp(const GeoCategory& G, const SimplicialSet& K, int n, int sigma)
{
    ChainComp out;
    out.category = terminal_category();
    if (n >= 1)
        out.spine = nerve_chain(K, n, sigma);
    for (int f : out.spine) {
        out.factors.push_back(comp_category(G, f));
        out.category = product_category(out.category, out.factors.back().category);
    }
    return out;
}

/// (j1, p1) then (j2, p2), through the chosen factorization of j2 p1.
inline Factorization compose_compactifications(const GeoCategory& G, const Factorization& c1,
                                               const Factorization& c2)
{
    const FiniteCategory& B = G.base();
    const Factorization e = G.exchange(B.compose(c2.open, c1.proper));
    return {B.compose(e.open, c1.open), B.compose(c2.proper, e.proper)};
}

} // namespace detail

inline GluingBridge gluing_bridge(const GeoCategory& G, const ValueAssignment& V, int E = 2,
                                  std::int64_t hom_budget = default_hom_budget)
{
    constexpr int D = 2;
    validate_values(G, V);
    GluingBridge out;
    out.shadow = shadow_category(G, V);
    out.K = nerve(G.base(), D);
    out.C = nerve(out.shadow.category, D);
    const SimplexCategory J(out.K);
    std::vector<detail::ChainComp> comps;
    std::vector<SimplicialSet> values;
    for (int b = 0; b < J.num_objects(); ++b) {
        const SimplexObject o = J.object(b);
        comps.push_back(detail::chain_comp(G, out.K, o.dim, o.simplex));
        values.push_back(nerve(comps.back().category, E));
    }
    // functor between chain categories from a rule on object tuples
    auto induced = [&](int b, int a, auto on_tuple) {
        const detail::ChainComp &src = comps[b], &tgt = comps[a];
        Functor F;
        for (int x = 0; x < src.category.num_objects(); ++x)
            F.on_objects.push_back(tgt.encode(on_tuple(src.decode(x, false)), false));
        for (int m = 0; m < src.category.num_morphisms(); ++m) {
            const int s = F.on_objects[src.category.src(m)], t = F.on_objects[src.category.tgt(m)];
            const std::vector<int> hom = tgt.category.hom(s, t);
            if (hom.size() != 1)
                throw std::invalid_argument("gluing_bridge: compactification categories must be thin");
            F.on_morphisms.push_back(hom.front());
        }
        validate_functor(src.category, tgt.category, F);
        return nerve_map(values[b], values[a], F);
    };
    auto face_rule = [&](int b, int i) {
        const int n = J.object(b).dim;
        const int a = J.face_object(b, i);
        return induced(b, a, [&](const std::vector<int>& t) {
            std::vector<int> r;
            if (i == 0)
                r.assign(t.begin() + 1, t.end());
            else if (i == n)
                r.assign(t.begin(), t.end() - 1);
            else {
                for (int k = 0; k < n; ++k) {
                    if (k == i - 1) {
                        const Factorization c = detail::compose_compactifications(
                            G, comps[b].factors[k].objects[t[k]], comps[b].factors[k + 1].objects[t[k + 1]]);
                        const int o = comps[a].factors[k].object_of(c);
                        if (o < 0)
                            throw std::logic_error("gluing_bridge: composite is not a compactification");
                        r.push_back(o);
                    } else if (k != i)
                        r.push_back(t[k]);
                }
            }
            return r;
        });
    };
    auto degen_rule = [&](int b, int j) {
        const int a = J.degeneracy_object(b, j);
        return induced(b, a, [&](const std::vector<int>& t) {
            std::vector<int> r = t;
            const CompCategory& inserted = comps[a].factors[j];
            const int x = G.base().src(inserted.morphism);
            const int o = inserted.object_of({G.base().identity(x), G.base().identity(x)});
            if (o < 0)
                throw std::logic_error("gluing_bridge: identity compactification missing");
            r.insert(r.begin() + j, o);
            return r;
        });
    };
    out.N = make_diagram(out.K, values, face_rule, degen_rule, E);
    out.N.validate();

    // the nerve simplex of the shadow classes of F_c along a tuple
    std::vector<std::unordered_map<std::vector<int>, int, VectorHash>> chains(D + 1);
    for (int n = 2; n <= D; ++n)
        for (int y = 0; y < out.C.count(n); ++y)
            chains[n].emplace(nerve_chain(out.C, n, y), y);
    const FiniteCategory& B = G.base();
    auto shadow_simplex = [&](int b, int v) {
        const SimplexObject o = J.object(b);
        if (o.dim == 0)
            return o.simplex;
        std::vector<int> chain;
        const std::vector<int> t = comps[b].decode(v, false);
        for (std::size_t k = 0; k < t.size(); ++k) {
            const int f = comps[b].spine[k];
            const int cls =
                out.shadow.class_of(B.src(f), B.tgt(f), compactified(V, comps[b].factors[k].objects[t[k]]));
            if (cls < 0)
                throw std::logic_error("gluing_bridge: F_c value outside the shadow category");
            chain.push_back(cls);
        }
        return o.dim == 1 ? chain.front() : chains[o.dim].at(chain);
    };

    out.mapping = mapping_functor(out.K, out.C, E, hom_budget);
    std::vector<SimplicialMap> components;
    for (int b = 0; b < J.num_objects(); ++b) {
        const int n = J.object(b).dim;
        const MappingSpace& H = out.mapping.spaces[n];
        const SimplicialSet& Nb = values[b];
        int w = -1;
        for (int v = 0; v < Nb.count(0); ++v) {
            const int u = vertex_of(H, classifying_map(out.C, n, shadow_simplex(b, v)));
            if (w >= 0 && u != w)
                throw std::invalid_argument("gluing_bridge: compactifications of " + describe_object(J, b) +
                                            " give non-isomorphic functors");
            w = u;
        }
        std::vector<std::vector<int>> lv(E + 1);
        for (int k = 0; k <= E; ++k)
            lv[k].assign(Nb.count(k), H.space().act(MonotoneMap(0, std::vector<int>(k + 1, 0)), w));
        components.emplace_back(Nb, H.space(), std::move(lv));
    }
    out.alpha = DiagramMap(out.N, out.mapping.diagram, std::move(components));

    // K': pairs (sigma, v) with v a vertex of N(n, sigma)
    std::vector<std::vector<std::vector<int>>> keys(D + 1);
    for (int n = 0; n <= D; ++n)
        for (int s = 0; s < out.K.count(n); ++s)
            for (int v = 0; v < values[J.id(n, s)].count(0); ++v)
                keys[n].push_back({s, v});
    out.K_prime = build_from_keys(
        D, keys,
        [&](int n, int i, const std::vector<int>& k) -> std::vector<int> {
            return {out.K.face(n, i, k[0]), out.N.face_action(J.id(n, k[0]), i)(0, k[1])};
        },
        [&](int n, int j, const std::vector<int>& k) -> std::vector<int> {
            return {out.K.degeneracy(n, j, k[0]), out.N.degeneracy_action(J.id(n, k[0]), j)(0, k[1])};
        });
    std::vector<std::vector<int>> proj(D + 1), fp(D + 1);
    for (int n = 0; n <= D; ++n)
        for (const auto& k : keys[n]) {
            proj[n].push_back(k[0]);
            fp[n].push_back(shadow_simplex(J.id(n, k[0]), k[1]));
        }
    out.i = SimplicialMap(out.K_prime, out.K, std::move(proj));
    out.f_prime = SimplicialMap(out.K_prime, out.C, std::move(fp));
    out.i.validate();
    out.f_prime.validate();
    const SimplexCategory J2(out.K_prime);
    for (int b = 0; b < J2.num_objects(); ++b) {
        const SimplexObject o = J2.object(b);
        out.omega.push_back(keys[o.dim][o.simplex][1]);
    }
    return out;
}

/// Base morphisms on which the extension's f disagrees with the glued functor
/// up to natural isomorphism.
inline std::vector<int> compare_with_glue(const GeoCategory& G, const GluingBridge& bridge, const SimplicialMap& f,
                                          const GluedFunctor& glued)
{
    const FiniteCategory& B = G.base();
    std::vector<int> bad;
    for (int m = 0; m < B.num_morphisms(); ++m) {
        const int cls = f(1, m);
        const auto& S = bridge.shadow;
        if (S.category.src(cls) != B.src(m) || S.category.tgt(cls) != B.tgt(m) ||
            !find_natural_iso(S.values[B.src(m)], S.values[B.tgt(m)], S.representatives[cls], glued(m)))
            bad.push_back(m);
    }
    return bad;
}

// ---------------------------------------------------------------------------
// Fixture

/// The functor P x Q -> P' x Q' of a pair of functors.
/// B2 is the target of F2.
inline Functor product_functor(const FiniteCategory& B2, const Functor& F1, const Functor& F2)
{
    Functor F;
    for (int a1 : F1.on_objects)
        for (int a2 : F2.on_objects)
            F.on_objects.push_back(a1 * B2.num_objects() + a2);
    for (int m1 : F1.on_morphisms)
        for (int m2 : F2.on_morphisms)
            F.on_morphisms.push_back(m1 * B2.num_morphisms() + m2);
    return F;
}

/// The functor between posets given by a monotone map on objects.
inline Functor monotone_functor(const FiniteCategory& P, const FiniteCategory& Q, const std::vector<int>& values)
{
    Functor F{values, {}};
    for (int m = 0; m < P.num_morphisms(); ++m) {
        const std::vector<int> hom = Q.hom(values.at(P.src(m)), values.at(P.tgt(m)));
        if (hom.empty())
            throw std::invalid_argument("monotone_functor: map is not monotone");
        F.on_morphisms.push_back(hom.front());
    }
    return F;
}

struct GluingInstance {
    GeoCategory geo;
    ValueAssignment values;
};

/// Base poset X < W < U, V < Y with opens out of X and propers elsewhere;
/// X -> Y has three compactifications, through W, U and V, and W maps to
/// the other two. Values are P x I with I the free-living isomorphism;
/// j_# twists the I factor along X -> W.
inline GluingInstance toy_compactification()
{
    enum { X, W, U, Vv, Y };
    std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
    for (int a = 0; a < 5; ++a)
        leq[a][a] = true;
    for (auto [a, b] : {std::pair{X, W}, {X, U}, {X, Vv}, {X, Y}, {W, U}, {W, Vv}, {W, Y}, {U, Y}, {Vv, Y}})
        leq[a][b] = true;
    const FiniteCategory B = poset_category(leq);
    auto mor = [&](int a, int b) { return B.hom(a, b).front(); };
    const int M = B.num_morphisms();
    std::vector<char> open(M, 0), proper(M, 0);
    for (int x = 0; x < 5; ++x)
        open[B.identity(x)] = proper[B.identity(x)] = 1;
    for (int o : {W, U, Vv})
        open[mor(X, o)] = 1;
    for (auto [a, b] : {std::pair{W, U}, {W, Vv}, {U, Y}, {Vv, Y}, {W, Y}})
        proper[mor(a, b)] = 1;
    std::vector<std::vector<Factorization>> chosen(M);
    for (int m = 0; m < M; ++m) {
        if (open[m])
            chosen[m].push_back({m, B.identity(B.tgt(m))});
        if (proper[m] && !open[m])
            chosen[m].push_back({B.identity(B.src(m)), m});
    }
    chosen[mor(X, U)].push_back({mor(X, W), mor(W, U)});
    chosen[mor(X, Vv)].push_back({mor(X, W), mor(W, Vv)});
    chosen[mor(X, Y)] = {{mor(X, W), mor(W, Y)}, {mor(X, U), mor(U, Y)}, {mor(X, Vv), mor(Vv, Y)}};
    GluingInstance out{GeoCategory(B, open, proper, chosen), {}};

    const std::vector<int> length{0, 1, 1, 2, 2};
    std::vector<FiniteCategory> P;
    const FiniteCategory I = iso_pair_category();
    for (int x = 0; x < 5; ++x) {
        P.push_back(ordinal_category(length[x]));
        out.values.values.push_back(product_category(P.back(), I));
    }
    // monotone maps on the P factor, functorial in the base
    std::map<std::pair<int, int>, std::vector<int>> phi{
        {{X, W}, {0}},         {{X, U}, {0}},      {{X, Vv}, {0}},    {{X, Y}, {0}},       {{W, U}, {0, 1}},
        {{W, Vv}, {0, 2}},     {{W, Y}, {0, 2}},   {{U, Y}, {0, 2}},  {{Vv, Y}, {0, 1, 2}}};
    const Functor swap{{1, 0}, {3, 2, 1, 0}};
    const Functor keep = identity_functor(I);
    auto value_functor = [&](int m, const Functor& twist) {
        const int a = B.src(m), b = B.tgt(m);
        std::vector<int> map(length[a] + 1);
        if (a == b)
            std::iota(map.begin(), map.end(), 0);
        else
            map = phi.at({a, b});
        return product_functor(I, monotone_functor(P[a], P[b], map), twist);
    };
    for (int m = 0; m < M; ++m) {
        if (open[m])
            out.values.open_functors[m] = value_functor(m, m == mor(X, W) ? swap : keep);
        if (proper[m])
            out.values.proper_functors[m] = value_functor(m, keep);
    }
    for (int f = 0; f < M; ++f) {
        const CompCategory C = comp_category(out.geo, f);
        for (int m = 0; m < C.category.num_morphisms(); ++m) {
            if (C.category.is_identity(m))
                continue;
            const CompMorphism cm = C.describe(m);
            const auto& D0 = out.values.values[B.src(f)];
            const auto& D1 = out.values.values[B.tgt(f)];
            out.values.support[cm] = *find_natural_iso(D0, D1, compactified(out.values, cm.from),
                                                       compactified(out.values, cm.to));
        }
    }
    validate_values(out.geo, out.values);
    return out;
}

} // namespace sset
