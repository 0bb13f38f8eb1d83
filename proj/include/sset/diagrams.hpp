#pragma once

// Diagrams F : (Delta/K)^op -> sSet, natural transformations between them,
// global sections, the mapping functor Map[K, C], the lift against
// objectwise-anodyne maps and the extension theorem built on top.
//
// A diagram stores the action of the generating morphisms only:
//   face_action(b, i)       : F(n, sigma) -> F(n-1, d_i sigma)
//   degeneracy_action(b, j) : F(n, sigma) -> F(n+1, s_j sigma)

#include "homotopy.hpp"
#include "mapping_space.hpp"
#include "simplex_category.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sset {

inline std::string describe_object(const SimplexCategory& J, int b)
{
    const SimplexObject o = J.object(b);
    return "(" + std::to_string(o.dim) + "," + std::to_string(o.simplex) + ")";
}

class SSetDiagram {
public:
    SSetDiagram() = default;

    SSetDiagram(SimplexCategory index, std::vector<SimplicialSet> values,
                std::vector<std::vector<SimplicialMap>> face_action,
                std::vector<std::vector<SimplicialMap>> degeneracy_action, int value_bound = -1)
        : index_(std::move(index)), values_(std::move(values)), face_(std::move(face_action)),
          degen_(std::move(degeneracy_action)), bound_(value_bound)
    {
        if (bound_ < 0 && !values_.empty())
            bound_ = values_.front().dim_bound();
        if (bound_ < 0)
            throw std::invalid_argument("diagram: value bound needed for an empty index");
        check_shape();
    }

    const SimplexCategory& index() const { return index_; }
    const SimplicialSet& base() const { return index_.base(); }
    int num_objects() const { return index_.num_objects(); }
    int value_bound() const { return bound_; }
    const SimplicialSet& value(int b) const { return values_.at(b); }
    const SimplicialMap& face_action(int b, int i) const { return face_.at(b).at(i); }
    const SimplicialMap& degeneracy_action(int b, int j) const { return degen_.at(b).at(j); }

    /// F(p) : F(b) -> F(a) for a morphism p : a -> b of Delta/K.
    SimplicialMap action(const MonotoneMap& p, int b) const
    {
        const SimplexObject ob = index_.object(b);
        if (p.cod() != ob.dim)
            throw std::invalid_argument("diagram action: codomain does not match the object");
        auto key = std::make_pair(b, std::vector<int>(p.values().begin(), p.values().end()));
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
        SimplicialMap out = SimplicialMap::identity(values_.at(b));
        int c = b;
        for (const Generator& g : generator_word(p)) {
            if (g.kind == Generator::Kind::Face) {
                out = compose(face_.at(c).at(g.index), out);
                c = index_.face_object(c, g.index);
            } else {
                out = compose(degen_.at(c).at(g.index), out);
                c = index_.degeneracy_object(c, g.index);
            }
        }
        cache_.emplace(std::move(key), out);
        return out;
    }

    /// Functoriality: every composite of two generators acts as its normal form.
    void validate() const
    {
        const int D = index_.dim_bound();
        for (int b = 0; b < num_objects(); ++b) {
            const int m = index_.object(b).dim;
            for (const Generator& g1 : generators_into(m, D)) {
                const int c = target_of(g1, b);
                const SimplicialMap& first = generator_action(g1, b);
                for (const Generator& g2 : generators_into(g1.kind == Generator::Kind::Face ? m - 1 : m + 1, D)) {
                    const SimplicialMap two = compose(generator_action(g2, c), first);
                    const MonotoneMap p = compose(g1.map(), g2.map());
                    if (!(action(p, b) == two))
                        throw ValidationError("diagram: functoriality fails at object " + describe_object(index_, b));
                }
            }
        }
    }

    friend bool operator==(const SSetDiagram& a, const SSetDiagram& b)
    {
        return a.base() == b.base() && a.bound_ == b.bound_ && a.values_ == b.values_ && a.face_ == b.face_ && a.degen_ == b.degen_;
    }

private:
    static std::vector<Generator> generators_into(int m, int D)
    {
        std::vector<Generator> out;
        for (int i = 0; m >= 1 && i <= m; ++i)
            out.push_back({Generator::Kind::Face, m, i});
        for (int j = 0; m < D && j <= m; ++j)
            out.push_back({Generator::Kind::Degeneracy, m, j});
        return out;
    }

    int target_of(const Generator& g, int b) const
    {
        return g.kind == Generator::Kind::Face ? index_.face_object(b, g.index)
                                                : index_.degeneracy_object(b, g.index);
    }

    const SimplicialMap& generator_action(const Generator& g, int b) const
    {
        return g.kind == Generator::Kind::Face ? face_.at(b).at(g.index) : degen_.at(b).at(g.index);
    }

    void check_shape() const
    {
        const int D = index_.dim_bound();
        if (static_cast<int>(values_.size()) != num_objects() || static_cast<int>(face_.size()) != num_objects() ||
            static_cast<int>(degen_.size()) != num_objects())
            throw std::invalid_argument("diagram: one value and action list per object required");
        for (int b = 0; b < num_objects(); ++b) {
            if (values_[b].dim_bound() != value_bound())
                throw std::invalid_argument("diagram: values must share a dimension bound");
            const int n = index_.object(b).dim;
            if (static_cast<int>(face_[b].size()) != (n >= 1 ? n + 1 : 0) ||
                static_cast<int>(degen_[b].size()) != (n < D ? n + 1 : 0))
                throw std::invalid_argument("diagram: wrong number of generator actions at " +
                                            describe_object(index_, b));
            for (int i = 0; i < static_cast<int>(face_[b].size()); ++i)
                if (!(face_[b][i].source() == values_[b]) ||
                    !(face_[b][i].target() == values_[index_.face_object(b, i)]))
                    throw std::invalid_argument("diagram: face action has the wrong ends at " +
                                                describe_object(index_, b));
            for (int j = 0; j < static_cast<int>(degen_[b].size()); ++j)
                if (!(degen_[b][j].source() == values_[b]) ||
                    !(degen_[b][j].target() == values_[index_.degeneracy_object(b, j)]))
                    throw std::invalid_argument("diagram: degeneracy action has the wrong ends at " +
                                                describe_object(index_, b));
        }
    }

    SimplexCategory index_;
    std::vector<SimplicialSet> values_;
    std::vector<std::vector<SimplicialMap>> face_;
    std::vector<std::vector<SimplicialMap>> degen_;
    int bound_ = -1;
    mutable std::map<std::pair<int, std::vector<int>>, SimplicialMap> cache_;
};

class DiagramMap {
public:
    DiagramMap() = default;

    DiagramMap(SSetDiagram source, SSetDiagram target, std::vector<SimplicialMap> components)
        : source_(std::move(source)), target_(std::move(target)), components_(std::move(components))
    {
        if (!(source_.base() == target_.base()))
            throw std::invalid_argument("diagram map: diagrams live over different bases");
        if (static_cast<int>(components_.size()) != source_.num_objects())
            throw std::invalid_argument("diagram map: one component per object required");
        for (int b = 0; b < source_.num_objects(); ++b)
            if (!(components_[b].source() == source_.value(b)) || !(components_[b].target() == target_.value(b)))
                throw std::invalid_argument("diagram map: component has the wrong ends at " +
                                            describe_object(source_.index(), b));
    }

    const SSetDiagram& source() const { return source_; }
    const SSetDiagram& target() const { return target_; }
    const SimplicialMap& component(int b) const { return components_.at(b); }
    const std::vector<SimplicialMap>& components() const { return components_; }

    /// First object where a naturality square for a generator fails, if any.
    std::optional<int> naturality_failure() const
    {
        const SimplexCategory& J = source_.index();
        for (int b = 0; b < source_.num_objects(); ++b) {
            const int n = J.object(b).dim;
            for (int i = 0; n >= 1 && i <= n; ++i)
                if (!(compose(target_.face_action(b, i), components_[b]) ==
                      compose(components_[J.face_object(b, i)], source_.face_action(b, i))))
                    return b;
            for (int j = 0; n < J.dim_bound() && j <= n; ++j)
                if (!(compose(target_.degeneracy_action(b, j), components_[b]) ==
                      compose(components_[J.degeneracy_object(b, j)], source_.degeneracy_action(b, j))))
                    return b;
        }
        return std::nullopt;
    }

    bool is_natural() const { return !naturality_failure().has_value(); }

    bool is_objectwise_mono() const
    {
        for (const auto& c : components_)
            if (!c.is_mono())
                return false;
        return true;
    }

    friend bool operator==(const DiagramMap& a, const DiagramMap& b)
    {
        return a.components_ == b.components_ && a.source_ == b.source_ && a.target_ == b.target_;
    }

private:
    SSetDiagram source_;
    SSetDiagram target_;
    std::vector<SimplicialMap> components_;
};

inline DiagramMap compose(const DiagramMap& g, const DiagramMap& f)
{
    std::vector<SimplicialMap> c;
    for (int b = 0; b < f.source().num_objects(); ++b)
        c.push_back(compose(g.component(b), f.component(b)));
    return DiagramMap(f.source(), g.target(), std::move(c));
}

inline DiagramMap identity_map(const SSetDiagram& F)
{
    std::vector<SimplicialMap> c;
    for (int b = 0; b < F.num_objects(); ++b)
        c.push_back(SimplicialMap::identity(F.value(b)));
    return DiagramMap(F, F, std::move(c));
}

/// Builds a diagram from per-object values and a rule for generator actions.
template <class FaceRule, class DegenRule>
SSetDiagram make_diagram(const SimplicialSet& K, std::vector<SimplicialSet> values, FaceRule face_rule,
                         DegenRule degen_rule, int value_bound = -1)
{
    SimplexCategory J(K);
    std::vector<std::vector<SimplicialMap>> faces(J.num_objects()), degens(J.num_objects());
    for (int b = 0; b < J.num_objects(); ++b) {
        const int n = J.object(b).dim;
        for (int i = 0; n >= 1 && i <= n; ++i)
            faces[b].push_back(face_rule(b, i));
        for (int j = 0; n < J.dim_bound() && j <= n; ++j)
            degens[b].push_back(degen_rule(b, j));
    }
    return SSetDiagram(std::move(J), std::move(values), std::move(faces), std::move(degens), value_bound);
}

/// c(X): X everywhere, identities as actions.
inline SSetDiagram constant_diagram(const SimplicialSet& K, const SimplicialSet& X)
{
    SimplexCategory J(K);
    const SimplicialMap id = SimplicialMap::identity(X);
    return make_diagram(K, std::vector<SimplicialSet>(J.num_objects(), X), [&](int, int) { return id; },
                        [&](int, int) { return id; }, X.dim_bound());
}

/// Object of Delta/K hit by (n, sigma') under i : K' -> K.
inline int pushed_object(const SimplexCategory& JK, const SimplicialMap& i, const SimplexCategory& JK2, int b)
{
    const SimplexObject o = JK2.object(b);
    return JK.id(o.dim, i(o.dim, o.simplex));
}

/// i*F : (n, sigma') |-> F(n, i sigma').
inline SSetDiagram pullback_diagram(const SimplicialMap& i, const SSetDiagram& F)
{
    if (!(i.target() == F.base()))
        throw std::invalid_argument("pullback_diagram: map does not land in the base of the diagram");
    const SimplexCategory J2(i.source());
    std::vector<SimplicialSet> values;
    for (int b = 0; b < J2.num_objects(); ++b)
        values.push_back(F.value(pushed_object(F.index(), i, J2, b)));
    return make_diagram(
        i.source(), std::move(values),
        [&](int b, int k) { return F.face_action(pushed_object(F.index(), i, J2, b), k); },
        [&](int b, int k) { return F.degeneracy_action(pushed_object(F.index(), i, J2, b), k); }, F.value_bound());
}

inline DiagramMap pullback_map(const SimplicialMap& i, const DiagramMap& f)
{
    const SSetDiagram s = pullback_diagram(i, f.source()), t = pullback_diagram(i, f.target());
    std::vector<SimplicialMap> c;
    for (int b = 0; b < s.num_objects(); ++b)
        c.push_back(f.component(pushed_object(f.source().index(), i, s.index(), b)));
    return DiagramMap(s, t, std::move(c));
}

// ---------------------------------------------------------------------------
// Global sections

/// Gamma(F): m-simplices are families (x_b in F(b)_m) compatible with every action.
class GlobalSections {
public:
    const SimplicialSet& space() const { return space_; }
    const std::vector<int>& family(int m, int s) const { return families_.at(m).at(s); }
    int index_of(int m, const std::vector<int>& fam) const
    {
        auto it = index_.at(m).find(fam);
        return it == index_.at(m).end() ? -1 : it->second;
    }

    friend GlobalSections global_sections(const SSetDiagram& F, std::int64_t budget);

private:
    SimplicialSet space_;
    std::vector<std::vector<std::vector<int>>> families_;
    std::vector<std::unordered_map<std::vector<int>, int, VectorHash>> index_;
};

inline GlobalSections global_sections(const SSetDiagram& F, std::int64_t budget = default_hom_budget)
{
    const SimplexCategory& J = F.index();
    const SimplicialSet& K = F.base();
    const int E = F.value_bound();
    const int N = J.num_objects();
    // Degenerate objects are forced from their root; remember how.
    std::vector<int> root(N, -1);
    std::vector<std::optional<SimplicialMap>> from_root(N);
    std::vector<std::vector<std::pair<int, int>>> incoming_degen(N);
    for (int b = 0; b < N; ++b) {
        const SimplexObject o = J.object(b);
        if (K.is_degenerate(o.dim, o.simplex)) {
            auto [epi, r] = K.ez_normalize(o.dim, o.simplex);
            root[b] = J.id(r.dim, r.index);
            from_root[b] = F.action(epi, root[b]);
        }
        for (int j = 0; o.dim < J.dim_bound() && j <= o.dim; ++j)
            incoming_degen[J.degeneracy_object(b, j)].push_back({b, j});
    }
    GlobalSections out;
    out.families_.resize(E + 1);
    out.index_.resize(E + 1);
    std::int64_t steps = 0;
    for (int m = 0; m <= E; ++m) {
        std::vector<int> fam(N, -1);
        auto consistent = [&](int b, int x) {
            const int n = J.object(b).dim;
            for (int i = 0; n >= 1 && i <= n; ++i)
                if (F.face_action(b, i)(m, x) != fam[J.face_object(b, i)])
                    return false;
            for (auto [a, j] : incoming_degen[b])
                if (a < b && F.degeneracy_action(a, j)(m, fam[a]) != x)
                    return false;
            return true;
        };
        std::function<void(int)> rec = [&](int b) {
            if (b == N) {
                out.index_[m].emplace(fam, static_cast<int>(out.families_[m].size()));
                out.families_[m].push_back(fam);
                return;
            }
            if (root[b] >= 0) {
                if (++steps > budget)
                    throw BudgetExceeded("global_sections: enumerating families", budget);
                const int x = (*from_root[b])(m, fam[root[b]]);
                if (consistent(b, x)) {
                    fam[b] = x;
                    rec(b + 1);
                }
                return;
            }
            for (int x = 0; x < F.value(b).count(m); ++x) {
                if (++steps > budget)
                    throw BudgetExceeded("global_sections: enumerating families", budget);
                if (consistent(b, x)) {
                    fam[b] = x;
                    rec(b + 1);
                }
            }
        };
        rec(0);
    }
    std::vector<int> counts(E + 1);
    for (int m = 0; m <= E; ++m)
        counts[m] = static_cast<int>(out.families_[m].size());
    std::vector<std::vector<SimplicialSet::Table>> faces(E + 1), degens(E + 1);
    auto table = [&](int from, int to, auto op) {
        SimplicialSet::Table t(counts[from]);
        for (int s = 0; s < counts[from]; ++s) {
            std::vector<int> image(N);
            for (int b = 0; b < N; ++b)
                image[b] = op(b, out.families_[from][s][b]);
            t[s] = out.index_of(to, image);
            if (t[s] < 0)
                throw std::logic_error("global_sections: families not closed under the simplicial operators");
        }
        return t;
    };
    for (int m = 1; m <= E; ++m)
        for (int i = 0; i <= m; ++i)
            faces[m].push_back(table(m, m - 1, [&](int b, int x) { return F.value(b).face(m, i, x); }));
    for (int m = 0; m < E; ++m)
        for (int j = 0; j <= m; ++j)
            degens[m].push_back(table(m, m + 1, [&](int b, int x) { return F.value(b).degeneracy(m, j, x); }));
    out.space_ = SimplicialSet(E, std::move(counts), std::move(faces), std::move(degens));
    return out;
}

/// Gamma(f) : Gamma(F) -> Gamma(G).
inline SimplicialMap global_sections_map(const DiagramMap& f, const GlobalSections& GF, const GlobalSections& GG)
{
    const int E = GF.space().dim_bound();
    std::vector<std::vector<int>> lv(E + 1);
    for (int m = 0; m <= E; ++m)
        for (int s = 0; s < GF.space().count(m); ++s) {
            const auto& fam = GF.family(m, s);
            std::vector<int> image(fam.size());
            for (std::size_t b = 0; b < fam.size(); ++b)
                image[b] = f.component(static_cast<int>(b))(m, fam[b]);
            lv[m].push_back(GG.index_of(m, image));
        }
    return SimplicialMap(GF.space(), GG.space(), std::move(lv));
}

/// Restriction Gamma(F) -> Gamma(i*F).
inline SimplicialMap restrict_sections(const SimplicialMap& i, const SSetDiagram& F, const GlobalSections& GF,
                                       const GlobalSections& GiF)
{
    const SimplexCategory J2(i.source());
    const int E = GF.space().dim_bound();
    std::vector<std::vector<int>> lv(E + 1);
    for (int m = 0; m <= E; ++m)
        for (int s = 0; s < GF.space().count(m); ++s) {
            const auto& fam = GF.family(m, s);
            std::vector<int> image(J2.num_objects());
            for (int b = 0; b < J2.num_objects(); ++b)
                image[b] = fam[pushed_object(F.index(), i, J2, b)];
            lv[m].push_back(GiF.index_of(m, image));
        }
    return SimplicialMap(GF.space(), GiF.space(), std::move(lv));
}

/// The map c(Delta^m) -> F picking the m-simplex family fam of Gamma(F).
inline DiagramMap simplex_section(const SSetDiagram& F, int m, const std::vector<int>& fam)
{
    const SimplicialSet dm = standard_simplex(m, F.value_bound());
    std::vector<SimplicialMap> comps;
    for (int b = 0; b < F.num_objects(); ++b)
        comps.push_back(classifying_map(F.value(b), m, fam.at(b)));
    DiagramMap out(constant_diagram(F.base(), dm), F, std::move(comps));
    if (auto bad = out.naturality_failure())
        throw std::invalid_argument("simplex_section: family is not compatible at " +
                                    describe_object(F.index(), *bad));
    return out;
}

// ---------------------------------------------------------------------------
// Cones

struct ConeDiagram {
    SSetDiagram diagram;
    DiagramMap eta;
    std::vector<int> cone_points; ///< cone vertex of every value
};

/// N |-> N^cone objectwise, with the inclusion eta : N -> N^cone.
inline ConeDiagram cone_diagram(const SSetDiagram& N)
{
    std::vector<SimplicialSet> values;
    std::vector<SimplicialMap> incl;
    std::vector<int> points;
    for (int b = 0; b < N.num_objects(); ++b) {
        Cone c = right_cone(N.value(b));
        values.push_back(c.object);
        incl.push_back(c.inclusion);
        points.push_back(c.cone_point);
    }
    SSetDiagram M = make_diagram(
        N.base(), std::move(values), [&](int b, int i) { return cone_map(N.face_action(b, i)); },
        [&](int b, int j) { return cone_map(N.degeneracy_action(b, j)); }, N.value_bound());
    DiagramMap eta(N, M, std::move(incl));
    return {std::move(M), std::move(eta), std::move(points)};
}

/// Union of the images of the degeneracy actions landing in F(b).
inline Subcomplex degeneracy_union(const SSetDiagram& F, int b)
{
    const SimplexCategory& J = F.index();
    Subcomplex u(F.value(b));
    for (int a = 0; a < F.num_objects(); ++a) {
        const int n = J.object(a).dim;
        for (int j = 0; n < J.dim_bound() && j <= n; ++j)
            if (J.degeneracy_object(a, j) == b)
                u = u.unite(image(F.degeneracy_action(a, j)));
    }
    return u;
}

// ---------------------------------------------------------------------------
// The mapping functor

/// Map[K, C] with the mapping complexes it is built from (one per dimension,
/// shared by every simplex of that dimension).
struct MappingFunctor {
    SSetDiagram diagram;
    MarkedSimplicialSet target;    ///< natural(C)
    std::vector<MappingSpace> spaces; ///< spaces[n] = hom_sharp(flat(Delta^n), natural(C))
};

/// Mapping complexes hom_sharp(flat(Delta^n), C) for n = 0..D with the
/// precomposition maps between them.
struct SimplexMappingSpaces {
    std::vector<MappingSpace> spaces;
    std::vector<std::vector<SimplicialMap>> faces;  ///< faces[n][i] : H_n -> H_{n-1}
    std::vector<std::vector<SimplicialMap>> degens; ///< degens[n][j] : H_n -> H_{n+1}
};

inline SimplexMappingSpaces simplex_mapping_spaces(const MarkedSimplicialSet& Cn, int D, int E,
                                                   std::int64_t budget = default_hom_budget)
{
    const int B = Cn.underlying().dim_bound();
    SimplexMappingSpaces out;
    for (int n = 0; n <= D; ++n)
        out.spaces.push_back(hom_sharp(flat(standard_simplex(n, B)), Cn, E, budget));
    out.faces.resize(D + 1);
    out.degens.resize(D + 1);
    for (int n = 1; n <= D; ++n)
        for (int i = 0; i <= n; ++i)
            out.faces[n].push_back(precompose(out.spaces[n], out.spaces[n - 1], simplex_map(face(n, i), B)));
    for (int n = 0; n < D; ++n)
        for (int j = 0; j <= n; ++j)
            out.degens[n].push_back(
                precompose(out.spaces[n], out.spaces[n + 1], simplex_map(degeneracy(n, j), B)));
    return out;
}

/// Map[K, C] at value bound E. K and C must share their dimension bound.
inline MappingFunctor mapping_functor(const SimplicialSet& K, const SimplicialSet& C, int E,
                                      std::int64_t budget = default_hom_budget)
{
    if (K.dim_bound() != C.dim_bound())
        throw std::invalid_argument("mapping_functor: K and C must have the same dimension bound");
    MappingFunctor out;
    out.target = natural(C);
    SimplexMappingSpaces S = simplex_mapping_spaces(out.target, K.dim_bound(), E, budget);
    SimplexCategory J(K);
    std::vector<SimplicialSet> values;
    for (int b = 0; b < J.num_objects(); ++b)
        values.push_back(S.spaces[J.object(b).dim].space());
    out.diagram = make_diagram(
        K, std::move(values), [&](int b, int i) { return S.faces[J.object(b).dim][i]; },
        [&](int b, int j) { return S.degens[J.object(b).dim][j]; }, E);
    out.spaces = std::move(S.spaces);
    return out;
}

/// The map (Delta^m) x K -> C assembled from an m-simplex family of Gamma(Map[K, C]).
inline SimplicialMap family_to_map(const MappingFunctor& MF, int m, const std::vector<int>& fam)
{
    const SimplicialSet& K = MF.diagram.base();
    const SimplexCategory& J = MF.diagram.index();
    const int B = MF.target.underlying().dim_bound();
    const SimplicialSet dm = standard_simplex(m, B);
    const SimplicialSet P = product(dm, K);
    std::vector<std::vector<int>> lv(B + 1);
    for (int n = 0; n <= B; ++n) {
        const int top = top_simplex(n, B);
        const int width = standard_simplex(n, B).count(n);
        for (int a = 0; a < dm.count(n); ++a)
            for (int x = 0; x < K.count(n); ++x) {
                const SimplicialMap& phi = MF.spaces[n].simplex(m, fam[J.id(n, x)]);
                lv[n].push_back(phi(n, a * width + top));
            }
    }
    SimplicialMap out(P, MF.target.underlying(), std::move(lv));
    out.validate();
    return out;
}

/// The map K -> C given by a vertex of Gamma(Map[K, C]).
inline SimplicialMap section_to_map(const MappingFunctor& MF, const std::vector<int>& fam)
{
    const SimplicialSet& K = MF.diagram.base();
    const SimplicialMap phi = family_to_map(MF, 0, fam);
    return compose(phi, pairing(to_point(K), SimplicialMap::identity(K)));
}

/// Family of Gamma(Map[K, C]) corresponding to an m-simplex phi : Delta^m x K -> C.
inline std::vector<int> map_to_family(const MappingFunctor& MF, int m, const SimplicialMap& phi)
{
    const SimplicialSet& K = MF.diagram.base();
    const SimplexCategory& J = MF.diagram.index();
    const int B = MF.target.underlying().dim_bound();
    const SimplicialMap idm = SimplicialMap::identity(standard_simplex(m, B));
    std::vector<int> fam(J.num_objects());
    for (int b = 0; b < J.num_objects(); ++b) {
        const SimplexObject o = J.object(b);
        const SimplicialMap restricted = compose(phi, product_map(idm, classifying_map(K, o.dim, o.simplex)));
        fam[b] = MF.spaces[o.dim].index_of(m, restricted);
        if (fam[b] < 0)
            throw std::invalid_argument("map_to_family: restriction is not a simplex of the mapping complex");
    }
    return fam;
}

/// Comparison hom_sharp(flat(K), natural(C)) -> Gamma(Map[K, C]).
inline SimplicialMap mapping_comparison(const MappingFunctor& MF, const MappingSpace& HK, const GlobalSections& G)
{
    const int E = HK.space().dim_bound();
    std::vector<std::vector<int>> lv(E + 1);
    for (int m = 0; m <= E; ++m)
        for (int s = 0; s < HK.space().count(m); ++s) {
            const int idx = G.index_of(m, map_to_family(MF, m, HK.simplex(m, s)));
            if (idx < 0)
                throw std::logic_error("mapping_comparison: family is not a global section");
            lv[m].push_back(idx);
        }
    return SimplicialMap(HK.space(), G.space(), std::move(lv));
}

// ---------------------------------------------------------------------------
// Lifting against objectwise anodyne maps

enum class AnodyneEvidence { HornExpansion, ContractibleEnds, TruncatedHornExpansion };

inline std::string to_string(AnodyneEvidence e)
{
    switch (e) {
    case AnodyneEvidence::HornExpansion: return "horn-pushout decomposition";
    case AnodyneEvidence::ContractibleEnds: return "mono between certified contractible values";
    case AnodyneEvidence::TruncatedHornExpansion: return "horn decomposition up to the top dimension";
    }
    return "?";
}

struct ObjectCertificate {
    int object = 0;
    AnodyneEvidence evidence = AnodyneEvidence::HornExpansion;
    AnodyneCertificate horn_steps;
    std::optional<ContractibilityCertificate> source_contractible;
    std::optional<ContractibilityCertificate> target_contractible;
};

struct InjectiveLiftResult {
    DiagramMap beta;
    std::vector<ObjectCertificate> certificates;
    std::int64_t steps = 0;
};

/// Evidence that eta_b is anodyne, in order of preference: a complete horn
/// expansion; a mono whose ends are both certified weakly contractible; a horn
/// expansion leaving only top-dimensional simplices that passes the
/// homological shadow (the truncated cone case).
inline std::optional<ObjectCertificate> certify_anodyne(const SimplicialMap& eta_b, int b,
                                                        const ContractibilityOptions& opt = {})
{
    if (!eta_b.is_mono())
        return std::nullopt;
    ObjectCertificate c;
    c.object = b;
    c.horn_steps = horn_expansion(eta_b);
    if (c.horn_steps.complete)
        return c;
    ContractibilityCertificate s = contractibility(eta_b.source(), opt);
    if (s.certified()) {
        ContractibilityCertificate t = contractibility(eta_b.target(), opt);
        if (t.certified()) {
            c.evidence = AnodyneEvidence::ContractibleEnds;
            c.source_contractible = std::move(s);
            c.target_contractible = std::move(t);
            return c;
        }
    }
    const int E = eta_b.target().dim_bound();
    for (const SimplexRef& r : c.horn_steps.leftover)
        if (r.dim != E)
            return std::nullopt;
    if (!anodyne_shadow(eta_b))
        return std::nullopt;
    c.evidence = AnodyneEvidence::TruncatedHornExpansion;
    return c;
}

/// Runs the skeletal induction: beta is built object by object in dimension
/// order, pinned on eta(N) by alpha and on degeneracy images by the values
/// already built, with faces constrained to agree with lower objects.
inline InjectiveLiftResult injective_lift(const DiagramMap& alpha, const DiagramMap& eta,
                                          std::int64_t budget = default_lift_budget)
{
    const SSetDiagram& N = eta.source();
    const SSetDiagram& M = eta.target();
    const SSetDiagram& Map = alpha.target();
    if (!(alpha.source() == N))
        throw std::invalid_argument("injective_lift: alpha and eta have different sources");
    if (auto bad = alpha.naturality_failure())
        throw std::invalid_argument("injective_lift: alpha is not natural at " + describe_object(N.index(), *bad));
    if (auto bad = eta.naturality_failure())
        throw std::invalid_argument("injective_lift: eta is not natural at " + describe_object(N.index(), *bad));
    const SimplexCategory& J = N.index();
    const int E = M.value_bound();
    InjectiveLiftResult out;
    for (int b = 0; b < J.num_objects(); ++b) {
        auto cert = certify_anodyne(eta.component(b), b);
        if (!cert)
            throw std::invalid_argument("injective_lift: no anodyne certificate for eta at " +
                                        describe_object(J, b));
        out.certificates.push_back(std::move(*cert));
    }
    std::vector<std::optional<SimplicialMap>> beta(J.num_objects());
    std::int64_t remaining = budget;
    for (int b = 0; b < J.num_objects(); ++b) {
        const SimplexObject o = J.object(b);
        const SimplicialSet& Mb = M.value(b);
        std::vector<std::vector<int>> fixed(E + 1);
        for (int n = 0; n <= E; ++n)
            fixed[n].assign(Mb.count(n), -1);
        auto pin = [&](int n, int x, int y, const std::string& why) {
            int& slot = fixed[n][x];
            if (slot >= 0 && slot != y)
                throw std::logic_error("injective_lift: conflicting constraints at " + describe_object(J, b) +
                                       " from " + why);
            slot = y;
        };
        for (int n = 0; n <= E; ++n)
            for (int x = 0; x < N.value(b).count(n); ++x)
                pin(n, eta.component(b)(n, x), alpha.component(b)(n, x), "alpha");
        for (int a = 0; a < b; ++a) {
            const int da = J.object(a).dim;
            for (int j = 0; da < J.dim_bound() && j <= da; ++j) {
                if (J.degeneracy_object(a, j) != b)
                    continue;
                const SimplicialMap& Ms = M.degeneracy_action(a, j);
                const SimplicialMap& Ps = Map.degeneracy_action(a, j);
                for (int n = 0; n <= E; ++n)
                    for (int y = 0; y < M.value(a).count(n); ++y)
                        pin(n, Ms(n, y), Ps(n, (*beta[a])(n, y)), "a degeneracy image");
            }
        }
        ExtensionProblem p{Mb, Map.value(b), fixed,
                           [&](int n, int x, int y) {
                               for (int i = 0; o.dim >= 1 && i <= o.dim; ++i) {
                                   const int c = J.face_object(b, i);
                                   if (Map.face_action(b, i)(n, y) != (*beta[c])(n, M.face_action(b, i)(n, x)))
                                       return false;
                               }
                               return true;
                           },
                           false};
        ExtensionResult r = find_extension(p, remaining);
        out.steps += r.steps;
        remaining -= r.steps;
        if (r.status == SearchStatus::Exhausted)
            throw BudgetExceeded("injective_lift: search exhausted at " + describe_object(J, b), budget);
        if (!r.map)
            throw std::runtime_error("injective_lift: no lift exists at " + describe_object(J, b));
        beta[b] = std::move(r.map);
    }
    std::vector<SimplicialMap> comps;
    for (auto& m : beta)
        comps.push_back(std::move(*m));
    out.beta = DiagramMap(M, Map, std::move(comps));
    if (auto bad = out.beta.naturality_failure())
        throw std::logic_error("injective_lift: constructed beta is not natural at " + describe_object(J, *bad));
    if (!(compose(out.beta, eta) == alpha))
        throw std::logic_error("injective_lift: beta does not extend alpha");
    return out;
}

// ---------------------------------------------------------------------------
// The extension theorem

struct LimitCheck {
    int object = 0;
    bool agrees = false;
    std::string detail;
};

struct ExtensionOutcome {
    SimplicialMap f;                            ///< K -> C
    std::vector<ContractibilityCertificate> certificates;
    InjectiveLiftResult lift;
    MappingSpace restricted_maps;               ///< hom_sharp(flat(K'), natural(C))
    int f_prime_vertex = -1;                    ///< f' in that complex
    int f_i_vertex = -1;                        ///< f . i in that complex
    std::vector<int> witness_edges;             ///< edge path from f' to f . i
    bool connected = false;
    std::vector<LimitCheck> limit_checks;       ///< nerve targets only
};

namespace detail {

/// Component at object k of the natural isomorphism encoded by an edge of
/// hom_sharp(flat(Delta^n), N(C)): the morphism of C on the edge (01, kk).
inline int transformation_component(const MappingSpace& H, int edge, int n, int k)
{
    const int B = H.map_bound();
    const SimplicialMap& phi = H.simplex(1, edge);
    const int width = standard_simplex(n, B).count(1);
    const int e01 = simplex_edge(1, 0, 1);
    const int ekk = simplex_index(MonotoneMap(n, {k, k}));
    return phi(1, e01 * width + ekk);
}

/// Compare the per-simplex limit formula with the cone legs produced by beta.
inline LimitCheck limit_check(const FiniteCategory& Cat, const MappingSpace& H, const SimplicialMap& alpha_b,
                              const SimplicialMap& beta_b, const SimplicialSet& Nb, int cone_point, int n, int b)
{
    LimitCheck out{b, false, ""};
    // transport isomorphisms t_v : alpha(v0) -> alpha(v) along a spanning tree
    const int V = Nb.count(0);
    std::vector<std::vector<int>> t(V);
    std::vector<char> seen(V, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    t[0].resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        const int obj = Cat.src(transformation_component(H, H.space().degeneracy(0, 0, alpha_b(0, 0)), n, k));
        t[0][k] = Cat.identity(obj);
    }
    auto component = [&](int edge, int k) { return transformation_component(H, alpha_b(1, edge), n, k); };
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const int v = queue[q];
        for (int e = 0; Nb.dim_bound() >= 1 && e < Nb.count(1); ++e) {
            const int s = Nb.face(1, 1, e), d = Nb.face(1, 0, e);
            int w = -1;
            std::vector<int> next(n + 1);
            if (s == v && !seen[d]) {
                w = d;
                for (int k = 0; k <= n; ++k)
                    next[k] = Cat.compose(component(e, k), t[v][k]);
            } else if (d == v && !seen[s]) {
                w = s;
                for (int k = 0; k <= n; ++k) {
                    auto inv = Cat.inverse(component(e, k));
                    if (!inv) {
                        out.detail = "edge component is not invertible";
                        return out;
                    }
                    next[k] = Cat.compose(*inv, t[v][k]);
                }
            }
            if (w >= 0) {
                seen[w] = 1;
                t[w] = std::move(next);
                queue.push_back(w);
            }
        }
    }
    for (int v = 0; v < V; ++v)
        if (!seen[v]) {
            out.detail = "value is not connected";
            return out;
        }
    for (int e = 0; Nb.dim_bound() >= 1 && e < Nb.count(1); ++e) {
        const int s = Nb.face(1, 1, e), d = Nb.face(1, 0, e);
        for (int k = 0; k <= n; ++k)
            if (t[d][k] != Cat.compose(component(e, k), t[s][k])) {
                out.detail = "transport has monodromy along edge " + std::to_string(e);
                return out;
            }
    }
    // cone legs mu_v : alpha(v) -> f(sigma) must satisfy mu_v . t_v = mu_v0
    for (int v = 0; v < V; ++v) {
        const int leg = cone_simplex(Nb, 1, 0, v);
        for (int k = 0; k <= n; ++k) {
            const int mu_v = transformation_component(H, beta_b(1, leg), n, k);
            const int mu_0 = transformation_component(H, beta_b(1, cone_simplex(Nb, 1, 0, 0)), n, k);
            if (Cat.compose(mu_v, t[v][k]) != mu_0) {
                out.detail = "cone leg at vertex " + std::to_string(v) + " disagrees with the limit";
                return out;
            }
        }
    }
    // and the legs end at the functor sitting over the cone point
    const int f_sigma = beta_b(0, cone_point);
    for (int v = 0; v < V; ++v)
        if (H.space().face(1, 0, beta_b(1, cone_simplex(Nb, 1, 0, v))) != f_sigma) {
            out.detail = "cone leg does not end at the cone point value";
            return out;
        }
    out.agrees = true;
    out.detail = "cone legs factor through the strict limit at vertex 0";
    return out;
}

} // namespace detail

struct ExtendOptions {
    std::int64_t lift_budget = default_lift_budget;
    std::int64_t hom_budget = default_hom_budget;
    ContractibilityOptions contractibility;
    const FiniteCategory* nerve_of = nullptr; ///< set when C is the nerve of this category
};

/// Builds f : K -> C from f' : K' -> C, a diagram N of weakly contractible
/// values, alpha : N -> Map[K, C] and a compatible section omega of i*N.
inline ExtensionOutcome extend_functor(const SimplicialMap& i, const SimplicialMap& f_prime, const MappingFunctor& MF,
                                       const SSetDiagram& N, const DiagramMap& alpha, const std::vector<int>& omega,
                                       const ExtendOptions& opt = {})
{
    const SimplicialSet& K = MF.diagram.base();
    const SimplexCategory& J = MF.diagram.index();
    if (!(i.target() == K) || !(f_prime.source() == i.source()) || !(f_prime.target() == MF.target.underlying()))
        throw std::invalid_argument("extend_functor: maps do not fit the mapping functor");
    if (!(alpha.source() == N) || !(alpha.target() == MF.diagram))
        throw std::invalid_argument("extend_functor: alpha must go from N to Map[K, C]");
    ExtensionOutcome out;
    // 1. weak contractibility of every value
    for (int b = 0; b < J.num_objects(); ++b) {
        ContractibilityCertificate c = contractibility(N.value(b), opt.contractibility);
        if (!c.certified())
            throw std::invalid_argument("extend_functor: value at " + describe_object(J, b) +
                                        " not certified weakly contractible (" + c.detail + ")");
        if (!revalidate(c, N.value(b), opt.contractibility.tietze_budget))
            throw std::logic_error("extend_functor: certificate failed to revalidate");
        out.certificates.push_back(std::move(c));
    }
    // 2. omega is a section of i*N with Gamma(i*alpha)(omega) = f'
    const SimplicialSet& K2 = i.source();
    const SimplexCategory J2(K2);
    const SSetDiagram iN = pullback_diagram(i, N);
    if (static_cast<int>(omega.size()) != J2.num_objects())
        throw std::invalid_argument("extend_functor: omega needs one vertex per object of the pulled-back index");
    for (int b = 0; b < J2.num_objects(); ++b) {
        const int n = J2.object(b).dim;
        for (int k = 0; n >= 1 && k <= n; ++k)
            if (iN.face_action(b, k)(0, omega[b]) != omega[J2.face_object(b, k)])
                throw std::invalid_argument("extend_functor: omega is not compatible at " + describe_object(J2, b));
        for (int k = 0; n < J2.dim_bound() && k <= n; ++k)
            if (iN.degeneracy_action(b, k)(0, omega[b]) != omega[J2.degeneracy_object(b, k)])
                throw std::invalid_argument("extend_functor: omega is not compatible at " + describe_object(J2, b));
    }
    const MappingFunctor MF2{pullback_diagram(i, MF.diagram), MF.target, MF.spaces};
    std::vector<int> image(J2.num_objects());
    for (int b = 0; b < J2.num_objects(); ++b)
        image[b] = alpha.component(pushed_object(J, i, J2, b))(0, omega[b]);
    const SimplicialMap g = section_to_map(MF2, image);
    for (int n = 0; n <= K2.dim_bound(); ++n)
        for (int x = 0; x < K2.count(n); ++x)
            if (g(n, x) != f_prime(n, x))
                throw std::invalid_argument("extend_functor: Gamma(i*alpha)(omega) differs from f' on simplex (" +
                                            std::to_string(n) + "," + std::to_string(x) + ")");
    // 3. beta : N^cone -> Map[K, C] extending alpha
    const ConeDiagram cone = cone_diagram(N);
    out.lift = injective_lift(alpha, cone.eta, opt.lift_budget);
    // 4. f = Gamma(beta)(z)
    std::vector<int> z(J.num_objects());
    for (int b = 0; b < J.num_objects(); ++b)
        z[b] = out.lift.beta.component(b)(0, cone.cone_points[b]);
    out.f = section_to_map(MF, z);
    // 5. witness: the cone edge from omega, pushed through i*beta
    out.restricted_maps = hom_sharp(flat(K2), MF.target, 1, opt.hom_budget);
    out.f_prime_vertex = vertex_of(out.restricted_maps, f_prime);
    out.f_i_vertex = vertex_of(out.restricted_maps, compose(out.f, i));
    if (out.f_prime_vertex < 0 || out.f_i_vertex < 0)
        throw std::logic_error("extend_functor: endpoints missing from the mapping complex");
    std::vector<int> edge_family(J2.num_objects());
    for (int b = 0; b < J2.num_objects(); ++b) {
        const int a = pushed_object(J, i, J2, b);
        const int leg = cone_simplex(N.value(a), 1, 0, omega[b]);
        edge_family[b] = out.lift.beta.component(a)(1, leg);
    }
    const SimplicialMap path = family_to_map(MF2, 1, edge_family);
    const int edge = out.restricted_maps.index_of(1, path);
    if (edge < 0)
        throw std::logic_error("extend_functor: witness edge is not a simplex of the mapping complex");
    const SimplicialSet& R = out.restricted_maps.space();
    if (R.face(1, 1, edge) != out.f_prime_vertex || R.face(1, 0, edge) != out.f_i_vertex)
        throw std::logic_error("extend_functor: witness edge has the wrong endpoints");
    if (!R.is_degenerate(1, edge))
        out.witness_edges.push_back(edge);
    out.connected = pi0_connected(R, out.f_prime_vertex, out.f_i_vertex);
    if (!out.connected)
        throw std::logic_error("extend_functor: f' and f . i are not connected");
    // 6. nerve targets: per-simplex limit formula
    if (opt.nerve_of) {
        for (int b = 0; b < J.num_objects(); ++b) {
            const int n = J.object(b).dim;
            out.limit_checks.push_back(detail::limit_check(*opt.nerve_of, MF.spaces[n], alpha.component(b),
                                                           out.lift.beta.component(b), N.value(b),
                                                           cone.cone_points[b], n, b));
        }
    }
    return out;
}

} // namespace sset
