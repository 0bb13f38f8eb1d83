#pragma once

// Marked mapping complexes: the m-simplices of hom(X, C) are marked maps
// (Delta^m)' x X -> C, where (Delta^m)' is flat or sharp.

#include "marked.hpp"
#include "extension.hpp"

#include <unordered_map>
#include <vector>

namespace sset {

enum class HomKind { Flat, Sharp };

inline constexpr std::int64_t default_hom_budget = 10'000'000;

/// A mapping complex together with the maps its simplices stand for.
/// Maps are computed at the bound of C, with X re-truncated to that bound.
class MappingSpace {
public:
    MappingSpace() = default;

    const SimplicialSet& space() const { return space_; }
    const MarkedSimplicialSet& source() const { return source_; }
    const MarkedSimplicialSet& target() const { return target_; }
    HomKind kind() const { return kind_; }
    int map_bound() const { return target_.underlying().dim_bound(); }

    /// The map Delta^m x X -> C represented by the m-simplex s.
    const SimplicialMap& simplex(int m, int s) const { return maps_.at(m).at(s); }

    /// Index of a map Delta^m x X -> C, or -1 when it is not a simplex (wrong marking).
    int index_of(int m, const SimplicialMap& phi) const
    {
        auto it = index_.at(m).find(flatten(phi));
        return it == index_.at(m).end() ? -1 : it->second;
    }

    friend MappingSpace hom(const MarkedSimplicialSet& X, const MarkedSimplicialSet& C, int D, HomKind kind,
                            std::int64_t budget);

private:
    static std::vector<int> flatten(const SimplicialMap& phi)
    {
        std::vector<int> out;
        for (const auto& level : phi.levels())
            out.insert(out.end(), level.begin(), level.end());
        return out;
    }

    SimplicialSet space_;
    MarkedSimplicialSet source_;
    MarkedSimplicialSet target_;
    HomKind kind_ = HomKind::Flat;
    std::vector<std::vector<SimplicialMap>> maps_;
    std::vector<std::unordered_map<std::vector<int>, int, VectorHash>> index_;
};

/// Marked copy of X re-truncated to bound B; new edges are degenerate.
inline MarkedSimplicialSet retruncate(const MarkedSimplicialSet& X, int B)
{
    const SimplicialSet& U = X.underlying();
    const SimplicialSet R = retruncate(U, B);
    if (B < 1)
        return MarkedSimplicialSet(R, {});
    std::vector<char> marks(R.count(1), 0);
    if (U.dim_bound() >= 1) {
        // Edges of X keep their indices: re-truncation preserves the low levels.
        for (int e = 0; e < U.count(1); ++e)
            marks[e] = X.is_marked(e);
    }
    return MarkedSimplicialSet(R, std::move(marks));
}

inline MappingSpace hom(const MarkedSimplicialSet& X, const MarkedSimplicialSet& C, int D, HomKind kind,
                        std::int64_t budget = default_hom_budget)
{
    const int B = C.underlying().dim_bound();
    const MarkedSimplicialSet XB = retruncate(X, B);
    MappingSpace out;
    out.source_ = X;
    out.target_ = C;
    out.kind_ = kind;
    out.maps_.resize(D + 1);
    out.index_.resize(D + 1);
    std::int64_t remaining = budget;
    std::vector<SimplicialSet> deltas;
    for (int m = 0; m <= D; ++m) {
        const MarkedSimplicialSet dm =
            kind == HomKind::Flat ? flat(standard_simplex(m, B)) : sharp(standard_simplex(m, B));
        deltas.push_back(dm.underlying());
        const MarkedSimplicialSet P = marked_product(dm, XB);
        ExtensionProblem p{P.underlying(), C.underlying(), {},
                           [&](int n, int x, int y) { return n != 1 || !P.is_marked(x) || C.is_marked(y); },
                           false};
        detail::ExtensionSearch search(p, remaining);
        const SearchStatus st = search.run([&](const std::vector<std::vector<int>>& levels) {
            SimplicialMap phi(P.underlying(), C.underlying(), levels);
            if (!phi.is_valid())
                return true;
            out.index_[m].emplace(MappingSpace::flatten(phi), static_cast<int>(out.maps_[m].size()));
            out.maps_[m].push_back(std::move(phi));
            return true;
        });
        remaining -= search.steps();
        if (st == SearchStatus::Exhausted)
            throw BudgetExceeded("hom: enumerating maps of dimension " + std::to_string(m), budget);
    }
    const SimplicialMap idX = SimplicialMap::identity(XB.underlying());
    std::vector<int> counts(D + 1);
    for (int m = 0; m <= D; ++m)
        counts[m] = static_cast<int>(out.maps_[m].size());
    std::vector<std::vector<SimplicialSet::Table>> faces(D + 1), degens(D + 1);
    auto table = [&](int from, int to, const MonotoneMap& p) {
        const SimplicialMap pre = product_map(simplex_map(p, B), idX);
        SimplicialSet::Table t(counts[from]);
        for (int s = 0; s < counts[from]; ++s) {
            const int idx = out.index_of(to, compose(out.maps_[from][s], pre));
            if (idx < 0)
                throw std::logic_error("hom: precomposition left the mapping complex");
            t[s] = idx;
        }
        return t;
    };
    for (int m = 1; m <= D; ++m)
        for (int i = 0; i <= m; ++i)
            faces[m].push_back(table(m, m - 1, face(m, i)));
    for (int m = 0; m < D; ++m)
        for (int j = 0; j <= m; ++j)
            degens[m].push_back(table(m, m + 1, degeneracy(m, j)));
    out.space_ = SimplicialSet(D, std::move(counts), std::move(faces), std::move(degens));
    return out;
}

inline MappingSpace hom_flat(const MarkedSimplicialSet& X, const MarkedSimplicialSet& C, int D,
                             std::int64_t budget = default_hom_budget)
{
    return hom(X, C, D, HomKind::Flat, budget);
}

inline MappingSpace hom_sharp(const MarkedSimplicialSet& X, const MarkedSimplicialSet& C, int D,
                              std::int64_t budget = default_hom_budget)
{
    return hom(X, C, D, HomKind::Sharp, budget);
}

/// Precomposition with g : Y -> X, hom(X, C) -> hom(Y, C).
inline SimplicialMap precompose(const MappingSpace& HX, const MappingSpace& HY, const SimplicialMap& g)
{
    if (!(g.target() == HX.source().underlying()) || !(g.source() == HY.source().underlying()))
        throw std::invalid_argument("precompose: map does not match the mapping complexes");
    const int D = HX.space().dim_bound();
    const int B = HX.map_bound();
    const SimplicialMap gB = retruncate(g, B);
    std::vector<std::vector<int>> lv(D + 1);
    for (int m = 0; m <= D; ++m) {
        const SimplicialMap pre = product_map(SimplicialMap::identity(standard_simplex(m, B)), gB);
        for (int s = 0; s < HX.space().count(m); ++s) {
            const int idx = HY.index_of(m, compose(HX.simplex(m, s), pre));
            if (idx < 0)
                throw std::invalid_argument("precompose: map does not preserve markings");
            lv[m].push_back(idx);
        }
    }
    return SimplicialMap(HX.space(), HY.space(), std::move(lv));
}

/// Postcomposition with a marked map q : C -> C'.
inline SimplicialMap postcompose(const MappingSpace& HC, const MappingSpace& HC2, const SimplicialMap& q)
{
    const int D = HC.space().dim_bound();
    std::vector<std::vector<int>> lv(D + 1);
    for (int m = 0; m <= D; ++m)
        for (int s = 0; s < HC.space().count(m); ++s) {
            const int idx = HC2.index_of(m, compose(q, HC.simplex(m, s)));
            if (idx < 0)
                throw std::invalid_argument("postcompose: map does not preserve markings");
            lv[m].push_back(idx);
        }
    return SimplicialMap(HC.space(), HC2.space(), std::move(lv));
}

/// The vertex of hom(X, C) corresponding to a map f : X -> C.
inline int vertex_of(const MappingSpace& H, const SimplicialMap& f)
{
    const int B = H.map_bound();
    const SimplicialMap fB = retruncate(f, B);
    const SimplicialMap pr = product_projection(standard_simplex(0, B), fB.source(), 1);
    return H.index_of(0, compose(fB, pr));
}

/// The map X -> C represented by a vertex, at C's bound.
inline SimplicialMap map_of_vertex(const MappingSpace& H, int v)
{
    const int B = H.map_bound();
    const SimplicialSet XB = retruncate(H.source().underlying(), B);
    const SimplicialMap incl = pairing(to_point(XB), SimplicialMap::identity(XB));
    return compose(H.simplex(0, v), incl);
}

} // namespace sset
