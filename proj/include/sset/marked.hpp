#pragma once

// Marked simplicial sets: a simplicial set with a set of marked edges that
// contains every degenerate edge.

#include "constructions.hpp"

#include <string>
#include <vector>

namespace sset {

class MarkedSimplicialSet {
public:
    MarkedSimplicialSet() = default;

    /// marked[e] flags the 1-simplex e; degenerate edges are marked regardless.
    MarkedSimplicialSet(SimplicialSet underlying, std::vector<char> marked)
        : underlying_(std::move(underlying)), marked_(std::move(marked))
    {
        const int edges = underlying_.dim_bound() >= 1 ? underlying_.count(1) : 0;
        if (marked_.empty())
            marked_.assign(edges, 0);
        if (static_cast<int>(marked_.size()) != edges)
            throw std::invalid_argument("MarkedSimplicialSet: one flag per edge required");
        for (int e = 0; e < edges; ++e)
            if (underlying_.is_degenerate(1, e))
                marked_[e] = 1;
    }

    const SimplicialSet& underlying() const { return underlying_; }
    bool is_marked(int e) const { return marked_.at(e) != 0; }
    const std::vector<char>& marked() const { return marked_; }

    std::vector<int> marked_nondegenerate_edges() const
    {
        std::vector<int> out;
        for (int e = 0; e < static_cast<int>(marked_.size()); ++e)
            if (marked_[e] && !underlying_.is_degenerate(1, e))
                out.push_back(e);
        return out;
    }

    friend bool operator==(const MarkedSimplicialSet&, const MarkedSimplicialSet&) = default;

private:
    SimplicialSet underlying_;
    std::vector<char> marked_;
};

/// Only degenerate edges marked.
inline MarkedSimplicialSet flat(const SimplicialSet& X) { return MarkedSimplicialSet(X, {}); }

/// Every edge marked.
inline MarkedSimplicialSet sharp(const SimplicialSet& X)
{
    const int edges = X.dim_bound() >= 1 ? X.count(1) : 0;
    return MarkedSimplicialSet(X, std::vector<char>(edges, 1));
}

class MarkedMap {
public:
    MarkedMap() = default;

    MarkedMap(MarkedSimplicialSet source, MarkedSimplicialSet target, SimplicialMap map)
        : source_(std::move(source)), target_(std::move(target)), map_(std::move(map))
    {
        if (!(map_.source() == source_.underlying()) || !(map_.target() == target_.underlying()))
            throw std::invalid_argument("MarkedMap: underlying map does not match the marked sets");
        if (source_.underlying().dim_bound() >= 1)
            for (int e = 0; e < source_.underlying().count(1); ++e)
                if (source_.is_marked(e) && !target_.is_marked(map_(1, e)))
                    throw ValidationError("MarkedMap: marked edge " + std::to_string(e) +
                                          " sent to an unmarked edge");
    }

    const MarkedSimplicialSet& source() const { return source_; }
    const MarkedSimplicialSet& target() const { return target_; }
    const SimplicialMap& map() const { return map_; }

private:
    MarkedSimplicialSet source_;
    MarkedSimplicialSet target_;
    SimplicialMap map_;
};

/// Product marking: an edge is marked when both components are.
inline MarkedSimplicialSet marked_product(const MarkedSimplicialSet& A, const MarkedSimplicialSet& B)
{
    const SimplicialSet P = product(A.underlying(), B.underlying());
    std::vector<char> marks;
    if (P.dim_bound() >= 1) {
        const int nb = B.underlying().count(1);
        marks.resize(P.count(1));
        for (int a = 0; a < A.underlying().count(1); ++a)
            for (int b = 0; b < nb; ++b)
                marks[a * nb + b] = A.is_marked(a) && B.is_marked(b);
    }
    return MarkedSimplicialSet(P, std::move(marks));
}

/// The pushout-product of two marked monomorphisms f : X -> X' and g : Y -> Y',
/// i.e. X x Y' union_{X x Y} X' x Y -> X' x Y'.
inline MarkedMap pushout_product(const MarkedMap& f, const MarkedMap& g)
{
    if (!f.map().is_mono() || !g.map().is_mono())
        throw std::invalid_argument("pushout_product: both maps must be monomorphisms");
    const MarkedSimplicialSet& X = f.source();
    const MarkedSimplicialSet& X2 = f.target();
    const MarkedSimplicialSet& Y = g.source();
    const MarkedSimplicialSet& Y2 = g.target();
    const SimplicialMap idX = SimplicialMap::identity(X.underlying());
    const SimplicialMap idX2 = SimplicialMap::identity(X2.underlying());
    const SimplicialMap idY = SimplicialMap::identity(Y.underlying());
    const SimplicialMap idY2 = SimplicialMap::identity(Y2.underlying());
    const Pushout po = pushout(product_map(idX, g.map()), product_map(f.map(), idY));
    const SimplicialMap u = product_map(f.map(), idY2); // X x Y' -> X' x Y'
    const SimplicialMap v = product_map(idX2, g.map()); // X' x Y -> X' x Y'
    const MarkedSimplicialSet target = marked_product(X2, Y2);
    const int D = po.object.dim_bound();
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n)
        lv[n].assign(po.object.count(n), -1);
    auto fill = [&](const SimplicialMap& leg, const SimplicialMap& to) {
        for (int n = 0; n <= D; ++n)
            for (int s = 0; s < leg.source().count(n); ++s) {
                int& slot = lv[n][leg(n, s)];
                if (slot >= 0 && slot != to(n, s))
                    throw std::logic_error("pushout_product: induced map not well defined");
                slot = to(n, s);
            }
    };
    fill(po.leg_x, u);
    fill(po.leg_y, v);
    std::vector<char> marks;
    if (D >= 1) {
        marks.assign(po.object.count(1), 0);
        const MarkedSimplicialSet m1 = marked_product(X, Y2), m2 = marked_product(X2, Y);
        for (int e = 0; e < po.leg_x.source().count(1); ++e)
            if (m1.is_marked(e))
                marks[po.leg_x(1, e)] = 1;
        for (int e = 0; e < po.leg_y.source().count(1); ++e)
            if (m2.is_marked(e))
                marks[po.leg_y(1, e)] = 1;
    }
    SimplicialMap h(po.object, target.underlying(), std::move(lv));
    h.validate();
    return MarkedMap(MarkedSimplicialSet(po.object, std::move(marks)), target, std::move(h));
}

struct MarkedGenerator {
    int generator_class = 0; ///< 1 to 4
    std::string label;
    MarkedMap map;
};

/// Index of the edge {a, b} of Delta^n (a <= b) in standard_simplex(n, D).
inline int simplex_edge(int n, int a, int b) { return simplex_index(MonotoneMap(n, {a, b})); }

/// Concrete instances of the four generator classes of marked anodyne maps at
/// bound D, with horns up to dimension n_max. Class 4 uses the supplied Kan complexes.
inline std::vector<MarkedGenerator> marked_anodyne_generators(int n_max, int D,
                                                              const std::vector<SimplicialSet>& kan = {})
{
    if (n_max > D)
        throw std::invalid_argument("marked_anodyne_generators: n_max exceeds the dimension bound");
    std::vector<MarkedGenerator> out;
    for (int n = 2; n <= n_max; ++n)
        for (int i = 1; i < n; ++i) {
            const SimplicialMap h = horn_inclusion(n, i, D);
            out.push_back({1, "inner horn " + std::to_string(n) + "," + std::to_string(i),
                           MarkedMap(flat(h.source()), flat(h.target()), h)});
        }
    for (int n = 1; n <= n_max; ++n) {
        const SimplicialMap h = horn_inclusion(n, n, D);
        const int last = simplex_edge(n, n - 1, n);
        std::vector<char> tmarks(h.target().count(1), 0);
        tmarks[last] = 1;
        std::vector<char> smarks(h.source().count(1), 0);
        for (int e = 0; e < h.source().count(1); ++e)
            smarks[e] = tmarks[h(1, e)];
        out.push_back({2, "right horn " + std::to_string(n),
                       MarkedMap(MarkedSimplicialSet(h.source(), smarks),
                                 MarkedSimplicialSet(h.target(), tmarks), h)});
    }
    if (n_max >= 2) {
        const SimplicialSet d2 = standard_simplex(2, D);
        std::vector<char> smarks(d2.count(1), 0);
        smarks[simplex_edge(2, 0, 1)] = 1;
        smarks[simplex_edge(2, 1, 2)] = 1;
        out.push_back({3, "composite of marked edges",
                       MarkedMap(MarkedSimplicialSet(d2, smarks), sharp(d2),
                                 SimplicialMap::identity(d2))});
    }
    for (std::size_t k = 0; k < kan.size(); ++k) {
        if (kan[k].dim_bound() != D)
            throw std::invalid_argument("marked_anodyne_generators: Kan fixture has the wrong bound");
        out.push_back({4, "flat to sharp on Kan fixture " + std::to_string(k),
                       MarkedMap(flat(kan[k]), sharp(kan[k]), SimplicialMap::identity(kan[k]))});
    }
    return out;
}

} // namespace sset
